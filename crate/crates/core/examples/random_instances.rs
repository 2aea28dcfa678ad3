//! Seeded random instances written in the JSON instance format.

use monodromy::instance::InstanceFile;
use monodromy::random::{random_tuple, torsion_summand_menu, InstanceRng, TupleConfig};
use monodromy::ring::RingDescriptor;
use monodromy::star::StarDecomposition;

fn main() -> monodromy::error::Result<()> {
    let mut rng = InstanceRng::new(1234567);
    println!("first draws: {} {}", rng.next_u64(), rng.next_u64());

    let menu = torsion_summand_menu();
    let summands = (0..3).map(|_| rng.pick(&menu).clone()).collect();
    let dec = StarDecomposition::new(RingDescriptor::Integers, 1, summands)?;
    let tuple = random_tuple(&mut rng, &dec, &TupleConfig::default())?;
    let file = InstanceFile::from_tuple(&tuple);
    let text = file.to_json(true);
    println!("{text}");
    let parsed = InstanceFile::parse(&text)?;
    assert_eq!(parsed.to_json(true), text);
    Ok(())
}
