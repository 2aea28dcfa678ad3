//! Cohomological monodromy by duality and the dimension chain between
//! invariants and fixed spaces at infinity.

use monodromy::duality::{dimension_chain, dualize_tuple, general_position_report, search_strict_witness};
use monodromy::random::{random_tuple, InstanceRng, TupleConfig};
use monodromy::ring::RingDescriptor;
use monodromy::star::StarDecomposition;

fn main() -> monodromy::error::Result<()> {
    let dec = StarDecomposition::from_dims(RingDescriptor::Rationals, 1, &[2, 1, 2])?;
    let tuple = random_tuple(&mut InstanceRng::new(3), &dec, &TupleConfig::default())?;
    let dual = dualize_tuple(&tuple)?;
    println!("M_inf^q =\n{}", dual.at_infinity.matrix());
    println!("composite of duals agrees: {}", dual.compose() == dual.at_infinity);
    println!("{:?}", dimension_chain(&tuple)?);
    println!("general position failures: {:?}", general_position_report(&tuple)?.failures);

    let small = StarDecomposition::from_dims(RingDescriptor::Rationals, 1, &[2, 2])?;
    if let Some((witness, chain, trial)) = search_strict_witness(&small, 1, 10_000)? {
        println!("strict inclusion after {trial} trials: {chain:?}");
        println!("M_inf =\n{}", witness.compose().matrix());
    }
    Ok(())
}
