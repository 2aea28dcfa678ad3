//! Evaluating free group words on a monodromy tuple.

use monodromy::random::{random_tuple, InstanceRng, TupleConfig};
use monodromy::ring::RingDescriptor;
use monodromy::star::{FreeGroupWord, StarDecomposition};

fn main() -> monodromy::error::Result<()> {
    let dec = StarDecomposition::from_dims(RingDescriptor::PrimeField(5), 1, &[1, 1, 1])?;
    let tuple = random_tuple(&mut InstanceRng::new(7), &dec, &TupleConfig::default())?;
    let w = FreeGroupWord::new([(1, 1), (2, -1), (3, 1)])?;
    println!("{w} acts as\n{}", tuple.evaluate_word(&w)?.matrix());
    let trivial = w.concat(&w.inverse());
    println!("{trivial} is the identity: {}", tuple.evaluate_word(&trivial)?.is_identity());
    let loop_inf = FreeGroupWord::loop_at_infinity(tuple.len());
    println!("{loop_inf} gives M_inf: {}", tuple.evaluate_word(&loop_inf)? == tuple.compose());
    Ok(())
}
