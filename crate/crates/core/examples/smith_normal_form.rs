//! Smith normal form of an integer matrix and the abelian group it presents.

use monodromy::group::FgAbelianGroup;
use monodromy::matrix::ExactMatrix;
use monodromy::ring::RingDescriptor;
use monodromy::snf::{invariant_factors, smith_normal_form};

fn main() -> monodromy::error::Result<()> {
    let a = ExactMatrix::from_i64(RingDescriptor::Integers, &[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])?;
    let (u, d, v) = smith_normal_form(&a)?;
    println!("A =\n{a}\nU =\n{u}\nD =\n{d}\nV =\n{v}");
    assert_eq!(u.mul(&d)?.mul(&v)?, a);

    let factors = invariant_factors(&a)?;
    println!("invariant factors: {factors:?}");
    // the cokernel of A is Z^3 / A Z^3
    println!("Z^3 / im A = {}", FgAbelianGroup::from_cyclic_orders(&factors));
    Ok(())
}
