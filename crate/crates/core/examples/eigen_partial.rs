//! Eigenvectors of the monodromy at infinity against the partial products,
//! and the invariant subspace against the fixed space at infinity.

use monodromy::hom::submodule_equal;
use monodromy::random::{random_tuple, InstanceRng, TupleConfig};
use monodromy::reconstruct::{eigen_partial_check, fixed_space_at_infinity, invariant_subspace};
use monodromy::ring::{format_scalar, int, RingDescriptor};
use monodromy::star::StarDecomposition;

fn main() -> monodromy::error::Result<()> {
    let dec = StarDecomposition::from_dims(RingDescriptor::PrimeField(3), 1, &[2, 2])?;
    let mut rng = InstanceRng::new(11);
    let mut found = 0;
    while found < 4 {
        let tuple = random_tuple(&mut rng, &dec, &TupleConfig::default())?;
        let m_inf = tuple.compose();
        for a in 0..3 {
            let eigen = m_inf.minus_scalar(&int(a))?.kernel()?;
            for c in 0..eigen.inclusion.matrix().cols() {
                let v = eigen.inclusion.matrix().column(c);
                let check = eigen_partial_check(&tuple, &v, &int(a))?;
                let shown: Vec<String> = v.iter().map(format_scalar).collect();
                println!("a = {a}, v = {shown:?}: M_inf v = a v is {}, partial products agree: {}", check.lhs, check.rhs);
                found += 1;
            }
        }
        let inv = invariant_subspace(&tuple)?;
        let fixed = fixed_space_at_infinity(&tuple)?;
        println!("invariants of dim {} equal Ker(M_inf - 1) of dim {}: {}", inv.group()?.free_rank(), fixed.group()?.free_rank(), submodule_equal(&inv, &fixed)?);
    }
    Ok(())
}
