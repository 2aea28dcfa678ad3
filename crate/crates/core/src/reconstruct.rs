//! Recovering the local monodromies from the monodromy at infinity.
//!
//! Write `m' = m_{k-1} ∘ ... ∘ m_1` and `m'' = m_t ∘ ... ∘ m_{k+1}`, so that
//! `M∞ = m'' ∘ m_k ∘ m'`. The operator `m''` does not touch the first `k`
//! components, hence `p_k ∘ m_k = p_k ∘ M∞ ∘ m'⁻¹`, and `m_k` is the identity
//! away from block row `k`. Sweeping `k = 1, ..., t` therefore determines the
//! whole tuple from `M∞` and the decomposition.

use crate::error::{Error, Result};
use crate::hom::{ModuleHom, Submodule};
use crate::ring::Scalar;
use crate::star::{BlockRowOperator, MonodromyTuple, StarDecomposition};

/// The unique tuple of block-row operators composing to `m`.
///
/// Fails with [`Error::NotRealizable`] at the first position whose diagonal
/// block is not an automorphism.
pub fn reconstruct_tuple(m: &ModuleHom, decomposition: &StarDecomposition) -> Result<MonodromyTuple> {
    if m.source() != decomposition.total() || m.target() != decomposition.total() || *m.ring() != decomposition.hom_ring() {
        return Err(Error::ShapeMismatch("operator does not act on the total group".into()));
    }
    // remainder = M ∘ (m_{k-1} ∘ ... ∘ m_1)⁻¹, updated one inverse at a time
    let mut remainder = m.clone();
    let mut operators = Vec::with_capacity(decomposition.len());
    for k in 0..decomposition.len() {
        let op = match BlockRowOperator::from_row_of(decomposition.clone(), k, &remainder) {
            Ok(op) => op,
            Err(Error::DiagonalBlockNotInvertible { .. }) => return Err(Error::NotRealizable { k: k + 1 }),
            Err(e) => return Err(e),
        };
        remainder = op.inverse()?.compose_before(&remainder)?;
        operators.push(op);
    }
    debug_assert!(remainder.is_identity(), "invertible diagonal blocks force an exact factorization");
    MonodromyTuple::new(decomposition.clone(), operators)
}

/// `[Id, m_1, m_2 ∘ m_1, ..., m_t ∘ ... ∘ m_1]`.
pub fn partial_products(tuple: &MonodromyTuple) -> Vec<ModuleHom> {
    let mut out = Vec::with_capacity(tuple.len() + 1);
    let mut acc = tuple.decomposition().identity();
    out.push(acc.clone());
    for op in tuple.operators() {
        acc = op.compose_after(&acc).expect("same total group");
        out.push(acc.clone());
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EigenCheck {
    /// `M∞(v) = a·v`.
    pub lhs: bool,
    /// For every `k`, `m_k ∘ ... ∘ m_1 (v) = (a v_1, ..., a v_k, v_{k+1}, ..., v_t)`.
    pub rhs: bool,
}

/// Evaluates both sides of the eigenvector characterisation independently:
/// the left side through the composed operator, the right side by pushing `v`
/// through the local operators one at a time.
pub fn eigen_partial_check(tuple: &MonodromyTuple, v: &[Scalar], a: &Scalar) -> Result<EigenCheck> {
    let dec = tuple.decomposition();
    let ring = dec.hom_ring();
    let a = ring.canonical(a)?;
    let v = dec.element(v)?;
    let scaled: Vec<Scalar> = dec.total().reduce(&v.iter().map(|x| ring.mul(&a, x)).collect::<Vec<_>>());

    let lhs = tuple.compose().apply(&v)? == scaled;

    let mut w = v.clone();
    let mut rhs = true;
    for (k, op) in tuple.operators().iter().enumerate() {
        w = op.apply(&w)?;
        let split = dec.range(k).end;
        let expected: Vec<Scalar> = scaled[..split].iter().chain(&v[split..]).cloned().collect();
        if w != expected {
            rhs = false;
            break;
        }
    }
    Ok(EigenCheck { lhs, rhs })
}

/// `∩_j Ker(m_j - Id)`, the classes fixed by the whole representation.
///
/// `m_j - Id` vanishes outside block row `j`, so the intersection is the
/// kernel of the map stacking the defect rows.
pub fn invariant_subspace(tuple: &MonodromyTuple) -> Result<Submodule> {
    let dec = tuple.decomposition();
    let n = dec.total().len();
    let mut stacked = crate::matrix::ExactMatrix::zeros(dec.hom_ring(), n, n);
    for (k, op) in tuple.operators().iter().enumerate() {
        stacked.paste(dec.range(k).start, 0, op.defect_row().matrix());
    }
    let h = ModuleHom::new(dec.hom_ring(), dec.total().clone(), dec.total().clone(), stacked)?;
    Ok(Submodule::from_embedding(&h.kernel()?))
}

/// `Ker(M∞ - Id)`.
pub fn fixed_space_at_infinity(tuple: &MonodromyTuple) -> Result<Submodule> {
    let shifted = tuple.compose().minus_scalar(&Scalar::from_integer(1.into()))?;
    Ok(Submodule::from_embedding(&shifted.kernel()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FgAbelianGroup;
    use crate::hom::submodule_equal;
    use crate::matrix::ExactMatrix;
    use crate::ring::{int, RingDescriptor};

    fn q_pair_tuple() -> MonodromyTuple {
        let q = RingDescriptor::Rationals;
        let dec = StarDecomposition::from_dims(q.clone(), 1, &[1, 1]).unwrap();
        let h = |v: i64| {
            let g = dec.summand(0).clone();
            ModuleHom::new(q.clone(), g.clone(), g, ExactMatrix::from_i64(q.clone(), &[&[v]]).unwrap()).unwrap()
        };
        let m1 = BlockRowOperator::new(dec.clone(), 0, vec![h(2), h(5)]).unwrap();
        let m2 = BlockRowOperator::new(dec.clone(), 1, vec![h(3), h(4)]).unwrap();
        MonodromyTuple::new(dec, vec![m1, m2]).unwrap()
    }

    fn full(dec: &StarDecomposition, rows: &[&[i64]]) -> ModuleHom {
        let ring = dec.hom_ring();
        ModuleHom::new(ring.clone(), dec.total().clone(), dec.total().clone(), ExactMatrix::from_i64(ring, rows).unwrap()).unwrap()
    }

    #[test]
    fn two_by_two_roundtrip() {
        let tuple = q_pair_tuple();
        let dec = tuple.decomposition().clone();
        let m = full(&dec, &[&[2, 5], &[6, 19]]);
        assert_eq!(tuple.compose(), m);
        assert_eq!(reconstruct_tuple(&m, &dec).unwrap(), tuple);
    }

    #[test]
    fn swap_is_not_realizable() {
        let dec = StarDecomposition::from_dims(RingDescriptor::Rationals, 1, &[1, 1]).unwrap();
        let m = full(&dec, &[&[0, 1], &[1, 0]]);
        assert_eq!(reconstruct_tuple(&m, &dec).unwrap_err(), Error::NotRealizable { k: 1 });
    }

    #[test]
    fn identity_and_single_point() {
        let dec = StarDecomposition::from_dims(RingDescriptor::Integers, 0, &[2, 1, 1]).unwrap();
        let t = reconstruct_tuple(&dec.identity(), &dec).unwrap();
        assert!(t.operators().iter().all(BlockRowOperator::is_identity));
        let one = StarDecomposition::from_dims(RingDescriptor::Integers, 0, &[2]).unwrap();
        let m = full(&one, &[&[2, 1], &[1, 1]]);
        let t = reconstruct_tuple(&m, &one).unwrap();
        assert_eq!(t.operators()[0].to_full_operator(), &m);
    }

    #[test]
    fn partial_products_of_pair() {
        let tuple = q_pair_tuple();
        let dec = tuple.decomposition().clone();
        let pp = partial_products(&tuple);
        assert_eq!(pp.len(), 3);
        assert!(pp[0].is_identity());
        assert_eq!(pp[1], full(&dec, &[&[2, 5], &[0, 1]]));
        assert_eq!(pp[2], full(&dec, &[&[2, 5], &[6, 19]]));
    }

    #[test]
    fn eigen_checks() {
        let tuple = q_pair_tuple();
        let c = eigen_partial_check(&tuple, &[int(1), int(0)], &int(2)).unwrap();
        assert_eq!(c, EigenCheck { lhs: false, rhs: false });
        let c = eigen_partial_check(&tuple, &[int(0), int(0)], &int(7)).unwrap();
        assert_eq!(c, EigenCheck { lhs: true, rhs: true });
        let id = MonodromyTuple::identity(tuple.decomposition().clone()).unwrap();
        let c = eigen_partial_check(&id, &[int(3), int(-1)], &int(1)).unwrap();
        assert_eq!(c, EigenCheck { lhs: true, rhs: true });
    }

    #[test]
    fn invariants_of_z3_example() {
        let dec = StarDecomposition::new(RingDescriptor::Integers, 1, vec![FgAbelianGroup::cyclic(3).unwrap()]).unwrap();
        let m = full(&dec, &[&[2]]);
        let tuple = reconstruct_tuple(&m, &dec).unwrap();
        let inv = invariant_subspace(&tuple).unwrap();
        let fix = fixed_space_at_infinity(&tuple).unwrap();
        assert!(inv.group().unwrap().is_trivial());
        assert!(fix.group().unwrap().is_trivial());
        assert!(submodule_equal(&inv, &fix).unwrap());
    }

    #[test]
    fn invariants_of_pair_agree() {
        let tuple = q_pair_tuple();
        let inv = invariant_subspace(&tuple).unwrap();
        let fix = fixed_space_at_infinity(&tuple).unwrap();
        assert!(submodule_equal(&inv, &fix).unwrap());
        let id = MonodromyTuple::identity(tuple.decomposition().clone()).unwrap();
        assert_eq!(invariant_subspace(&id).unwrap().group().unwrap(), FgAbelianGroup::free(2));
    }
}
