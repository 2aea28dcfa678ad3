//! Cohomology-side monodromy.
//!
//! Cohomology operators act on functionals so that `⟨m*φ, m v⟩ = ⟨φ, v⟩`,
//! which makes the matrix of `m*` in the dual basis the inverse transpose
//! `(mᵗ)⁻¹`. This only makes sense without torsion.

use crate::error::{Error, Result};
use crate::hom::ModuleHom;
use crate::matrix::ExactMatrix;
use crate::random::{random_tuple, InstanceRng, TupleConfig};
use crate::reconstruct::{fixed_space_at_infinity, invariant_subspace};
use crate::ring::{RingDescriptor, Scalar};
use crate::star::{BlockRowOperator, MonodromyTuple, StarDecomposition};

/// `(mᵗ)⁻¹` for an automorphism of a torsion-free group or vector space.
pub fn dualize_operator(m: &ModuleHom) -> Result<ModuleHom> {
    if !m.is_endomorphism() {
        return Err(Error::ShapeMismatch("dualizing a non-endomorphism".into()));
    }
    m.transpose()?.invert()
}

/// The dual operators `m_1*, ..., m_t*` together with the dual of `M∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyTuple {
    pub operators: Vec<ModuleHom>,
    pub at_infinity: ModuleHom,
}

impl CohomologyTuple {
    /// `m_t* ∘ ... ∘ m_1*`, which agrees with `at_infinity`: transposing and
    /// inverting both reverse the order of a composite.
    pub fn compose(&self) -> ModuleHom {
        let mut acc = self.at_infinity.clone();
        if let Some(first) = self.operators.first() {
            acc = first.clone();
            for op in &self.operators[1..] {
                acc = op.compose(&acc).expect("same group");
            }
        }
        acc
    }
}

pub fn dualize_tuple(tuple: &MonodromyTuple) -> Result<CohomologyTuple> {
    if !tuple.decomposition().total().is_torsion_free() {
        return Err(Error::TorsionPresent);
    }
    let operators = tuple
        .operators()
        .iter()
        .map(|op| dualize_operator(op.to_full_operator()))
        .collect::<Result<Vec<_>>>()?;
    let at_infinity = dualize_operator(&tuple.compose())?;
    Ok(CohomologyTuple { operators, at_infinity })
}

/// The tuple induced on `H / torsion`, tensored with the rationals. For a
/// tuple over a field this is the tuple itself.
pub fn rational_shadow(tuple: &MonodromyTuple) -> Result<MonodromyTuple> {
    let dec = tuple.decomposition();
    if dec.hom_ring().is_field() {
        return Ok(tuple.clone());
    }
    let q = RingDescriptor::Rationals;
    let ranks: Vec<usize> = dec.summands().iter().map(|g| g.free_rank()).collect();
    let shadow = StarDecomposition::from_dims(q.clone(), dec.degree(), &ranks)?;
    // canonical summands list torsion generators first, so the free
    // coordinates of each summand are the trailing ones
    let free = |i: usize| dec.range(i).end - ranks[i]..dec.range(i).end;
    let operators = tuple
        .operators()
        .iter()
        .enumerate()
        .map(|(k, op)| {
            let blocks = (0..dec.len())
                .map(|i| {
                    let b = op.to_full_operator().block(free(k), free(i));
                    let m = ExactMatrix::new(q.clone(), ranks[k], ranks[i], b.matrix().entries().to_vec())?;
                    ModuleHom::new(q.clone(), shadow.summand(i).clone(), shadow.summand(k).clone(), m)
                })
                .collect::<Result<Vec<_>>>()?;
            BlockRowOperator::new(shadow.clone(), k, blocks)
        })
        .collect::<Result<Vec<_>>>()?;
    MonodromyTuple::new(shadow, operators)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionChain {
    pub dim_inv_homology: usize,
    pub dim_ker_minf_homology: usize,
    pub dim_ker_minf_cohomology: usize,
    pub dim_inv_cohomology: usize,
    /// `(dim Ker(m_k - 1), dim Ker(m_k* - 1))` for each `k`.
    pub per_operator: Vec<(usize, usize)>,
}

impl DimensionChain {
    /// The three equalities and the inequality of the chain, plus the
    /// per-operator equalities.
    pub fn holds(&self) -> bool {
        self.dim_inv_homology == self.dim_ker_minf_homology
            && self.dim_ker_minf_homology == self.dim_ker_minf_cohomology
            && self.dim_ker_minf_cohomology >= self.dim_inv_cohomology
            && self.per_operator.iter().all(|(a, b)| a == b)
    }

    pub fn is_strict(&self) -> bool {
        self.dim_ker_minf_cohomology > self.dim_inv_cohomology
    }
}

fn nullity(m: &ExactMatrix) -> Result<usize> {
    Ok(m.cols() - m.rank()?)
}

fn one() -> Scalar {
    Scalar::from_integer(1.into())
}

/// `m - Id` for every `m`, stacked vertically.
fn stacked_shifts(ops: &[ModuleHom], n: usize, ring: &RingDescriptor) -> Result<ExactMatrix> {
    let mut stacked = ExactMatrix::zeros(ring.clone(), n * ops.len(), n);
    for (k, op) in ops.iter().enumerate() {
        stacked.paste(k * n, 0, op.minus_scalar(&one())?.matrix());
    }
    Ok(stacked)
}

/// Dimensions of the homology and cohomology invariants and fixed spaces of
/// a tuple over a field.
pub fn dimension_chain(tuple: &MonodromyTuple) -> Result<DimensionChain> {
    let dec = tuple.decomposition();
    let ring = dec.hom_ring();
    if !ring.is_field() {
        return Err(Error::FieldRequired("dimension chain".into()));
    }
    let n = dec.total().len();
    let dual = dualize_tuple(tuple)?;
    let per_operator = tuple
        .operators()
        .iter()
        .zip(&dual.operators)
        .map(|(op, d)| {
            let a = nullity(op.to_full_operator().minus_scalar(&one())?.matrix())?;
            let b = nullity(d.minus_scalar(&one())?.matrix())?;
            Ok((a, b))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DimensionChain {
        dim_inv_homology: invariant_subspace(tuple)?.group()?.free_rank(),
        dim_ker_minf_homology: fixed_space_at_infinity(tuple)?.group()?.free_rank(),
        dim_ker_minf_cohomology: nullity(dual.at_infinity.minus_scalar(&one())?.matrix())?,
        dim_inv_cohomology: if dual.operators.is_empty() { n } else { nullity(&stacked_shifts(&dual.operators, n, &ring)?)? },
        per_operator,
    })
}

/// General position of the subspaces `K_k = Ker(m_k* - 1)`: every
/// intersection of a subfamily has the expected codimension
/// `min(n, Σ codim K_k)`. A report only; arbitrary tuples need not satisfy it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralPositionReport {
    pub kernel_dims: Vec<usize>,
    /// Subfamilies (0-based indices) whose intersection is too large.
    pub failures: Vec<Vec<usize>>,
}

impl GeneralPositionReport {
    pub fn in_general_position(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Subfamilies are enumerated exhaustively, so `t` is capped at 16.
pub fn general_position_report(tuple: &MonodromyTuple) -> Result<GeneralPositionReport> {
    let dec = tuple.decomposition();
    let ring = dec.hom_ring();
    if !ring.is_field() {
        return Err(Error::FieldRequired("general position report".into()));
    }
    let t = tuple.len();
    if t > 16 {
        return Err(Error::ShapeMismatch("too many operators for an exhaustive report".into()));
    }
    let n = dec.total().len();
    let dual = dualize_tuple(tuple)?;
    let shifts = dual.operators.iter().map(|d| d.minus_scalar(&one())).collect::<Result<Vec<_>>>()?;
    let kernel_dims = shifts.iter().map(|s| nullity(s.matrix())).collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    for mask in 1u32..(1 << t) {
        let subset: Vec<usize> = (0..t).filter(|k| mask & (1 << k) != 0).collect();
        if subset.len() < 2 {
            continue;
        }
        let chosen: Vec<ModuleHom> = subset.iter().map(|&k| dual.operators[k].clone()).collect();
        let dim = nullity(&stacked_shifts(&chosen, n, &ring)?)?;
        let codim: usize = subset.iter().map(|&k| n - kernel_dims[k]).sum();
        if n - dim < codim.min(n) {
            failures.push(subset);
        }
    }
    Ok(GeneralPositionReport { kernel_dims, failures })
}

/// Draws random tuples on `decomposition` until one has strictly fewer
/// cohomology invariants than cohomology classes fixed at infinity. Returns
/// the witness with its chain and the 1-based trial number.
pub fn search_strict_witness(
    decomposition: &StarDecomposition,
    seed: u64,
    budget: usize,
) -> Result<Option<(MonodromyTuple, DimensionChain, usize)>> {
    let mut rng = InstanceRng::new(seed);
    let config = TupleConfig::default();
    for trial in 1..=budget {
        let tuple = random_tuple(&mut rng, decomposition, &config)?;
        let chain = dimension_chain(&tuple)?;
        if chain.is_strict() {
            return Ok(Some((tuple, chain, trial)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{CyclicSum, FgAbelianGroup};
    use crate::ring::int;

    fn q_matrix(rows: &[&[i64]]) -> ModuleHom {
        let q = RingDescriptor::Rationals;
        let g = CyclicSum::free(rows.len());
        ModuleHom::new(q.clone(), g.clone(), g, ExactMatrix::from_i64(q, rows).unwrap()).unwrap()
    }

    #[test]
    fn inverse_transpose_of_upper_triangular() {
        let d = dualize_operator(&q_matrix(&[&[2, 5], &[0, 1]])).unwrap();
        let half = int(1) / int(2);
        assert_eq!(d.matrix().to_rows(), vec![vec![half.clone(), int(0)], vec![-int(5) * half, int(1)]]);
        assert_eq!(dualize_operator(&d).unwrap(), q_matrix(&[&[2, 5], &[0, 1]]));
    }

    #[test]
    fn torsion_is_refused() {
        let g = FgAbelianGroup::cyclic(3).unwrap().as_cyclic_sum();
        let m = ModuleHom::new(RingDescriptor::Integers, g.clone(), g, ExactMatrix::from_i64(RingDescriptor::Integers, &[&[2]]).unwrap()).unwrap();
        assert_eq!(dualize_operator(&m).unwrap_err(), Error::TorsionPresent);
    }

    #[test]
    fn shadow_drops_torsion() {
        let z = RingDescriptor::Integers;
        let g = |f: usize, t: &[u64]| FgAbelianGroup::new(f, t.iter().map(|&d| d.into()).collect()).unwrap();
        let dec = StarDecomposition::new(z.clone(), 1, vec![g(1, &[2]), g(1, &[])]).unwrap();
        let m = ModuleHom::new(
            z.clone(),
            dec.total().clone(),
            dec.total().clone(),
            ExactMatrix::from_i64(z, &[&[1, 1, 1], &[0, -1, 3], &[0, 0, 1]]).unwrap(),
        )
        .unwrap();
        let t = crate::reconstruct::reconstruct_tuple(&m, &dec).unwrap();
        let shadow = rational_shadow(&t).unwrap();
        assert_eq!(shadow.compose(), q_matrix(&[&[-1, 3], &[0, 1]]));
    }

    #[test]
    fn identity_chain() {
        let dec = StarDecomposition::from_dims(RingDescriptor::Rationals, 1, &[2, 1]).unwrap();
        let chain = dimension_chain(&MonodromyTuple::identity(dec).unwrap()).unwrap();
        assert_eq!(
            (chain.dim_inv_homology, chain.dim_ker_minf_homology, chain.dim_ker_minf_cohomology, chain.dim_inv_cohomology),
            (3, 3, 3, 3)
        );
    }

    #[test]
    fn single_operator_chain_collapses() {
        let dec = StarDecomposition::from_dims(RingDescriptor::Rationals, 1, &[2]).unwrap();
        let op = BlockRowOperator::new(dec.clone(), 0, vec![q_matrix(&[&[1, 1], &[0, 1]])]).unwrap();
        let chain = dimension_chain(&MonodromyTuple::new(dec, vec![op]).unwrap()).unwrap();
        assert!(chain.holds());
        assert_eq!(chain.dim_inv_cohomology, 1);
        assert_eq!(chain.dim_ker_minf_cohomology, 1);
    }

    #[test]
    fn strict_witness_is_found() {
        let dec = StarDecomposition::from_dims(RingDescriptor::Rationals, 1, &[2, 2]).unwrap();
        let (tuple, chain, _) = search_strict_witness(&dec, 1, 10_000).unwrap().expect("witness");
        assert!(chain.holds() && chain.is_strict());
        assert_eq!(dualize_tuple(&tuple).unwrap().compose(), dualize_operator(&tuple.compose()).unwrap());
    }
}
