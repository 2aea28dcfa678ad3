//! Star decompositions, block-row operators and monodromy tuples.
//!
//! A star with base point `c0` and end points `b_1, ..., b_t` splits the
//! reduced homology of the generic fiber into vanishing-cycle summands
//! `V_1 ⊕ ... ⊕ V_t`, in the counterclockwise order of the paths. The local
//! monodromy `m_j` around `b_j` moves a class only inside `V_j`, so in that
//! splitting it is the identity except on its `j`-th block row:
//!
//! ```text
//!        | 1                            |
//! m_j =  | m_j1 ... m_jj ... m_jt       |   (row j)
//!        |                            1 |
//! ```
//!
//! with `m_ji(a) = m_j(a) - a` off the diagonal and `m_jj(a) = m_j(a)`.
//!
//! Loops compose right to left: `a·b` runs `b` first. Hence the monodromy at
//! infinity is `M∞ = m_t ∘ ... ∘ m_1` and a word `w = l_1 l_2 ... l_r`
//! evaluates to `ρ(l_1) ∘ ρ(l_2) ∘ ... ∘ ρ(l_r)`.
//!
//! Positions in the star are 0-based in this API except in [`FreeGroupWord`],
//! whose letters name generators `γ_1, ..., γ_t`.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group::{CyclicSum, FgAbelianGroup};
use crate::hom::ModuleHom;
use crate::matrix::ExactMatrix;
use crate::ring::{RingDescriptor, Scalar};

/// The ordered splitting `H̃_q(F) = V_1 ⊕ ... ⊕ V_t` attached to a star.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarDecomposition {
    ring: RingDescriptor,
    degree: u32,
    summands: Vec<FgAbelianGroup>,
    parts: Vec<CyclicSum>,
    offsets: Vec<usize>,
    total: CyclicSum,
}

impl StarDecomposition {
    pub fn new(ring: RingDescriptor, degree: u32, summands: Vec<FgAbelianGroup>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::InvalidGroup("a star needs at least one end point".into()));
        }
        for (i, s) in summands.iter().enumerate() {
            let ok = match &ring {
                RingDescriptor::Integers => true,
                RingDescriptor::Rationals | RingDescriptor::PrimeField(_) => s.is_torsion_free(),
                RingDescriptor::IntegersMod(n) => {
                    s.free_rank() == 0 && s.invariant_factors().iter().all(|d| *d == BigInt::from(*n))
                }
            };
            if !ok {
                return Err(Error::InvalidGroup(format!("summand {} = {s} is not a module over {ring}", i + 1)));
            }
        }
        let parts: Vec<CyclicSum> = summands.iter().map(FgAbelianGroup::as_cyclic_sum).collect();
        let mut offsets = Vec::with_capacity(parts.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for p in &parts {
            acc += p.len();
            offsets.push(acc);
        }
        let total = CyclicSum::direct_sum(&parts);
        Ok(Self { ring, degree, summands, parts, offsets, total })
    }

    /// Summands given by dimension: `K^d` over a field, `Z^d` over `Z` and
    /// `(Z/n)^d` over `Z/n`.
    pub fn from_dims(ring: RingDescriptor, degree: u32, dims: &[usize]) -> Result<Self> {
        let summands = dims
            .iter()
            .map(|&d| match &ring {
                RingDescriptor::IntegersMod(n) => FgAbelianGroup::new(0, vec![BigInt::from(*n); d]),
                _ => Ok(FgAbelianGroup::free(d)),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, degree, summands)
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    /// Ring over which the operators are computed.
    pub fn hom_ring(&self) -> RingDescriptor {
        self.ring.hom_ring()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of end points `t`.
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn summands(&self) -> &[FgAbelianGroup] {
        &self.summands
    }

    pub fn summand(&self, i: usize) -> &CyclicSum {
        &self.parts[i]
    }

    /// Generator count of each summand (the dimension over a field).
    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(CyclicSum::len).collect()
    }

    pub fn range(&self, i: usize) -> Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }

    pub fn total(&self) -> &CyclicSum {
        &self.total
    }

    pub fn total_group(&self) -> FgAbelianGroup {
        self.total.canonical()
    }

    pub fn identity(&self) -> ModuleHom {
        ModuleHom::identity(self.hom_ring(), self.total.clone())
    }

    /// Canonical form of an element of the total group.
    pub fn element(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.total.len() {
            return Err(Error::ShapeMismatch(format!(
                "element of length {} for a total group with {} generators",
                v.len(),
                self.total.len()
            )));
        }
        let ring = self.hom_ring();
        let v = v.iter().map(|x| ring.canonical(x)).collect::<Result<Vec<_>>>()?;
        Ok(self.total.reduce(&v))
    }

    /// Component of an element in summand `i` (the projection `p_i`).
    pub fn component<'a>(&self, v: &'a [Scalar], i: usize) -> &'a [Scalar] {
        &v[self.range(i)]
    }

    fn check_operator(&self, m: &ModuleHom) -> Result<()> {
        if m.source() != &self.total || m.target() != &self.total || *m.ring() != self.hom_ring() {
            return Err(Error::ShapeMismatch("operator does not act on the total group".into()));
        }
        Ok(())
    }
}

/// Local monodromy in block form: identity away from block row `row`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockRowOperator {
    decomposition: StarDecomposition,
    row: usize,
    blocks: Vec<ModuleHom>,
    full: ModuleHom,
}

impl BlockRowOperator {
    /// `blocks[i]` is `m_{row,i} : V_i → V_row`; the diagonal block must be an
    /// automorphism.
    pub fn new(decomposition: StarDecomposition, row: usize, blocks: Vec<ModuleHom>) -> Result<Self> {
        let t = decomposition.len();
        if row >= t || blocks.len() != t {
            return Err(Error::ShapeMismatch(format!("row {} with {} blocks in a star of {t}", row + 1, blocks.len())));
        }
        let ring = decomposition.hom_ring();
        for (i, b) in blocks.iter().enumerate() {
            if b.source() != decomposition.summand(i) || b.target() != decomposition.summand(row) || *b.ring() != ring {
                return Err(Error::ShapeMismatch(format!("block ({}, {}) has the wrong source or target", row + 1, i + 1)));
            }
        }
        if !blocks[row].is_automorphism()? {
            return Err(Error::DiagonalBlockNotInvertible { row: row + 1 });
        }
        let full = Self::expand(&decomposition, row, &blocks);
        Ok(Self { decomposition, row, blocks, full })
    }

    /// Block row `row` read off an operator on the total group.
    pub fn from_row_of(decomposition: StarDecomposition, row: usize, m: &ModuleHom) -> Result<Self> {
        decomposition.check_operator(m)?;
        let rows = decomposition.range(row);
        let blocks = (0..decomposition.len()).map(|i| m.block(rows.clone(), decomposition.range(i))).collect();
        Self::new(decomposition, row, blocks)
    }

    pub fn identity(decomposition: StarDecomposition, row: usize) -> Result<Self> {
        let ring = decomposition.hom_ring();
        let blocks = (0..decomposition.len())
            .map(|i| {
                let (src, tgt) = (decomposition.summand(i).clone(), decomposition.summand(row).clone());
                if i == row { ModuleHom::identity(ring.clone(), src) } else { ModuleHom::zero(ring.clone(), src, tgt) }
            })
            .collect();
        Self::new(decomposition, row, blocks)
    }

    fn expand(dec: &StarDecomposition, row: usize, blocks: &[ModuleHom]) -> ModuleHom {
        let ring = dec.hom_ring();
        let n = dec.total().len();
        let mut m = ExactMatrix::identity(ring.clone(), n);
        let r0 = dec.range(row).start;
        for (i, b) in blocks.iter().enumerate() {
            // off the diagonal m_j(a_i) = a_i + m_ji(a_i), and a_i already sits in row block i
            m.paste(r0, dec.range(i).start, b.matrix());
        }
        ModuleHom::new(ring, dec.total().clone(), dec.total().clone(), m).expect("block operator is well defined")
    }

    pub fn decomposition(&self) -> &StarDecomposition {
        &self.decomposition
    }

    /// 0-based position in the star.
    pub fn row(&self) -> usize {
        self.row
    }

    pub fn blocks(&self) -> &[ModuleHom] {
        &self.blocks
    }

    pub fn diagonal(&self) -> &ModuleHom {
        &self.blocks[self.row]
    }

    /// The operator on the total group.
    pub fn to_full_operator(&self) -> &ModuleHom {
        &self.full
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let v = self.decomposition.element(v)?;
        self.full.apply(&v)
    }

    /// `p_row ∘ (m - Id)`: the map from the total group into `V_row` whose
    /// image is `Im(m - 1)`.
    pub fn defect_row(&self) -> ModuleHom {
        let id = self.decomposition.identity();
        let d = self.full.sub(&id).expect("same shape");
        d.block(self.decomposition.range(self.row), 0..self.decomposition.total().len())
    }

    pub fn is_identity(&self) -> bool {
        self.full.is_identity()
    }

    /// The inverse is again block-row: diagonal `m_jj⁻¹`, off-diagonal
    /// `-m_jj⁻¹ ∘ m_ji`.
    pub fn inverse(&self) -> Result<Self> {
        let d_inv = self.diagonal().invert()?;
        let blocks = self
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                if i == self.row {
                    Ok(d_inv.clone())
                } else {
                    d_inv.compose(b)?.scale(&Scalar::from_integer((-1).into()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let full = Self::expand(&self.decomposition, self.row, &blocks);
        Ok(Self { decomposition: self.decomposition.clone(), row: self.row, blocks, full })
    }

    /// `self ∘ x`. Only the rows of block `row` change.
    pub fn compose_after(&self, x: &ModuleHom) -> Result<ModuleHom> {
        self.decomposition.check_operator(x)?;
        let dec = &self.decomposition;
        let n = dec.total().len();
        let rows = dec.range(self.row);
        let strip = self.full.matrix().submatrix(rows.clone(), 0..n);
        let new_rows = strip.mul(x.matrix())?;
        let mut m = x.matrix().clone();
        m.paste(rows.start, 0, &new_rows);
        Ok(ModuleHom::from_parts_unchecked(dec.hom_ring(), dec.total().clone(), dec.total().clone(), m))
    }

    /// `x ∘ self`. Adds `x_{·,row} (R - E)` where `R` is the block row of
    /// `self` and `E` the corresponding rows of the identity.
    pub fn compose_before(&self, x: &ModuleHom) -> Result<ModuleHom> {
        self.decomposition.check_operator(x)?;
        let dec = &self.decomposition;
        let n = dec.total().len();
        let rows = dec.range(self.row);
        let id_strip = ExactMatrix::identity(dec.hom_ring(), n).submatrix(rows.clone(), 0..n);
        let strip = self.full.matrix().submatrix(rows.clone(), 0..n).sub(&id_strip)?;
        let x_cols = x.matrix().submatrix(0..n, rows);
        let m = x.matrix().add(&x_cols.mul(&strip)?)?;
        Ok(ModuleHom::from_parts_unchecked(dec.hom_ring(), dec.total().clone(), dec.total().clone(), m))
    }
}

/// Free-function form of [`BlockRowOperator::new`].
pub fn make_block_operator(decomposition: StarDecomposition, row: usize, blocks: Vec<ModuleHom>) -> Result<BlockRowOperator> {
    BlockRowOperator::new(decomposition, row, blocks)
}

/// `m - Id` for an automorphism `m` of the total group, and whether its image
/// lies inside summand `row`, i.e. whether `m` has the block-row shape there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PicardDefect {
    pub defect: ModuleHom,
    pub is_blockrow: bool,
}

pub fn picard_defect(decomposition: &StarDecomposition, m: &ModuleHom, row: usize) -> Result<PicardDefect> {
    decomposition.check_operator(m)?;
    if row >= decomposition.len() {
        return Err(Error::ShapeMismatch(format!("row {} in a star of {}", row + 1, decomposition.len())));
    }
    let defect = m.sub(&decomposition.identity())?;
    let inside = decomposition.range(row);
    let is_blockrow = (0..defect.matrix().rows())
        .filter(|r| !inside.contains(r))
        .all(|r| defect.matrix().row(r).iter().all(Zero::is_zero));
    Ok(PicardDefect { defect, is_blockrow })
}

/// The local monodromies `(m_1, ..., m_t)` in star order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonodromyTuple {
    decomposition: StarDecomposition,
    operators: Vec<BlockRowOperator>,
}

impl MonodromyTuple {
    pub fn new(decomposition: StarDecomposition, operators: Vec<BlockRowOperator>) -> Result<Self> {
        if operators.len() != decomposition.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} operators for a star of {}",
                operators.len(),
                decomposition.len()
            )));
        }
        for (k, op) in operators.iter().enumerate() {
            if op.row() != k || op.decomposition() != &decomposition {
                return Err(Error::ShapeMismatch(format!("operator {} is not the block-row operator of position {}", k + 1, k + 1)));
            }
        }
        Ok(Self { decomposition, operators })
    }

    pub fn identity(decomposition: StarDecomposition) -> Result<Self> {
        let ops = (0..decomposition.len())
            .map(|k| BlockRowOperator::identity(decomposition.clone(), k))
            .collect::<Result<Vec<_>>>()?;
        Self::new(decomposition, ops)
    }

    pub fn decomposition(&self) -> &StarDecomposition {
        &self.decomposition
    }

    pub fn operators(&self) -> &[BlockRowOperator] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    /// The monodromy at infinity `M∞ = m_t ∘ ... ∘ m_1`.
    pub fn compose(&self) -> ModuleHom {
        self.operators
            .iter()
            .try_fold(self.decomposition.identity(), |acc, m| m.compose_after(&acc))
            .expect("operators act on the same total group")
    }

    /// Evaluates the representation on a loop written in the generators.
    pub fn evaluate_word(&self, word: &FreeGroupWord) -> Result<ModuleHom> {
        let t = self.len();
        let mut acc = self.decomposition.identity();
        for letter in &word.letters {
            if letter.generator == 0 || letter.generator > t {
                return Err(Error::ShapeMismatch(format!("generator γ_{} in a star of {t}", letter.generator)));
            }
            let op = &self.operators[letter.generator - 1];
            acc = if letter.inverse { op.inverse()?.compose_before(&acc)? } else { op.compose_before(&acc)? };
        }
        Ok(acc)
    }
}

/// Free-function form of [`MonodromyTuple::compose`].
pub fn compose_tuple(tuple: &MonodromyTuple) -> ModuleHom {
    tuple.compose()
}

pub fn evaluate_word(tuple: &MonodromyTuple, word: &FreeGroupWord) -> Result<ModuleHom> {
    tuple.evaluate_word(word)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    /// 1-based: `γ_generator`.
    pub generator: usize,
    pub inverse: bool,
}

/// A word in the free generators `γ_1, ..., γ_t` of the fundamental group of
/// the punctured plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeGroupWord {
    pub letters: Vec<Letter>,
}

impl FreeGroupWord {
    pub fn new(letters: impl IntoIterator<Item = (usize, i8)>) -> Result<Self> {
        let letters = letters
            .into_iter()
            .map(|(generator, e)| match e {
                1 => Ok(Letter { generator, inverse: false }),
                -1 => Ok(Letter { generator, inverse: true }),
                _ => Err(Error::Malformed(format!("exponent {e} must be +1 or -1"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { letters })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// `γ_t · ... · γ_1`, the loop around all end points.
    pub fn loop_at_infinity(t: usize) -> Self {
        Self { letters: (1..=t).rev().map(|g| Letter { generator: g, inverse: false }).collect() }
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|l| Letter { generator: l.generator, inverse: !l.inverse }).collect(),
        }
    }

    /// `self · other`: run `other` first.
    pub fn concat(&self, other: &FreeGroupWord) -> Self {
        Self { letters: self.letters.iter().chain(&other.letters).copied().collect() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| if l.inverse { format!("g{}^-1", l.generator) } else { format!("g{}", l.generator) })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parses `"g3 g1^-1 g2"`; `"1"` or the empty string is the empty word.
impl FromStr for FreeGroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Self::empty());
        }
        let letters = s
            .split_whitespace()
            .map(|tok| {
                let bad = || Error::Malformed(format!("bad letter {tok:?}"));
                let body = tok.strip_prefix('g').ok_or_else(bad)?;
                let (idx, inverse) = match body.strip_suffix("^-1") {
                    Some(i) => (i, true),
                    None => (body, false),
                };
                let generator: usize = idx.parse().map_err(|_| bad())?;
                if generator == 0 {
                    return Err(bad());
                }
                Ok(Letter { generator, inverse })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { letters })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn q_dec(dims: &[usize]) -> StarDecomposition {
        StarDecomposition::from_dims(RingDescriptor::Rationals, 1, dims).unwrap()
    }

    fn scalar_hom(ring: &RingDescriptor, v: i64) -> ModuleHom {
        let g = CyclicSum::free(1);
        let m = ExactMatrix::from_i64(ring.clone(), &[&[v]]).unwrap();
        ModuleHom::new(ring.clone(), g.clone(), g, m).unwrap()
    }

    pub(crate) fn example_pair() -> (BlockRowOperator, BlockRowOperator) {
        let q = RingDescriptor::Rationals;
        let dec = q_dec(&[1, 1]);
        let m1 = BlockRowOperator::new(dec.clone(), 0, vec![scalar_hom(&q, 2), scalar_hom(&q, 5)]).unwrap();
        let m2 = BlockRowOperator::new(dec, 1, vec![scalar_hom(&q, 3), scalar_hom(&q, 4)]).unwrap();
        (m1, m2)
    }

    #[test]
    fn block_operator_expansion() {
        let (m1, m2) = example_pair();
        let q = RingDescriptor::Rationals;
        assert_eq!(m2.to_full_operator().matrix(), &ExactMatrix::from_i64(q.clone(), &[&[1, 0], &[3, 4]]).unwrap());
        assert_eq!(m1.to_full_operator().matrix(), &ExactMatrix::from_i64(q, &[&[2, 5], &[0, 1]]).unwrap());
        assert_eq!(m2.apply(&[int(1), int(0)]).unwrap(), vec![int(1), int(3)]);
    }

    #[test]
    fn identity_blocks_give_identity() {
        let dec = q_dec(&[2, 1, 3]);
        for j in 0..3 {
            assert!(BlockRowOperator::identity(dec.clone(), j).unwrap().is_identity());
        }
    }

    #[test]
    fn non_invertible_diagonal_is_rejected() {
        let z = RingDescriptor::Integers;
        let dec = StarDecomposition::from_dims(z.clone(), 1, &[1]).unwrap();
        let err = BlockRowOperator::new(dec, 0, vec![scalar_hom(&z, 2)]).unwrap_err();
        assert_eq!(err, Error::DiagonalBlockNotInvertible { row: 1 });
    }

    #[test]
    fn torsion_apply() {
        let dec = StarDecomposition::new(RingDescriptor::Integers, 1, vec![FgAbelianGroup::cyclic(3).unwrap()]).unwrap();
        let g = dec.summand(0).clone();
        let m = ModuleHom::new(
            RingDescriptor::Integers,
            g.clone(),
            g,
            ExactMatrix::from_i64(RingDescriptor::Integers, &[&[2]]).unwrap(),
        )
        .unwrap();
        let op = BlockRowOperator::new(dec, 0, vec![m]).unwrap();
        assert_eq!(op.apply(&[int(1)]).unwrap(), vec![int(2)]);
    }

    #[test]
    fn picard_defect_shapes() {
        let (_, m2) = example_pair();
        let dec = m2.decomposition().clone();
        let full = m2.to_full_operator();
        assert!(picard_defect(&dec, full, 1).unwrap().is_blockrow);
        assert!(!picard_defect(&dec, full, 0).unwrap().is_blockrow);
        let swap = ModuleHom::new(
            RingDescriptor::Rationals,
            dec.total().clone(),
            dec.total().clone(),
            ExactMatrix::from_i64(RingDescriptor::Rationals, &[&[0, 1], &[1, 0]]).unwrap(),
        )
        .unwrap();
        assert!(!picard_defect(&dec, &swap, 0).unwrap().is_blockrow);
        assert!(!picard_defect(&dec, &swap, 1).unwrap().is_blockrow);
        let id = dec.identity();
        assert!(picard_defect(&dec, &id, 0).unwrap().is_blockrow && picard_defect(&dec, &id, 1).unwrap().is_blockrow);
    }

    #[test]
    fn composition_order() {
        let (m1, m2) = example_pair();
        let dec = m1.decomposition().clone();
        let tuple = MonodromyTuple::new(dec, vec![m1, m2]).unwrap();
        let expected = ExactMatrix::from_i64(RingDescriptor::Rationals, &[&[2, 5], &[6, 19]]).unwrap();
        assert_eq!(tuple.compose().matrix(), &expected);
        let w = FreeGroupWord::loop_at_infinity(2);
        assert_eq!(w.to_string(), "g2 g1");
        assert_eq!(tuple.evaluate_word(&w).unwrap(), tuple.compose());
        assert!(tuple.evaluate_word(&FreeGroupWord::empty()).unwrap().is_identity());
        let g1: FreeGroupWord = "g1".parse().unwrap();
        assert_eq!(&tuple.evaluate_word(&g1).unwrap(), tuple.operators()[0].to_full_operator());
        let ww = w.concat(&w.inverse());
        assert!(tuple.evaluate_word(&ww).unwrap().is_identity());
    }

    #[test]
    fn composition_helpers_match_matrix_products() {
        let (m1, m2) = example_pair();
        let x = m1.to_full_operator().clone();
        assert_eq!(m2.compose_after(&x).unwrap(), m2.to_full_operator().compose(&x).unwrap());
        assert_eq!(m2.compose_before(&x).unwrap(), x.compose(m2.to_full_operator()).unwrap());
        let inv = m2.inverse().unwrap();
        assert!(inv.to_full_operator().compose(m2.to_full_operator()).unwrap().is_identity());
    }

    #[test]
    fn word_parsing() {
        let w: FreeGroupWord = "g3 g1^-1".parse().unwrap();
        assert_eq!(w, FreeGroupWord::new([(3, 1), (1, -1)]).unwrap());
        assert!("g0".parse::<FreeGroupWord>().is_err());
        assert!("h1".parse::<FreeGroupWord>().is_err());
        assert_eq!("1".parse::<FreeGroupWord>().unwrap(), FreeGroupWord::empty());
    }
}
