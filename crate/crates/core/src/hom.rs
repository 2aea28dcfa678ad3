//! Homomorphisms between finitely generated abelian groups (over `Z`) or
//! between finite-dimensional vector spaces (over `Q` and `F_p`).
//!
//! A [`ModuleHom`] is a matrix whose column `c` is the image of the `c`-th
//! generator of the source. Over `Z` the rows belonging to torsion
//! coordinates of the target are kept reduced modulo their order, so two
//! homomorphisms are equal exactly when their matrices are.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::{CyclicSum, FgAbelianGroup};
use crate::matrix::ExactMatrix;
use crate::ring::{from_bigint, RingDescriptor, Scalar};
use crate::snf::{self, Subquotient};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleHom {
    ring: RingDescriptor,
    source: CyclicSum,
    target: CyclicSum,
    matrix: ExactMatrix,
}

/// A subgroup presented as a canonical group with its inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub group: FgAbelianGroup,
    pub inclusion: ModuleHom,
}

/// A quotient presented as a canonical group with the projection onto it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub group: FgAbelianGroup,
    pub projection: ModuleHom,
}

fn check_hom_ring(ring: &RingDescriptor) -> Result<()> {
    match ring {
        RingDescriptor::IntegersMod(_) => Err(Error::InvalidRing(
            "homomorphisms over Z/n are computed over Z with torsion groups".into(),
        )),
        _ => Ok(()),
    }
}

fn to_ints(v: &[Scalar]) -> Vec<BigInt> {
    v.iter().map(Scalar::to_integer).collect()
}

fn to_scalars(v: &[BigInt]) -> Vec<Scalar> {
    v.iter().cloned().map(from_bigint).collect()
}

/// Reduces the rows of `m` that correspond to torsion coordinates of `target`.
fn reduce_rows(m: &mut ExactMatrix, target: &CyclicSum) {
    for (r, o) in target.orders().iter().enumerate() {
        if o.is_zero() {
            continue;
        }
        for c in 0..m.cols() {
            let v = m.get(r, c).to_integer().mod_floor(o);
            m.set_raw(r, c, from_bigint(v));
        }
    }
}

impl ModuleHom {
    pub fn new(ring: RingDescriptor, source: CyclicSum, target: CyclicSum, matrix: ExactMatrix) -> Result<Self> {
        check_hom_ring(&ring)?;
        if *matrix.ring() != ring {
            return Err(Error::ShapeMismatch(format!("matrix over {} for a hom over {ring}", matrix.ring())));
        }
        if matrix.rows() != target.len() || matrix.cols() != source.len() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for a map from {} to {} generators",
                matrix.rows(),
                matrix.cols(),
                source.len(),
                target.len()
            )));
        }
        if ring.is_field() && !(source.is_torsion_free() && target.is_torsion_free()) {
            return Err(Error::InvalidGroup(format!("torsion summand over the field {ring}")));
        }
        let mut matrix = matrix;
        reduce_rows(&mut matrix, &target);
        for (c, s) in source.orders().iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for (r, o) in target.orders().iter().enumerate() {
                let x = matrix.get(r, c).to_integer() * s;
                let ok = if o.is_zero() { x.is_zero() } else { x.is_multiple_of(o) };
                if !ok {
                    return Err(Error::NotWellDefined(format!(
                        "generator {c} of order {s} is sent to an element of row {r} not killed by {s}"
                    )));
                }
            }
        }
        Ok(Self { ring, source, target, matrix })
    }

    pub(crate) fn from_parts_unchecked(
        ring: RingDescriptor,
        source: CyclicSum,
        target: CyclicSum,
        mut matrix: ExactMatrix,
    ) -> Self {
        reduce_rows(&mut matrix, &target);
        Self { ring, source, target, matrix }
    }

    pub fn identity(ring: RingDescriptor, group: CyclicSum) -> Self {
        let m = ExactMatrix::identity(ring.clone(), group.len());
        Self { ring, source: group.clone(), target: group, matrix: m }
    }

    pub fn zero(ring: RingDescriptor, source: CyclicSum, target: CyclicSum) -> Self {
        let m = ExactMatrix::zeros(ring.clone(), target.len(), source.len());
        Self { ring, source, target, matrix: m }
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn source(&self) -> &CyclicSum {
        &self.source
    }

    pub fn target(&self) -> &CyclicSum {
        &self.target
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn is_identity(&self) -> bool {
        self.is_endomorphism() && self.matrix.is_identity()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Canonical representative of an element of the source or target.
    pub fn canonical_element(&self, group: &CyclicSum, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != group.len() {
            return Err(Error::ShapeMismatch(format!("element of length {} in a group of {}", v.len(), group.len())));
        }
        let v = v.iter().map(|x| self.ring.canonical(x)).collect::<Result<Vec<_>>>()?;
        Ok(group.reduce(&v))
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let w = self.matrix.apply(v)?;
        Ok(self.target.reduce(&w))
    }

    /// `self ∘ f`: apply `f` first.
    pub fn compose(&self, f: &ModuleHom) -> Result<ModuleHom> {
        if f.target != self.source || f.ring != self.ring {
            return Err(Error::ShapeMismatch("composition of non-composable maps".into()));
        }
        let m = self.matrix.mul(&f.matrix)?;
        Ok(Self::from_parts_unchecked(self.ring.clone(), f.source.clone(), self.target.clone(), m))
    }

    fn check_parallel(&self, other: &ModuleHom) -> Result<()> {
        if self.source != other.source || self.target != other.target || self.ring != other.ring {
            return Err(Error::ShapeMismatch("maps with different source or target".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ModuleHom) -> Result<ModuleHom> {
        self.check_parallel(other)?;
        let m = self.matrix.add(&other.matrix)?;
        Ok(Self::from_parts_unchecked(self.ring.clone(), self.source.clone(), self.target.clone(), m))
    }

    pub fn sub(&self, other: &ModuleHom) -> Result<ModuleHom> {
        self.check_parallel(other)?;
        let m = self.matrix.sub(&other.matrix)?;
        Ok(Self::from_parts_unchecked(self.ring.clone(), self.source.clone(), self.target.clone(), m))
    }

    pub fn scale(&self, a: &Scalar) -> Result<ModuleHom> {
        let a = self.ring.canonical(a)?;
        let m = self.matrix.scale(&a);
        Ok(Self::from_parts_unchecked(self.ring.clone(), self.source.clone(), self.target.clone(), m))
    }

    /// `self - a·Id` for an endomorphism.
    pub fn minus_scalar(&self, a: &Scalar) -> Result<ModuleHom> {
        if !self.is_endomorphism() {
            return Err(Error::ShapeMismatch("scalar shift of a non-endomorphism".into()));
        }
        let id = Self::identity(self.ring.clone(), self.source.clone()).scale(a)?;
        self.sub(&id)
    }

    /// Restriction to the source coordinates `cols` followed by projection
    /// onto the target coordinates `rows`.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> ModuleHom {
        let target = CyclicSum::new(self.target.orders()[rows.clone()].to_vec()).expect("valid orders");
        let source = CyclicSum::new(self.source.orders()[cols.clone()].to_vec()).expect("valid orders");
        let m = self.matrix.submatrix(rows, cols);
        Self { ring: self.ring.clone(), source, target, matrix: m }
    }

    /// Transposed map between torsion-free groups (dual bases).
    pub fn transpose(&self) -> Result<ModuleHom> {
        if !(self.source.is_torsion_free() && self.target.is_torsion_free()) {
            return Err(Error::TorsionPresent);
        }
        Ok(Self {
            ring: self.ring.clone(),
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: self.matrix.transpose(),
        })
    }

    pub fn kernel(&self) -> Result<Embedding> {
        if self.ring.is_field() {
            let basis = self.matrix.nullspace()?;
            return self.field_embedding(self.source.clone(), basis);
        }
        let (n, m) = (self.source.len(), self.target.len());
        let target_rel = self.target.relations();
        // [M | D_target] x = 0, projected onto the first n coordinates
        let mut aug = self.matrix.to_int_rows();
        for (r, row) in aug.iter_mut().enumerate() {
            row.extend(target_rel.iter().map(|rel| rel[r].clone()));
        }
        let s = snf::smith(&aug, m, n + target_rel.len());
        let mut gens: Vec<Vec<BigInt>> = s.kernel_basis().into_iter().map(|v| v[..n].to_vec()).collect();
        let source_rel = self.source.relations();
        gens.extend(source_rel.iter().cloned());
        let sq = Subquotient::new(n, &gens, &source_rel);
        self.lattice_embedding(self.source.clone(), sq)
    }

    pub fn image(&self) -> Result<Embedding> {
        if self.ring.is_field() {
            let (_, pivots) = self.matrix.rref()?;
            let basis = pivots.iter().map(|&c| self.matrix.column(c)).collect();
            return self.field_embedding(self.target.clone(), basis);
        }
        let m = self.target.len();
        let target_rel = self.target.relations();
        let mut gens: Vec<Vec<BigInt>> = (0..self.source.len()).map(|c| to_ints(&self.matrix.column(c))).collect();
        gens.extend(target_rel.iter().cloned());
        let sq = Subquotient::new(m, &gens, &target_rel);
        self.lattice_embedding(self.target.clone(), sq)
    }

    pub fn cokernel(&self) -> Result<Quotient> {
        let m = self.target.len();
        if self.ring.is_field() {
            let rows = self.matrix.transpose().nullspace()?;
            let k = rows.len();
            let proj = ExactMatrix::from_rows(self.ring.clone(), rows)
                .map(|p| if k == 0 { ExactMatrix::zeros(self.ring.clone(), 0, m) } else { p })?;
            let group = FgAbelianGroup::free(k);
            let projection = ModuleHom::new(self.ring.clone(), self.target.clone(), group.as_cyclic_sum(), proj)?;
            return Ok(Quotient { group, projection });
        }
        let unit = |i: usize| -> Vec<BigInt> { (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect() };
        let lattice: Vec<Vec<BigInt>> = (0..m).map(unit).collect();
        let mut sub: Vec<Vec<BigInt>> = (0..self.source.len()).map(|c| to_ints(&self.matrix.column(c))).collect();
        sub.extend(self.target.relations());
        let sq = Subquotient::new(m, &lattice, &sub);
        let group = group_of(&sq);
        let cols: Vec<Vec<Scalar>> = (0..m).map(|j| to_scalars(&sq.coordinates(&unit(j)))).collect();
        let proj = ExactMatrix::from_columns(RingDescriptor::Integers, sq.orders.len(), &cols)?;
        let projection = ModuleHom::new(RingDescriptor::Integers, self.target.clone(), group.as_cyclic_sum(), proj)?;
        Ok(Quotient { group, projection })
    }

    fn field_embedding(&self, ambient: CyclicSum, basis: Vec<Vec<Scalar>>) -> Result<Embedding> {
        let group = FgAbelianGroup::free(basis.len());
        let m = ExactMatrix::from_columns(self.ring.clone(), ambient.len(), &basis)?;
        let inclusion = ModuleHom::new(self.ring.clone(), group.as_cyclic_sum(), ambient, m)?;
        Ok(Embedding { group, inclusion })
    }

    fn lattice_embedding(&self, ambient: CyclicSum, sq: Subquotient) -> Result<Embedding> {
        let group = group_of(&sq);
        let cols: Vec<Vec<Scalar>> = sq.generators.iter().map(|g| to_scalars(g)).collect();
        let m = ExactMatrix::from_columns(RingDescriptor::Integers, ambient.len(), &cols)?;
        let inclusion = ModuleHom::new(RingDescriptor::Integers, group.as_cyclic_sum(), ambient, m)?;
        Ok(Embedding { group, inclusion })
    }

    /// Bijective endomorphism test: trivial kernel and trivial cokernel.
    pub fn is_automorphism(&self) -> Result<bool> {
        if !self.is_endomorphism() {
            return Ok(false);
        }
        if self.ring.is_field() {
            return Ok(self.matrix.rank()? == self.source.len());
        }
        Ok(self.kernel()?.group.is_trivial() && self.cokernel()?.group.is_trivial())
    }

    pub fn invert(&self) -> Result<ModuleHom> {
        if !self.is_endomorphism() {
            return Err(Error::NotInvertible("a map between different groups".into()));
        }
        let n = self.source.len();
        if self.ring.is_field() {
            let inv = self.matrix.inverse()?;
            return Ok(Self { ring: self.ring.clone(), source: self.source.clone(), target: self.target.clone(), matrix: inv });
        }
        // preimage of every generator modulo the relations; a surjective
        // endomorphism of a finitely generated Z-module is bijective
        let rel = self.source.relations();
        let mut aug = self.matrix.to_int_rows();
        for (r, row) in aug.iter_mut().enumerate() {
            row.extend(rel.iter().map(|x| x[r].clone()));
        }
        let s = snf::smith(&aug, n, n + rel.len());
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let e: Vec<BigInt> = (0..n).map(|i| if i == j { BigInt::one() } else { BigInt::zero() }).collect();
            let x = s.solve(&e).ok_or_else(|| Error::NotInvertible("a non-surjective endomorphism".into()))?;
            cols.push(to_scalars(&x[..n]));
        }
        let m = ExactMatrix::from_columns(RingDescriptor::Integers, n, &cols)?;
        let inv = Self::from_parts_unchecked(RingDescriptor::Integers, self.source.clone(), self.target.clone(), m);
        debug_assert!(self.compose(&inv).map(|c| c.is_identity()).unwrap_or(false));
        Ok(inv)
    }
}

fn group_of(sq: &Subquotient) -> FgAbelianGroup {
    let free = sq.orders.iter().filter(|d| d.is_zero()).count();
    let torsion = sq.orders.iter().filter(|d| !d.is_zero()).cloned().collect();
    FgAbelianGroup::new(free, torsion).expect("Smith diagonal is a divisibility chain")
}

/// Free-function forms of the kernel, image, cokernel, composition and
/// inversion operations.
pub fn hom_kernel(f: &ModuleHom) -> Result<Embedding> {
    f.kernel()
}

pub fn hom_image(f: &ModuleHom) -> Result<Embedding> {
    f.image()
}

pub fn hom_cokernel(f: &ModuleHom) -> Result<Quotient> {
    f.cokernel()
}

pub fn hom_compose(g: &ModuleHom, f: &ModuleHom) -> Result<ModuleHom> {
    g.compose(f)
}

pub fn hom_invert(f: &ModuleHom) -> Result<ModuleHom> {
    f.invert()
}

/// A subgroup of `ambient` given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    pub ring: RingDescriptor,
    pub ambient: CyclicSum,
    pub generators: Vec<Vec<Scalar>>,
}

impl Submodule {
    pub fn new(ring: RingDescriptor, ambient: CyclicSum, generators: Vec<Vec<Scalar>>) -> Result<Self> {
        check_hom_ring(&ring)?;
        let generators = generators
            .iter()
            .map(|g| {
                if g.len() != ambient.len() {
                    return Err(Error::ShapeMismatch("generator length".into()));
                }
                let g = g.iter().map(|x| ring.canonical(x)).collect::<Result<Vec<_>>>()?;
                Ok(ambient.reduce(&g))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { ring, ambient, generators })
    }

    /// The image of an embedding, as generators in the ambient group.
    pub fn from_embedding(e: &Embedding) -> Self {
        let inc = &e.inclusion;
        let generators = (0..inc.source().len()).map(|c| inc.matrix().column(c)).collect();
        Self { ring: inc.ring().clone(), ambient: inc.target().clone(), generators }
    }

    pub fn whole(ring: RingDescriptor, ambient: CyclicSum) -> Self {
        let n = ambient.len();
        let generators = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        Self { ring, ambient, generators }
    }

    /// The generated subgroup as an abstract canonical group.
    pub fn group(&self) -> Result<FgAbelianGroup> {
        let n = self.ambient.len();
        let src = CyclicSum::free(self.generators.len());
        let m = ExactMatrix::from_columns(self.ring.clone(), n, &self.generators)?;
        let h = ModuleHom::new(self.ring.clone(), src, self.ambient.clone(), m)?;
        Ok(h.image()?.group)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        let n = self.ambient.len();
        if v.len() != n {
            return Err(Error::ShapeMismatch("element length".into()));
        }
        if self.ring.is_field() {
            let m = ExactMatrix::from_columns(self.ring.clone(), n, &self.generators)?;
            let mut cols = self.generators.clone();
            cols.push(v.to_vec());
            let with_v = ExactMatrix::from_columns(self.ring.clone(), n, &cols)?;
            let base = if self.generators.is_empty() { 0 } else { m.rank()? };
            return Ok(with_v.rank()? == base);
        }
        let mut cols: Vec<Vec<BigInt>> = self.generators.iter().map(|g| to_ints(g)).collect();
        cols.extend(self.ambient.relations());
        let a = snf::from_columns(n, &cols);
        let s = snf::smith(&a, n, cols.len());
        Ok(s.solve(&to_ints(v)).is_some())
    }
}

/// Whether two generating sets span the same subgroup of `ambient`.
pub fn submodule_equal(a: &Submodule, b: &Submodule) -> Result<bool> {
    if a.ambient != b.ambient || a.ring != b.ring {
        return Err(Error::ShapeMismatch("submodules of different groups".into()));
    }
    for g in &a.generators {
        if !b.contains(g)? {
            return Ok(false);
        }
    }
    for g in &b.generators {
        if !a.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;
    use num_traits::Signed;

    fn zmod(d: i64) -> CyclicSum {
        CyclicSum::new(vec![BigInt::from(d)]).unwrap()
    }

    fn zhom(src: &CyclicSum, tgt: &CyclicSum, rows: &[&[i64]]) -> ModuleHom {
        let m = if rows.is_empty() {
            ExactMatrix::zeros(RingDescriptor::Integers, 0, src.len())
        } else {
            ExactMatrix::from_i64(RingDescriptor::Integers, rows).unwrap()
        };
        ModuleHom::new(RingDescriptor::Integers, src.clone(), tgt.clone(), m).unwrap()
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        let z2 = CyclicSum::free(2);
        let id = ModuleHom::identity(RingDescriptor::Integers, z2.clone());
        assert!(id.kernel().unwrap().group.is_trivial());
        let zero = ModuleHom::zero(RingDescriptor::Integers, z2.clone(), z2.clone());
        assert_eq!(zero.kernel().unwrap().group, FgAbelianGroup::free(2));
    }

    #[test]
    fn kernel_of_shifted_unit_on_z3() {
        // m = 2 on Z/3, m - 1 = 1: exhaustively only 0 maps to 0
        let f = zhom(&zmod(3), &zmod(3), &[&[2]]).minus_scalar(&int(1)).unwrap();
        let zeros = (0..3).filter(|&x| f.apply(&[int(x)]).unwrap() == vec![int(0)]).count();
        assert_eq!(zeros, 1);
        assert!(f.kernel().unwrap().group.is_trivial());
    }

    #[test]
    fn image_and_cokernel_of_doubling() {
        let z = CyclicSum::free(1);
        let f = zhom(&z, &z, &[&[2]]);
        assert_eq!(f.image().unwrap().group, FgAbelianGroup::free(1));
        assert_eq!(f.cokernel().unwrap().group, FgAbelianGroup::cyclic(2).unwrap());
        let g = zhom(&zmod(3), &zmod(3), &[&[2]]);
        assert_eq!(g.image().unwrap().group, FgAbelianGroup::cyclic(3).unwrap());
        assert!(g.cokernel().unwrap().group.is_trivial());
        let id = ModuleHom::identity(RingDescriptor::Integers, z.clone());
        assert_eq!(id.image().unwrap().group, FgAbelianGroup::free(1));
        assert!(id.cokernel().unwrap().group.is_trivial());
    }

    #[test]
    fn inversion() {
        let g = zhom(&zmod(3), &zmod(3), &[&[2]]);
        assert_eq!(g.invert().unwrap(), g);
        let z = CyclicSum::free(1);
        assert!(matches!(zhom(&z, &z, &[&[2]]).invert(), Err(Error::NotInvertible(_))));
        let id = ModuleHom::identity(RingDescriptor::Integers, CyclicSum::free(3));
        assert_eq!(id.invert().unwrap(), id);
    }

    #[test]
    fn well_definedness_is_enforced() {
        // Z/2 -> Z/3 must be zero
        let m = ExactMatrix::from_i64(RingDescriptor::Integers, &[&[1]]).unwrap();
        assert!(ModuleHom::new(RingDescriptor::Integers, zmod(2), zmod(3), m).is_err());
        // Z/2 -> Z/4, 1 -> 2 is fine
        let m = ExactMatrix::from_i64(RingDescriptor::Integers, &[&[2]]).unwrap();
        assert!(ModuleHom::new(RingDescriptor::Integers, zmod(2), zmod(4), m).is_ok());
        // torsion into a free group
        let m = ExactMatrix::from_i64(RingDescriptor::Integers, &[&[1]]).unwrap();
        assert!(ModuleHom::new(RingDescriptor::Integers, zmod(2), CyclicSum::free(1), m).is_err());
    }

    #[test]
    fn mixed_kernel() {
        // Z -> Z/4, 1 -> 2 has kernel 2Z, cokernel Z/2, image Z/2
        let f = zhom(&CyclicSum::free(1), &zmod(4), &[&[2]]);
        let k = f.kernel().unwrap();
        assert_eq!(k.group, FgAbelianGroup::free(1));
        assert_eq!(k.inclusion.matrix().get(0, 0).abs(), int(2));
        assert_eq!(f.image().unwrap().group, FgAbelianGroup::cyclic(2).unwrap());
        assert_eq!(f.cokernel().unwrap().group, FgAbelianGroup::cyclic(2).unwrap());
    }

    #[test]
    fn submodules() {
        let z2 = CyclicSum::free(2);
        let a = Submodule::new(RingDescriptor::Integers, z2.clone(), vec![vec![int(2), int(0)]]).unwrap();
        let b = Submodule::new(RingDescriptor::Integers, z2.clone(), vec![vec![int(4), int(0)]]).unwrap();
        assert!(submodule_equal(&a, &a).unwrap());
        assert!(!submodule_equal(&a, &b).unwrap());
        let c = Submodule::new(RingDescriptor::Integers, zmod(3), vec![vec![int(1)]]).unwrap();
        let d = Submodule::new(RingDescriptor::Integers, zmod(3), vec![vec![int(2)]]).unwrap();
        assert!(submodule_equal(&c, &d).unwrap());
    }

    #[test]
    fn field_operations() {
        let q = RingDescriptor::Rationals;
        let v = CyclicSum::free(2);
        let m = ExactMatrix::from_i64(q.clone(), &[&[1, 2], &[2, 4]]).unwrap();
        let f = ModuleHom::new(q.clone(), v.clone(), v.clone(), m).unwrap();
        assert_eq!(f.kernel().unwrap().group, FgAbelianGroup::free(1));
        assert_eq!(f.image().unwrap().group, FgAbelianGroup::free(1));
        let c = f.cokernel().unwrap();
        assert_eq!(c.group, FgAbelianGroup::free(1));
        assert!(c.projection.compose(&f).unwrap().is_zero());
        assert!(!f.is_automorphism().unwrap());
    }
}
