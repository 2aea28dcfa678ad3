//! Seifert form `L`, intersection form `S` and monodromy at infinity `M` in
//! the middle degree, tied by `S = L·(I - M)`.
//!
//! Forms are matrices of bilinear maps `(x, y) ↦ xᵗ·L·y`, so `L·(I - M)` is
//! the form `(x, y) ↦ L(x, (I - M) y)`.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::ring::{int, RingDescriptor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertDatum {
    pub l: ExactMatrix,
    pub m: ExactMatrix,
    pub s: ExactMatrix,
}

impl SeifertDatum {
    /// Checks shapes, unimodularity of `M` and the relation `S = L·(I - M)`.
    pub fn new(l: ExactMatrix, m: ExactMatrix, s: ExactMatrix) -> Result<Self> {
        let expected = intersection_from_seifert(&l, &m)?;
        if expected != s {
            return Err(Error::Malformed("S differs from L(I - M)".into()));
        }
        Ok(Self { l, m, s })
    }

    pub fn from_l_and_m(l: ExactMatrix, m: ExactMatrix) -> Result<Self> {
        let s = intersection_from_seifert(&l, &m)?;
        Ok(Self { l, m, s })
    }

    pub fn size(&self) -> usize {
        self.l.rows()
    }

    pub fn is_degenerate(&self) -> bool {
        is_singular(&self.l)
    }

    pub fn symmetry(&self) -> Symmetry {
        symmetry_report(&self.s)
    }
}

fn check_integral_square(name: &str, a: &ExactMatrix, n: usize) -> Result<()> {
    if a.ring() != &RingDescriptor::Integers {
        return Err(Error::InvalidRing(format!("{name} must be an integer matrix")));
    }
    if a.rows() != n || a.cols() != n {
        return Err(Error::ShapeMismatch(format!("{name} must be {n}x{n}")));
    }
    Ok(())
}

fn on_rationals(a: &ExactMatrix) -> ExactMatrix {
    ExactMatrix::new(RingDescriptor::Rationals, a.rows(), a.cols(), a.entries().to_vec()).expect("integers are rationals")
}

fn is_singular(l: &ExactMatrix) -> bool {
    on_rationals(l).determinant().map(|d| d == int(0)).unwrap_or(true)
}

pub fn is_unimodular(m: &ExactMatrix) -> bool {
    m.is_square() && on_rationals(m).determinant().map(|d| d.abs().is_one()).unwrap_or(false)
}

/// `S = L·(I - M)`.
pub fn intersection_from_seifert(l: &ExactMatrix, m: &ExactMatrix) -> Result<ExactMatrix> {
    let n = l.rows();
    check_integral_square("L", l, n)?;
    check_integral_square("M", m, n)?;
    if !is_unimodular(m) {
        return Err(Error::NotInvertible("M is not unimodular".into()));
    }
    l.mul(&ExactMatrix::identity(RingDescriptor::Integers, n).sub(m)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoveredMonodromy {
    /// `I - L⁻¹·S`, over the rationals.
    pub m: ExactMatrix,
    /// Integral with determinant `±1`.
    pub realizable: bool,
}

impl RecoveredMonodromy {
    /// The integral matrix when the result is realizable.
    pub fn integral(&self) -> Option<ExactMatrix> {
        self.realizable
            .then(|| ExactMatrix::new(RingDescriptor::Integers, self.m.rows(), self.m.cols(), self.m.entries().to_vec()).expect("integral"))
    }
}

/// `M = I - L⁻¹·S` for a nondegenerate `L`.
pub fn monodromy_from_seifert(l: &ExactMatrix, s: &ExactMatrix) -> Result<RecoveredMonodromy> {
    let n = l.rows();
    check_integral_square("L", l, n)?;
    check_integral_square("S", s, n)?;
    if is_singular(l) {
        return Err(Error::DegenerateSeifertForm);
    }
    let q = RingDescriptor::Rationals;
    let m = ExactMatrix::identity(q, n).sub(&on_rationals(l).inverse()?.mul(&on_rationals(s))?)?;
    let integral = m.entries().iter().all(|x| x.is_integer());
    Ok(RecoveredMonodromy { realizable: integral && is_unimodular(&m), m })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
    /// Zero is both.
    Both,
    Neither,
}

pub fn symmetry_report(s: &ExactMatrix) -> Symmetry {
    let t = s.transpose();
    let sym = &t == s;
    let anti = s.is_square() && t == s.scale(&int(-1));
    match (sym, anti) {
        (true, true) => Symmetry::Both,
        (true, false) => Symmetry::Symmetric,
        (false, true) => Symmetry::Antisymmetric,
        (false, false) => Symmetry::Neither,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64(RingDescriptor::Integers, rows).unwrap()
    }

    #[test]
    fn trivial_monodromy_gives_zero_form() {
        let l = z(&[&[3, 1], &[-2, 5]]);
        assert!(intersection_from_seifert(&l, &ExactMatrix::identity(RingDescriptor::Integers, 2)).unwrap().is_zero());
    }

    #[test]
    fn product_example() {
        let s = intersection_from_seifert(&z(&[&[1, 1], &[0, 1]]), &z(&[&[0, 1], &[-1, 0]])).unwrap();
        assert_eq!(s, z(&[&[2, 0], &[1, 1]]));
    }

    #[test]
    fn zero_form_with_nondegenerate_l_forces_identity() {
        let r = monodromy_from_seifert(&z(&[&[2, 1], &[1, 1]]), &z(&[&[0, 0], &[0, 0]])).unwrap();
        assert!(r.m.is_identity() && r.realizable);
    }

    #[test]
    fn non_unimodular_result_is_flagged() {
        let r = monodromy_from_seifert(&z(&[&[1]]), &z(&[&[1]])).unwrap();
        assert!(r.m.is_zero());
        assert!(!r.realizable);
        assert!(r.integral().is_none());
    }

    #[test]
    fn zero_l_is_degenerate() {
        let zero = z(&[&[0, 0], &[0, 0]]);
        assert_eq!(monodromy_from_seifert(&zero, &zero).unwrap_err(), Error::DegenerateSeifertForm);
        let d = SeifertDatum::from_l_and_m(zero, z(&[&[1, 1], &[0, 1]])).unwrap();
        assert!(d.s.is_zero() && !d.m.is_identity() && d.is_degenerate());
        assert_eq!(d.symmetry(), Symmetry::Both);
    }
}
