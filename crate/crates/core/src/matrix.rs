//! Dense exact matrices over a [`RingDescriptor`].

use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{format_scalar, from_bigint, RingDescriptor, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    ring: RingDescriptor,
    rows: usize,
    cols: usize,
    // row-major, entry (r, c) at r * cols + c
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn new(ring: RingDescriptor, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let entries = entries
            .iter()
            .map(|x| ring.canonical(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { ring, rows, cols, entries })
    }

    pub fn from_rows(ring: RingDescriptor, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Self::new(ring, n, cols, rows.into_iter().flatten().collect())
    }

    /// Integer matrix from small literals, handy in tests and examples.
    pub fn from_i64(ring: RingDescriptor, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            ring,
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::ring::int(v)).collect())
                .collect(),
        )
    }

    pub(crate) fn from_canonical(ring: RingDescriptor, rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        debug_assert_eq!(entries.len(), rows * cols);
        Self { ring, rows, cols, entries }
    }

    pub fn zeros(ring: RingDescriptor, rows: usize, cols: usize) -> Self {
        Self { ring, rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(ring: RingDescriptor, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    /// Stores `value` at `(r, c)` after canonicalising it for the ring.
    pub fn set(&mut self, r: usize, c: usize, value: Scalar) -> Result<()> {
        let value = self.ring.canonical(&value)?;
        self.entries[r * self.cols + c] = value;
        Ok(())
    }

    pub(crate) fn set_raw(&mut self, r: usize, c: usize, value: Scalar) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(ring: RingDescriptor, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Self::zeros(ring, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::ShapeMismatch("column length".into()));
            }
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone())?;
            }
        }
        Ok(m)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c { v.is_one() } else { v.is_zero() }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.ring.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> Self {
        let (nr, nc) = (rows.len(), cols.len());
        let mut entries = Vec::with_capacity(nr * nc);
        for r in rows {
            for c in cols.clone() {
                entries.push(self.get(r, c).clone());
            }
        }
        Self::from_canonical(self.ring.clone(), nr, nc, entries)
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &ExactMatrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.entries[(r0 + r) * self.cols + c0 + c] = block.get(r, c).clone();
            }
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols || self.ring != other.ring {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} over {} vs {}x{} over {}",
                self.rows, self.cols, self.ring, other.rows, other.cols, other.ring
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(Self::from_canonical(self.ring.clone(), self.rows, self.cols, entries))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.sub(a, b))
            .collect();
        Ok(Self::from_canonical(self.ring.clone(), self.rows, self.cols, entries))
    }

    pub fn scale(&self, a: &Scalar) -> Self {
        let entries = self.entries.iter().map(|x| self.ring.mul(a, x)).collect();
        Self::from_canonical(self.ring.clone(), self.rows, self.cols, entries)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows || self.ring != other.ring {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.ring.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.entries[r * other.cols + c];
                    *slot += a * b;
                }
            }
        }
        if self.ring.modulus().is_some() {
            for x in &mut out.entries {
                *x = self.ring.canonical(x).expect("integral product");
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                let s = self.row(r).iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| acc + a * b);
                self.ring.canonical(&s).expect("integral product")
            })
            .collect())
    }

    /// Entries as integers, for the lattice algorithms. Only meaningful when
    /// every entry is integral.
    pub(crate) fn to_int_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.to_integer()).collect())
            .collect()
    }

    pub(crate) fn from_int_rows(ring: RingDescriptor, rows: usize, cols: usize, data: &[Vec<BigInt>]) -> Self {
        let entries = data.iter().flatten().map(|v| from_bigint(v.clone())).collect();
        Self::from_canonical(ring, rows, cols, entries)
    }

    /// Reduced row echelon form over a field; returns the form and pivot columns.
    pub fn rref(&self) -> Result<(Self, Vec<usize>)> {
        if !self.ring.is_field() {
            return Err(Error::FieldRequired("row reduction".into()));
        }
        let ring = &self.ring;
        let mut m = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = ring.inv(&m[r][c])?;
            for x in &mut m[r] {
                *x = ring.mul(x, &inv);
            }
            for i in 0..self.rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    let pivot = m[r].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot) {
                        *x = ring.sub(x, &ring.mul(&f, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let entries = m.into_iter().flatten().collect();
        Ok((Self::from_canonical(ring.clone(), self.rows, self.cols, entries), pivots))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// Basis of `{x : self * x = 0}` over a field.
    pub fn nullspace(&self) -> Result<Vec<Vec<Scalar>>> {
        let (r, pivots) = self.rref()?;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        Ok(free
            .iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = self.ring.neg(r.get(i, f));
                }
                v
            })
            .collect())
    }

    /// Inverse over a field by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotInvertible(format!("{}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let mut aug = Self::zeros(self.ring.clone(), n, 2 * n);
        aug.paste(0, 0, self);
        aug.paste(0, n, &Self::identity(self.ring.clone(), n));
        let (r, pivots) = aug.rref()?;
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::NotInvertible("singular matrix".into()));
        }
        Ok(r.submatrix(0..n, n..2 * n))
    }

    /// Determinant over a field, or over `Z` / `Z/n` through exact rational
    /// elimination followed by reduction.
    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
        }
        let work_ring = if self.ring.is_field() { self.ring.clone() } else { RingDescriptor::Rationals };
        let mut m = self.to_rows();
        let n = self.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                m.swap(p, c);
                det = work_ring.neg(&det);
            }
            det = work_ring.mul(&det, &m[c][c]);
            let inv = work_ring.inv(&m[c][c])?;
            for i in c + 1..n {
                if m[i][c].is_zero() {
                    continue;
                }
                let f = work_ring.mul(&m[i][c], &inv);
                let pivot = m[c].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot).skip(c) {
                    *x = work_ring.sub(x, &work_ring.mul(&f, y));
                }
            }
        }
        self.ring.canonical(&det)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", format_scalar(self.get(r, c)))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn q(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64(RingDescriptor::Rationals, rows).unwrap()
    }

    #[test]
    fn product_and_inverse() {
        let a = q(&[&[1, 0], &[3, 4]]);
        let b = q(&[&[2, 5], &[0, 1]]);
        assert_eq!(a.mul(&b).unwrap(), q(&[&[2, 5], &[6, 19]]));
        let inv = b.inverse().unwrap();
        assert!(b.mul(&inv).unwrap().is_identity());
        assert_eq!(inv.get(0, 1), &(int(-5) / int(2)));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn nullspace_and_rank() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank().unwrap(), 1);
        let ns = m.nullspace().unwrap();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.apply(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn determinants() {
        let z = ExactMatrix::from_i64(RingDescriptor::Integers, &[&[2, 4], &[6, 8]]).unwrap();
        assert_eq!(z.determinant().unwrap(), int(-8));
        let f = ExactMatrix::from_i64(RingDescriptor::PrimeField(5), &[&[2, 4], &[6, 8]]).unwrap();
        assert_eq!(f.determinant().unwrap(), int(2));
        assert_eq!(ExactMatrix::identity(RingDescriptor::Integers, 0).determinant().unwrap(), int(1));
    }

    #[test]
    fn modular_entries_are_reduced() {
        let m = ExactMatrix::from_i64(RingDescriptor::IntegersMod(6), &[&[7, -1]]).unwrap();
        assert_eq!(m.row(0), &[int(1), int(5)]);
        assert!(ExactMatrix::from_i64(RingDescriptor::Integers, &[&[1, 2], &[3]]).is_err());
    }
}
