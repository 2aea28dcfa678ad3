//! Smith normal form over the integers, and the lattice routines built on it
//! (integer kernels, lattice bases, exact solving, subquotients).
//!
//! The elimination keeps four transforms in step: `P A Q = D` with the
//! inverses `P⁻¹`, `Q⁻¹` maintained alongside, so `A = P⁻¹ D Q⁻¹` is available
//! without a separate inversion.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::ring::RingDescriptor;

pub(crate) type IntMat = Vec<Vec<BigInt>>;

pub(crate) fn identity(n: usize) -> IntMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub(crate) fn mat_vec(a: &IntMat, cols: usize, v: &[BigInt]) -> Vec<BigInt> {
    debug_assert_eq!(v.len(), cols);
    a.iter()
        .map(|row| row.iter().zip(v).fold(BigInt::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

/// Column `c` of a row-major integer matrix.
pub(crate) fn column(a: &IntMat, c: usize) -> Vec<BigInt> {
    a.iter().map(|row| row[c].clone()).collect()
}

/// Matrix with the given columns, each of length `rows`.
pub(crate) fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> IntMat {
    (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

#[derive(Debug, Clone)]
pub(crate) struct Smith {
    pub rows: usize,
    pub cols: usize,
    /// Diagonal entries `d_0 | d_1 | ... | d_{rank-1}`, all positive.
    pub diag: Vec<BigInt>,
    pub p: IntMat,
    pub p_inv: IntMat,
    pub q: IntMat,
    pub q_inv: IntMat,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// Some `x` with `A x = b`, if one exists over the integers.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let z = mat_vec(&self.p, self.rows, b);
        let mut y = vec![BigInt::zero(); self.cols];
        for (i, zi) in z.iter().enumerate() {
            if i < self.rank() {
                let (quo, rem) = zi.div_rem(&self.diag[i]);
                if !rem.is_zero() {
                    return None;
                }
                y[i] = quo;
            } else if !zi.is_zero() {
                return None;
            }
        }
        Some(mat_vec(&self.q, self.cols, &y))
    }

    /// Basis of the integer kernel `{x : A x = 0}` (columns of `Q` past the rank).
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        (self.rank()..self.cols).map(|c| column(&self.q, c)).collect()
    }

    /// Basis of the column lattice `A Z^cols` (scaled columns of `P⁻¹`).
    pub fn image_basis(&self) -> Vec<Vec<BigInt>> {
        (0..self.rank())
            .map(|i| column(&self.p_inv, i).into_iter().map(|x| x * &self.diag[i]).collect())
            .collect()
    }
}

struct Elimination {
    a: IntMat,
    p: IntMat,
    p_inv: IntMat,
    q: IntMat,
    q_inv: IntMat,
    rows: usize,
    cols: usize,
}

impl Elimination {
    // row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let t = &self.a[j][k] * c;
            self.a[i][k] += t;
        }
        for k in 0..self.rows {
            let t = &self.p[j][k] * c;
            self.p[i][k] += t;
            let t = &self.p_inv[k][i] * c;
            self.p_inv[k][j] -= t;
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        self.p.swap(i, j);
        for row in &mut self.p_inv {
            row.swap(i, j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -&*x;
        }
        for x in &mut self.p[i] {
            *x = -&*x;
        }
        for row in &mut self.p_inv {
            row[i] = -&row[i];
        }
    }

    // col_j += c * col_i
    fn add_col(&mut self, j: usize, i: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for row in &mut self.a {
            let t = &row[i] * c;
            row[j] += t;
        }
        for row in &mut self.q {
            let t = &row[i] * c;
            row[j] += t;
        }
        for k in 0..self.cols {
            let t = &self.q_inv[j][k] * c;
            self.q_inv[i][k] -= t;
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in &mut self.a {
            row.swap(i, j);
        }
        for row in &mut self.q {
            row.swap(i, j);
        }
        self.q_inv.swap(i, j);
    }

    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = &self.a[i][j];
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs() < self.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn run(mut self) -> Smith {
        let mut diag = Vec::new();
        let n = self.rows.min(self.cols);
        for t in 0..n {
            let Some((i, j)) = self.min_entry(t) else { break };
            self.swap_rows(t, i);
            self.swap_cols(t, j);
            loop {
                let mut dirty = false;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let quo = self.a[i][t].div_floor(&self.a[t][t]);
                    self.add_row(i, t, &-quo);
                    if !self.a[i][t].is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let quo = self.a[t][j].div_floor(&self.a[t][t]);
                    self.add_col(j, t, &-quo);
                    if !self.a[t][j].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    // a smaller remainder appeared in the pivot row/column
                    let (i, j) = self.min_entry_cross(t);
                    self.swap_rows(t, i);
                    self.swap_cols(t, j);
                    continue;
                }
                let pivot = self.a[t][t].clone();
                let bad = (t + 1..self.rows)
                    .find(|&i| (t + 1..self.cols).any(|j| !self.a[i][j].is_multiple_of(&pivot)));
                match bad {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            diag.push(self.a[t][t].clone());
        }
        Smith {
            rows: self.rows,
            cols: self.cols,
            diag,
            p: self.p,
            p_inv: self.p_inv,
            q: self.q,
            q_inv: self.q_inv,
        }
    }

    // smallest nonzero entry in row t / column t (from t on)
    fn min_entry_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut best_abs: Option<BigInt> = None;
        let mut consider = |i: usize, j: usize, v: &BigInt| {
            if !v.is_zero() && best_abs.as_ref().is_none_or(|b| &v.abs() < b) {
                best = (i, j);
                best_abs = Some(v.abs());
            }
        };
        for i in t..self.rows {
            consider(i, t, &self.a[i][t]);
        }
        for j in t..self.cols {
            consider(t, j, &self.a[t][j]);
        }
        best
    }
}

pub(crate) fn smith(a: &IntMat, rows: usize, cols: usize) -> Smith {
    Elimination {
        a: a.clone(),
        p: identity(rows),
        p_inv: identity(rows),
        q: identity(cols),
        q_inv: identity(cols),
        rows,
        cols,
    }
    .run()
}

/// Smith normal form of an integer matrix: returns `(U, D, V)` with
/// `A = U·D·V`, `U` and `V` unimodular and `D` diagonal with
/// `d_1 | d_2 | ...`, all `d_i >= 0`.
pub fn smith_normal_form(a: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix, ExactMatrix)> {
    if *a.ring() != RingDescriptor::Integers {
        return Err(Error::InvalidRing(format!("Smith form needs Z, got {}", a.ring())));
    }
    let (rows, cols) = (a.rows(), a.cols());
    let s = smith(&a.to_int_rows(), rows, cols);
    let mut d = vec![vec![BigInt::zero(); cols]; rows];
    for (i, di) in s.diag.iter().enumerate() {
        d[i][i] = di.clone();
    }
    let z = RingDescriptor::Integers;
    Ok((
        ExactMatrix::from_int_rows(z.clone(), rows, rows, &s.p_inv),
        ExactMatrix::from_int_rows(z.clone(), rows, cols, &d),
        ExactMatrix::from_int_rows(z, cols, cols, &s.q_inv),
    ))
}

/// Invariant factors of `A` (the nonzero diagonal of its Smith form).
pub fn invariant_factors(a: &ExactMatrix) -> Result<Vec<BigInt>> {
    if *a.ring() != RingDescriptor::Integers {
        return Err(Error::InvalidRing(format!("Smith form needs Z, got {}", a.ring())));
    }
    Ok(smith(&a.to_int_rows(), a.rows(), a.cols()).diag)
}

/// A lattice `L ⊂ Z^n` together with a sublattice `N ⊂ L`, presented as the
/// canonical group `L/N ≅ Z/d_1 ⊕ ... ⊕ Z/d_s ⊕ Z^r`.
#[derive(Debug, Clone)]
pub(crate) struct Subquotient {
    /// Invariant factors `> 1` followed by zeros for the free part.
    pub orders: Vec<BigInt>,
    /// Representatives in `Z^n` of the canonical generators.
    pub generators: Vec<Vec<BigInt>>,
    basis_solver: Smith,
    // rows of P_C restricted to the kept indices
    coordinate_rows: Vec<Vec<BigInt>>,
}

impl Subquotient {
    /// `lattice_gens` span `L`; `sub_gens` span `N`, which must lie in `L`.
    pub fn new(n: usize, lattice_gens: &[Vec<BigInt>], sub_gens: &[Vec<BigInt>]) -> Self {
        let gen_mat = from_columns(n, lattice_gens);
        let s = smith(&gen_mat, n, lattice_gens.len());
        let basis = s.image_basis();
        let r = basis.len();
        let basis_mat = from_columns(n, &basis);
        let basis_solver = smith(&basis_mat, n, r);
        let coords: Vec<Vec<BigInt>> = sub_gens
            .iter()
            .map(|g| basis_solver.solve(g).expect("sublattice must lie in the lattice"))
            .collect();
        let c = from_columns(r, &coords);
        let sc = smith(&c, r, coords.len());
        let mut orders = Vec::new();
        let mut generators = Vec::new();
        let mut coordinate_rows = Vec::new();
        for i in 0..r {
            let d = sc.diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if d.is_one() {
                continue;
            }
            let u_col = column(&sc.p_inv, i);
            generators.push(mat_vec(&basis_mat, r, &u_col));
            coordinate_rows.push(sc.p[i].clone());
            orders.push(d);
        }
        Self { orders, generators, basis_solver, coordinate_rows }
    }

    /// Canonical coordinates of `x ∈ L` in `L/N`, reduced modulo the orders.
    pub fn coordinates(&self, x: &[BigInt]) -> Vec<BigInt> {
        let c = self.basis_solver.solve(x).expect("element must lie in the lattice");
        self.coordinate_rows
            .iter()
            .zip(&self.orders)
            .map(|(row, d)| {
                let v = row.iter().zip(&c).fold(BigInt::zero(), |acc, (a, b)| acc + a * b);
                if d.is_zero() { v } else { v.mod_floor(d) }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn z(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64(RingDescriptor::Integers, rows).unwrap()
    }

    fn check(a: &ExactMatrix) -> Vec<BigInt> {
        let (u, d, v) = smith_normal_form(a).unwrap();
        assert_eq!(u.mul(&d).unwrap().mul(&v).unwrap(), *a);
        assert_eq!(u.determinant().unwrap().abs(), int(1));
        assert_eq!(v.determinant().unwrap().abs(), int(1));
        let k = a.rows().min(a.cols());
        let diag: Vec<BigInt> = (0..k).map(|i| d.get(i, i).to_integer()).collect();
        for w in diag.windows(2) {
            assert!(w[1].is_zero() || w[1].is_multiple_of(&w[0]));
        }
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                if r != c {
                    assert!(d.get(r, c).is_zero());
                }
            }
        }
        diag
    }

    #[test]
    fn zero_one_by_one() {
        let (u, d, v) = smith_normal_form(&z(&[&[0]])).unwrap();
        assert_eq!(d, z(&[&[0]]));
        assert!(u.is_identity() && v.is_identity());
    }

    #[test]
    fn identity_is_fixed() {
        let i3 = ExactMatrix::identity(RingDescriptor::Integers, 3);
        let (_, d, _) = smith_normal_form(&i3).unwrap();
        assert_eq!(d, i3);
    }

    #[test]
    fn two_by_two() {
        // gcd of entries is 2, |det| is 8
        assert_eq!(check(&z(&[&[2, 4], &[6, 8]])), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn rectangular_and_negative() {
        check(&z(&[&[0, -3, 6], &[4, 0, 2]]));
        check(&z(&[&[-5], &[10], &[15]]));
        check(&z(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]));
        assert_eq!(check(&z(&[&[2, 0], &[0, 3]])), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn solve_and_kernel() {
        let a = z(&[&[2, 4], &[6, 8]]);
        let s = smith(&a.to_int_rows(), 2, 2);
        let x = s.solve(&[BigInt::from(2), BigInt::from(6)]).unwrap();
        assert_eq!(x, vec![BigInt::from(1), BigInt::from(0)]);
        assert!(s.solve(&[BigInt::from(1), BigInt::from(0)]).is_none());
        let b = z(&[&[1, 2, 3]]);
        let sb = smith(&b.to_int_rows(), 1, 3);
        assert_eq!(sb.kernel_basis().len(), 2);
    }

    #[test]
    fn subquotient_of_two_z_by_diag() {
        let e = |a: i64, b: i64| vec![BigInt::from(a), BigInt::from(b)];
        let sq = Subquotient::new(2, &[e(1, 0), e(0, 1)], &[e(2, 0), e(0, 3)]);
        assert_eq!(sq.orders, vec![BigInt::from(6)]);
        let c = sq.coordinates(&e(1, 1));
        assert_eq!(c.len(), 1);
        assert!(!c[0].is_zero());
    }
}
