//! Finitely generated abelian groups.
//!
//! [`FgAbelianGroup`] is the canonical invariant-factor form and is what every
//! computation returns. [`CyclicSum`] is an ordered direct sum of cyclic
//! factors in whatever order they were assembled (for instance the summands
//! of a star decomposition placed side by side); homomorphisms act on those.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{from_bigint, Scalar};

/// `Z/d_1 ⊕ ... ⊕ Z/d_s ⊕ Z^r` with `d_1 | d_2 | ... | d_s`, all `d_i >= 2`.
/// Canonical generators are ordered torsion first, then free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FgAbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn new(free_rank: usize, invariant_factors: Vec<BigInt>) -> Result<Self> {
        if let Some(d) = invariant_factors.iter().find(|d| *d < &BigInt::from(2)) {
            return Err(Error::InvalidGroup(format!("invariant factor {d} is below 2")));
        }
        if invariant_factors.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(Error::InvalidGroup(format!(
                "invariant factors {invariant_factors:?} do not form a divisibility chain"
            )));
        }
        Ok(Self { free_rank, invariant_factors })
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, invariant_factors: Vec::new() }
    }

    pub fn cyclic(order: u64) -> Result<Self> {
        Self::new(0, vec![BigInt::from(order)])
    }

    /// Canonical form of an arbitrary direct sum of cyclic groups (orders `0`
    /// stand for `Z`, orders `1` are dropped).
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        let n = orders.len();
        let relations: Vec<Vec<BigInt>> = (0..n)
            .map(|r| (0..n).map(|c| if r == c { orders[r].abs() } else { BigInt::zero() }).collect())
            .collect();
        let s = crate::snf::smith(&relations, n, n);
        let mut torsion: Vec<BigInt> = s.diag.iter().filter(|d| !d.is_one()).cloned().collect();
        torsion.retain(|d| !d.is_zero());
        Self { free_rank: n - s.rank(), invariant_factors: torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Number of canonical generators.
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn as_cyclic_sum(&self) -> CyclicSum {
        let mut orders = self.invariant_factors.clone();
        orders.extend(std::iter::repeat_with(BigInt::zero).take(self.free_rank));
        CyclicSum { orders }
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Ordered direct sum `Z/o_1 ⊕ ... ⊕ Z/o_n` where `o_i = 0` means a free
/// factor. Elements are integer vectors reduced into `[0, o_i)` on the
/// torsion coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CyclicSum {
    orders: Vec<BigInt>,
}

impl CyclicSum {
    pub fn new(orders: Vec<BigInt>) -> Result<Self> {
        if orders.iter().any(|o| o.is_negative() || o.is_one()) {
            return Err(Error::InvalidGroup(format!("cyclic orders {orders:?} must be 0 or >= 2")));
        }
        Ok(Self { orders })
    }

    pub fn free(rank: usize) -> Self {
        Self { orders: vec![BigInt::zero(); rank] }
    }

    pub fn direct_sum<'a>(parts: impl IntoIterator<Item = &'a CyclicSum>) -> Self {
        Self { orders: parts.into_iter().flat_map(|p| p.orders.iter().cloned()).collect() }
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.orders.iter().all(Zero::is_zero)
    }

    pub fn canonical(&self) -> FgAbelianGroup {
        FgAbelianGroup::from_cyclic_orders(&self.orders)
    }

    /// Reduces an integer coordinate vector into canonical representatives.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        v.iter()
            .zip(&self.orders)
            .map(|(x, o)| if o.is_zero() { x.clone() } else { from_bigint(x.to_integer().mod_floor(o)) })
            .collect()
    }

    pub fn zero_element(&self) -> Vec<Scalar> {
        vec![Scalar::zero(); self.len()]
    }

    /// Whether an element is the zero of the group (coordinates taken modulo
    /// the orders).
    pub fn is_zero_element(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Relation lattice generators `o_i e_i` for the torsion coordinates.
    pub(crate) fn relations(&self) -> Vec<Vec<BigInt>> {
        let n = self.len();
        self.orders
            .iter()
            .enumerate()
            .filter(|(_, o)| !o.is_zero())
            .map(|(i, o)| {
                let mut v = vec![BigInt::zero(); n];
                v[i] = o.clone();
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn validation() {
        assert!(FgAbelianGroup::new(0, b(&[2, 4])).is_ok());
        assert!(FgAbelianGroup::new(0, b(&[2, 3])).is_err());
        assert!(FgAbelianGroup::new(1, b(&[1])).is_err());
        assert!(CyclicSum::new(b(&[1])).is_err());
    }

    #[test]
    fn canonicalisation() {
        let g = FgAbelianGroup::from_cyclic_orders(&b(&[2, 0, 3]));
        assert_eq!(g, FgAbelianGroup::new(1, b(&[6])).unwrap());
        let h = FgAbelianGroup::from_cyclic_orders(&b(&[4, 2, 1]));
        assert_eq!(h, FgAbelianGroup::new(0, b(&[2, 4])).unwrap());
        assert_eq!(h.to_string(), "Z/2 + Z/4");
        assert_eq!(FgAbelianGroup::trivial().to_string(), "0");
        assert_eq!(FgAbelianGroup::cyclic(3).unwrap().as_cyclic_sum().orders(), &b(&[3])[..]);
    }

    #[test]
    fn element_reduction() {
        let g = CyclicSum::new(b(&[3, 0])).unwrap();
        let v = vec![crate::ring::int(-1), crate::ring::int(-1)];
        assert_eq!(g.reduce(&v), vec![crate::ring::int(2), crate::ring::int(-1)]);
        assert!(g.is_zero_element(&[crate::ring::int(3), crate::ring::int(0)]));
    }
}
