//! Seeded generation of valid instances.
//!
//! The stream is SplitMix64 seeded with the user seed as its initial state:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! output z ^ (z >> 31)
//! ```
//!
//! (wrapping 64-bit arithmetic). A draw "below n" is `output mod n`, and a
//! draw in `[lo, hi]` is `lo + below(hi - lo + 1)`. Every generator below
//! consumes draws in the order its documentation states, so the same seed
//! reproduces the same instance in any implementation of the recipe.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::Result;
use crate::group::{CyclicSum, FgAbelianGroup};
use crate::hom::ModuleHom;
use crate::matrix::ExactMatrix;
use crate::ring::{from_bigint, int, RingDescriptor, Scalar};
use crate::star::{BlockRowOperator, MonodromyTuple, StarDecomposition};

pub struct InstanceRng {
    inner: SplitMix64,
}

impl InstanceRng {
    pub fn new(seed: u64) -> Self {
        Self { inner: SplitMix64::seed_from_u64(seed) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform-ish in `[0, n)`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// In `[lo, hi]`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.below(items.len() as u64) as usize]
    }
}

/// Knobs for [`random_tuple`].
#[derive(Debug, Clone)]
pub struct TupleConfig {
    /// Off-diagonal entries are drawn from `[-bound, bound]`.
    pub entry_bound: i64,
    /// Elementary operations per generator of a diagonal block.
    pub steps_per_generator: usize,
}

impl Default for TupleConfig {
    fn default() -> Self {
        Self { entry_bound: 2, steps_per_generator: 2 }
    }
}

fn random_unit(rng: &mut InstanceRng, ring: &RingDescriptor, order: &BigInt) -> Scalar {
    if !order.is_zero() {
        // walk upward from a random residue to the next unit
        let mut u = BigInt::from(1 + rng.below(order_u64(order) - 1));
        while !u.gcd(order).is_one() {
            u = (u % order) + 1;
        }
        return from_bigint(u);
    }
    match ring {
        RingDescriptor::Rationals => {
            let choices = [int(-1), int(2), int(-2), int(1) / int(2)];
            rng.pick(&choices).clone()
        }
        RingDescriptor::PrimeField(p) => int(1 + rng.below(p - 1) as i64),
        _ => int(-1),
    }
}

fn order_u64(order: &BigInt) -> u64 {
    u64::try_from(order).unwrap_or(u64::MAX)
}

/// A random automorphism of `group`, built as a product of elementary
/// automorphisms starting from the identity. Each step draws a kind
/// (`below 4`: 0 scales a generator by a unit, otherwise a transvection
/// `e_j ↦ e_j + c e_i`), then the indices and the coefficient. Transvections
/// between torsion generators are rescaled to stay well defined, and skipped
/// when no nonzero choice exists (torsion into a free generator).
pub fn random_automorphism(rng: &mut InstanceRng, ring: &RingDescriptor, group: &CyclicSum, steps: usize) -> ModuleHom {
    let n = group.len();
    let orders = group.orders();
    let mut m = ExactMatrix::identity(ring.clone(), n);
    if n == 0 {
        return ModuleHom::identity(ring.clone(), group.clone());
    }
    for _ in 0..steps {
        let kind = rng.below(4);
        if kind == 0 || n == 1 {
            let i = rng.below(n as u64) as usize;
            let u = random_unit(rng, ring, &orders[i]);
            for r in 0..n {
                let v = ring.mul(m.get(r, i), &u);
                m.set(r, i, v).expect("canonical");
            }
        } else {
            let i = rng.below(n as u64) as usize;
            let j = (i + 1 + rng.below(n as u64 - 1) as usize) % n;
            let mut c = BigInt::from(rng.range(1, 2) * if rng.below(2) == 0 { 1 } else { -1 });
            let (oi, oj) = (&orders[i], &orders[j]);
            if !oj.is_zero() {
                if oi.is_zero() {
                    continue;
                }
                c *= oi / oi.gcd(oj);
            }
            let c = from_bigint(c);
            for r in 0..n {
                let v = ring.add(m.get(r, j), &ring.mul(&c, m.get(r, i)));
                m.set(r, j, v).expect("canonical");
            }
        }
    }
    ModuleHom::new(ring.clone(), group.clone(), group.clone(), m).expect("product of elementary automorphisms")
}

/// A random homomorphism with entries in `[-bound, bound]`, drawn row by row;
/// entries are multiplied by the smallest factor making the map well defined.
pub fn random_hom(rng: &mut InstanceRng, ring: &RingDescriptor, source: &CyclicSum, target: &CyclicSum, bound: i64) -> ModuleHom {
    let mut m = ExactMatrix::zeros(ring.clone(), target.len(), source.len());
    for (r, o) in target.orders().iter().enumerate() {
        for (c, s) in source.orders().iter().enumerate() {
            let mut x = BigInt::from(rng.range(-bound, bound));
            if !s.is_zero() {
                if o.is_zero() {
                    x = BigInt::zero();
                } else {
                    x *= o / o.gcd(s);
                }
            }
            m.set(r, c, from_bigint(x)).expect("canonical");
        }
    }
    ModuleHom::new(ring.clone(), source.clone(), target.clone(), m).expect("well defined by construction")
}

/// A random valid tuple: for `k = 1..t`, the blocks of row `k` are drawn in
/// column order, the diagonal one by [`random_automorphism`] with
/// `steps_per_generator · |V_k|` steps, the others by [`random_hom`].
pub fn random_tuple(rng: &mut InstanceRng, decomposition: &StarDecomposition, config: &TupleConfig) -> Result<MonodromyTuple> {
    let ring = decomposition.hom_ring();
    let t = decomposition.len();
    let mut ops = Vec::with_capacity(t);
    for k in 0..t {
        let target = decomposition.summand(k);
        let blocks = (0..t)
            .map(|i| {
                let source = decomposition.summand(i);
                if i == k {
                    random_automorphism(rng, &ring, source, config.steps_per_generator * source.len())
                } else {
                    random_hom(rng, &ring, source, target, config.entry_bound)
                }
            })
            .collect();
        ops.push(BlockRowOperator::new(decomposition.clone(), k, blocks)?);
    }
    MonodromyTuple::new(decomposition.clone(), ops)
}

/// Summand menu for integral decompositions with torsion (each has at most
/// four generators).
pub fn torsion_summand_menu() -> Vec<FgAbelianGroup> {
    let g = |free: usize, tors: &[u64]| FgAbelianGroup::new(free, tors.iter().map(|&d| BigInt::from(d)).collect()).unwrap();
    vec![
        g(1, &[]),
        g(2, &[]),
        g(0, &[2]),
        g(0, &[3]),
        g(1, &[2]),
        g(0, &[2, 4]),
        g(0, &[3, 6]),
        g(1, &[3]),
        g(2, &[4]),
        g(0, &[2, 2, 2]),
        g(1, &[2, 6]),
        g(0, &[5]),
    ]
}

/// A random element with coordinates in `[-3, 3]`, reduced into the group.
pub fn random_element(rng: &mut InstanceRng, decomposition: &StarDecomposition) -> Vec<Scalar> {
    let ring = decomposition.hom_ring();
    let v: Vec<Scalar> = (0..decomposition.total().len())
        .map(|_| ring.canonical(&int(rng.range(-3, 3))).expect("integer"))
        .collect();
    decomposition.total().reduce(&v)
}

/// A random `n × n` unimodular integer matrix: [`random_automorphism`] on `Z^n`
/// with `2n` steps.
pub fn random_unimodular(rng: &mut InstanceRng, n: usize) -> ExactMatrix {
    random_automorphism(rng, &RingDescriptor::Integers, &CyclicSum::free(n), 2 * n).matrix().clone()
}

/// A random integer matrix with entries in `[-bound, bound]` and nonzero
/// determinant, by rejection (entries drawn row by row).
pub fn random_nonsingular(rng: &mut InstanceRng, n: usize, bound: i64) -> ExactMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.range(-bound, bound)).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let q = ExactMatrix::from_i64(RingDescriptor::Rationals, &refs).expect("rectangular");
        if !q.determinant().expect("square").is_zero() {
            return ExactMatrix::from_i64(RingDescriptor::Integers, &refs).expect("rectangular");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_stream() {
        // reference outputs of SplitMix64 for seed 1234567
        let mut rng = InstanceRng::new(1234567);
        assert_eq!(rng.next_u64(), 6457827717110365317);
        assert_eq!(rng.next_u64(), 3203168211198807973);
        assert_eq!(rng.next_u64(), 9817491932198370423);
    }

    #[test]
    fn generated_tuples_are_valid() {
        let mut rng = InstanceRng::new(7);
        for ring in [
            RingDescriptor::Rationals,
            RingDescriptor::PrimeField(2),
            RingDescriptor::Integers,
            RingDescriptor::IntegersMod(6),
        ] {
            let dec = StarDecomposition::from_dims(ring, 1, &[2, 1, 3]).unwrap();
            let t = random_tuple(&mut rng, &dec, &TupleConfig::default()).unwrap();
            assert!(t.compose().is_automorphism().unwrap());
        }
        let menu = torsion_summand_menu();
        let dec = StarDecomposition::new(RingDescriptor::Integers, 1, menu[4..8].to_vec()).unwrap();
        let t = random_tuple(&mut rng, &dec, &TupleConfig::default()).unwrap();
        assert!(t.compose().is_automorphism().unwrap());
    }

    #[test]
    fn same_seed_same_tuple() {
        let dec = StarDecomposition::from_dims(RingDescriptor::Rationals, 1, &[2, 2, 1]).unwrap();
        let a = random_tuple(&mut InstanceRng::new(42), &dec, &TupleConfig::default()).unwrap();
        let b = random_tuple(&mut InstanceRng::new(42), &dec, &TupleConfig::default()).unwrap();
        assert_eq!(a, b);
    }
}
