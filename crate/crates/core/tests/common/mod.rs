//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use monodromy::random::{random_tuple, torsion_summand_menu, InstanceRng, TupleConfig};
use monodromy::ring::RingDescriptor;
use monodromy::star::{MonodromyTuple, StarDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Rationals,
    F2,
    F3,
    F101,
    IntegersUnimodular,
    IntegersTorsion,
}

pub const FAMILIES: [Family; 6] =
    [Family::Rationals, Family::F2, Family::F3, Family::F101, Family::IntegersUnimodular, Family::IntegersTorsion];

pub const FIELD_FAMILIES: [Family; 4] = [Family::Rationals, Family::F2, Family::F3, Family::F101];

impl Family {
    pub fn ring(self) -> RingDescriptor {
        match self {
            Family::Rationals => RingDescriptor::Rationals,
            Family::F2 => RingDescriptor::PrimeField(2),
            Family::F3 => RingDescriptor::PrimeField(3),
            Family::F101 => RingDescriptor::PrimeField(101),
            Family::IntegersUnimodular | Family::IntegersTorsion => RingDescriptor::Integers,
        }
    }
}

/// `t` in `[1, max_t]`, then each summand: a size in `[1, max_size]`, or a
/// group from the torsion menu.
pub fn random_decomposition(rng: &mut InstanceRng, family: Family, max_t: usize, max_size: usize) -> StarDecomposition {
    let t = rng.range(1, max_t as i64) as usize;
    if family == Family::IntegersTorsion {
        let menu = torsion_summand_menu();
        let summands = (0..t).map(|_| rng.pick(&menu).clone()).collect();
        return StarDecomposition::new(family.ring(), 1, summands).unwrap();
    }
    let sizes: Vec<usize> = (0..t).map(|_| rng.range(1, max_size as i64) as usize).collect();
    StarDecomposition::from_dims(family.ring(), 1, &sizes).unwrap()
}

pub fn random_family_tuple(rng: &mut InstanceRng, family: Family, max_t: usize, max_size: usize) -> MonodromyTuple {
    let dec = random_decomposition(rng, family, max_t, max_size);
    random_tuple(rng, &dec, &TupleConfig::default()).unwrap()
}

/// Determinant by cofactor expansion along the first row.
pub fn det(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return a[0][0];
    }
    let mut total = 0;
    for c in 0..n {
        if a[0][c] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = a[1..].iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect()).collect();
        let sign = if c % 2 == 0 { 1 } else { -1 };
        total += sign * a[0][c] * det(&minor);
    }
    total
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: `d_k = g_k / g_{k-1}`,
/// with `g_k` the gcd of all `k × k` minors. Returns `min(rows, cols)`
/// entries, zeros past the rank.
pub fn minor_gcd_invariants(a: &[Vec<i128>], cols: usize) -> Vec<i128> {
    let rows = a.len();
    let r = rows.min(cols);
    let mut out = Vec::with_capacity(r);
    let mut prev = 1;
    for k in 1..=r {
        let mut g = 0;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let m: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j]).collect()).collect();
                g = gcd(g, det(&m));
            }
        }
        if g == 0 {
            out.resize(r, 0);
            return out;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}
