//! Coefficient rings and their exact scalars.
//!
//! Every scalar is carried as a [`BigRational`]; the ring decides which values
//! are admissible and how they are normalised. Integers have denominator 1,
//! residues live in `[0, n)`, rationals are kept reduced with a positive
//! denominator (which `num-rational` already guarantees).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    Rationals,
    /// `Z/nZ` with `n >= 2`, composite moduli allowed.
    IntegersMod(u64),
    /// `F_p` with `p` prime.
    PrimeField(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Inverse of `a` modulo `n`, if `gcd(a, n) = 1`.
pub fn mod_inverse(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    let ext = a.mod_floor(n).extended_gcd(n);
    if ext.gcd.is_one() {
        Some(ext.x.mod_floor(n))
    } else {
        None
    }
}

pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

pub fn from_bigint(v: BigInt) -> Scalar {
    BigRational::from_integer(v)
}

impl RingDescriptor {
    pub fn integers_mod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("Z/{n} needs n >= 2")));
        }
        Ok(Self::IntegersMod(n))
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(Self::PrimeField(p))
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Self::Rationals | Self::PrimeField(_))
    }

    pub fn modulus(&self) -> Option<BigInt> {
        match self {
            Self::IntegersMod(n) | Self::PrimeField(n) => Some(BigInt::from(*n)),
            _ => None,
        }
    }

    /// Ring in which module homomorphisms are computed. Modules over `Z/n`
    /// are handled as abelian groups with invariant factors `n`.
    pub fn hom_ring(&self) -> RingDescriptor {
        match self {
            Self::IntegersMod(_) => Self::Integers,
            other => other.clone(),
        }
    }

    /// Brings a rational value into canonical form for this ring, failing when
    /// it has no image (a fraction over `Z`, or a denominator that is not a
    /// unit modulo `n`).
    pub fn canonical(&self, x: &Scalar) -> Result<Scalar> {
        match self {
            Self::Rationals => Ok(x.clone()),
            Self::Integers => {
                if x.is_integer() {
                    Ok(x.clone())
                } else {
                    Err(Error::InvalidScalar(x.to_string(), self.to_string()))
                }
            }
            Self::IntegersMod(_) | Self::PrimeField(_) => {
                let n = self.modulus().unwrap();
                let inv = mod_inverse(x.denom(), &n)
                    .ok_or_else(|| Error::InvalidScalar(x.to_string(), self.to_string()))?;
                Ok(from_bigint((x.numer() * inv).mod_floor(&n)))
            }
        }
    }

    fn wrap(&self, x: Scalar) -> Scalar {
        match self.modulus() {
            Some(n) => from_bigint(x.to_integer().mod_floor(&n)),
            None => x,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.wrap(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.wrap(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.wrap(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.wrap(-a)
    }

    /// Multiplicative inverse. Over `Z` only `±1` are units; over `Z/n` the
    /// inverse is found with the extended Euclidean algorithm.
    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        let fail = || Error::NotInvertible(format!("{a} in {self}"));
        match self {
            Self::Rationals => {
                if a.is_zero() {
                    Err(fail())
                } else {
                    Ok(a.recip())
                }
            }
            Self::Integers => {
                if a.abs().is_one() {
                    Ok(a.clone())
                } else {
                    Err(fail())
                }
            }
            Self::IntegersMod(_) | Self::PrimeField(_) => {
                let n = self.modulus().unwrap();
                mod_inverse(&a.to_integer(), &n).map(from_bigint).ok_or_else(fail)
            }
        }
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        self.inv(a).is_ok()
    }

    /// Parses a decimal string, `p/q` fractions included.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::Malformed(format!("not a number: {s:?}"));
        let s = s.trim();
        let value = match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                BigRational::new(p, q)
            }
            None => from_bigint(s.parse().map_err(|_| bad())?),
        };
        self.canonical(&value)
    }
}

/// Decimal string form used on the wire: integers as `"-12"`, fractions as
/// `"p/q"` with `q > 0`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integers => write!(f, "Z"),
            Self::Rationals => write!(f, "Q"),
            Self::IntegersMod(n) => write!(f, "Zn:{n}"),
            Self::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "Z" => return Ok(Self::Integers),
            "Q" => return Ok(Self::Rationals),
            _ => {}
        }
        let parse_mod = |rest: &str| {
            rest.parse::<u64>()
                .map_err(|_| Error::InvalidRing(format!("bad modulus in {s:?}")))
        };
        if let Some(rest) = s.strip_prefix("Fp:") {
            Self::prime_field(parse_mod(rest)?)
        } else if let Some(rest) = s.strip_prefix("Zn:") {
            Self::integers_mod(parse_mod(rest)?)
        } else {
            Err(Error::InvalidRing(format!("unknown ring {s:?}")))
        }
    }
}
