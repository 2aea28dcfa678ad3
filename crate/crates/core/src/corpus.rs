//! Worked examples as fixtures, each with the facts it is expected to satisfy.
//!
//! Every fact is labelled `stated` (a fact about the example asserted by the
//! source of the example) or `derived` (a consequence or a choice made here to
//! turn the example into concrete matrices). Facts are evaluated through the
//! generic operations only.

use std::fmt;

use crate::duality::{dualize_tuple, rational_shadow};
use crate::error::{Error, Result};
use crate::group::FgAbelianGroup;
use crate::hom::ModuleHom;
use crate::matrix::ExactMatrix;
use crate::reconstruct::reconstruct_tuple;
use crate::ring::RingDescriptor;
use crate::seifert::{monodromy_from_seifert, SeifertDatum};
use crate::sequence::{sequence_e_constraints, CriticalValueDatum};
use crate::star::{MonodromyTuple, StarDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Stated,
    Derived,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Stated => "stated",
            Provenance::Derived => "derived",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub id: &'static str,
    pub statement: &'static str,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactCheck {
    pub fact: Fact,
    pub holds: bool,
}

const fn fact(id: &'static str, statement: &'static str, provenance: Provenance) -> Fact {
    Fact { id, statement, provenance }
}

/// The three-cuspidal quartic `x²y² + y²z² + x²z² - 2xyz(x+y+z)`: one critical
/// value, `H_1(F) = Z/3`, and the local monodromy is the nontrivial
/// automorphism of `Z/3` (multiplication by `-1 ≡ 2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticFixture {
    pub tuple: MonodromyTuple,
    /// The datum at the critical value `0` in degree 1: `H_0` of the generic
    /// fiber vanishes (reduced, connected fiber) and `H_c^4(F_0) = 0`.
    pub datum: CriticalValueDatum,
    pub facts: Vec<Fact>,
}

pub const QUARTIC_FACTS: [Fact; 7] = [
    fact("single_critical_value", "t = 1", Provenance::Stated),
    fact("h1_is_z3", "H_1(F) = Z/3", Provenance::Stated),
    fact("m_is_minus_one", "m_{1,1} is multiplication by -1 = 2, the only nontrivial automorphism of Z/3", Provenance::Derived),
    fact("image_is_z3", "Im(m_{1,1} - 1) = Z/3", Provenance::Stated),
    fact("homology_minf_nontrivial", "M_inf(f)_1 != Id", Provenance::Stated),
    fact("duality_refuses_torsion", "dualizing raises TorsionPresent while the rational shadow is trivial, matching H^1(F) = 0 and M_inf(f)^1 = 1", Provenance::Derived),
    fact("sequence_consistent", "the exact sequence at b_1 = 0 is consistent with H_c^4(F_0) = 0", Provenance::Stated),
];

pub fn example_quartic() -> QuarticFixture {
    let z = RingDescriptor::Integers;
    let z3 = FgAbelianGroup::cyclic(3).expect("3 > 1");
    let dec = StarDecomposition::new(z.clone(), 1, vec![z3.clone()]).expect("Z/3 over Z");
    let m = ModuleHom::new(z.clone(), dec.total().clone(), dec.total().clone(), ExactMatrix::from_i64(z.clone(), &[&[2]]).expect("1x1"))
        .expect("well defined");
    let tuple = reconstruct_tuple(&m, &dec).expect("an automorphism of a single summand");
    let lower = MonodromyTuple::identity(StarDecomposition::from_dims(z, 0, &[0]).expect("trivial")).expect("identity");
    let datum = CriticalValueDatum::from_tuples(&tuple, &lower, 1, FgAbelianGroup::trivial()).expect("index 1");
    QuarticFixture { tuple, datum, facts: QUARTIC_FACTS.to_vec() }
}

/// Evaluates [`QUARTIC_FACTS`] on a tuple and a datum (normally the fixture).
pub fn check_quartic(tuple: &MonodromyTuple, datum: &CriticalValueDatum) -> Result<Vec<FactCheck>> {
    let z3 = FgAbelianGroup::cyclic(3).expect("3 > 1");
    let op = tuple.operators().first().ok_or_else(|| Error::ShapeMismatch("empty tuple".into()))?;
    let two = ExactMatrix::from_i64(RingDescriptor::Integers, &[&[2]])?;
    let shadow_trivial = match rational_shadow(tuple) {
        Ok(s) => {
            let d = dualize_tuple(&s)?;
            s.decomposition().total().is_empty() && d.at_infinity.is_identity()
        }
        Err(_) => false,
    };
    let holds = [
        tuple.len() == 1,
        tuple.decomposition().total_group() == z3,
        op.diagonal().matrix() == &two,
        op.defect_row().image()?.group == z3,
        !tuple.compose().is_identity(),
        dualize_tuple(tuple) == Err(Error::TorsionPresent) && shadow_trivial,
        datum.h_c.is_trivial() && sequence_e_constraints(datum)?.consistent,
    ];
    Ok(QUARTIC_FACTS.iter().cloned().zip(holds).map(|(fact, holds)| FactCheck { fact, holds }).collect())
}

/// A rank-2 datum with `S = 0` and `M ≠ I`, the behaviour of `x²y² + y`.
/// The matrices are a choice: `L = 0` and the unipotent `M = [[1, 1], [0, 1]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenerateSeifertFixture {
    pub datum: SeifertDatum,
    pub facts: Vec<Fact>,
}

pub const DEGENERATE_SEIFERT_FACTS: [Fact; 4] = [
    fact("zero_intersection_form", "S = 0", Provenance::Stated),
    fact("monodromy_nontrivial", "M_inf(f)_1 != 1", Provenance::Stated),
    fact("seifert_form_degenerate", "L is singular, so S = 0 does not force M = I", Provenance::Derived),
    fact("matrices_chosen", "L = 0 and M = [[1, 1], [0, 1]] are a witness, not the geometric matrices", Provenance::Derived),
];

pub fn example_degenerate_seifert() -> DegenerateSeifertFixture {
    let z = RingDescriptor::Integers;
    let l = ExactMatrix::zeros(z.clone(), 2, 2);
    let m = ExactMatrix::from_i64(z, &[&[1, 1], &[0, 1]]).expect("2x2");
    let datum = SeifertDatum::from_l_and_m(l, m).expect("unimodular M");
    DegenerateSeifertFixture { datum, facts: DEGENERATE_SEIFERT_FACTS.to_vec() }
}

pub fn check_degenerate_seifert(datum: &SeifertDatum) -> Vec<FactCheck> {
    let holds = [
        datum.s.is_zero(),
        !datum.m.is_identity(),
        datum.is_degenerate() && monodromy_from_seifert(&datum.l, &datum.s) == Err(Error::DegenerateSeifertForm),
        datum.size() == 2 && datum.l.is_zero(),
    ];
    DEGENERATE_SEIFERT_FACTS.iter().cloned().zip(holds).map(|(fact, holds)| FactCheck { fact, holds }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_facts_hold() {
        let f = example_quartic();
        let checks = check_quartic(&f.tuple, &f.datum).unwrap();
        assert_eq!(checks.len(), 7);
        for c in checks {
            assert!(c.holds, "{}", c.fact.id);
        }
    }

    #[test]
    fn degenerate_seifert_facts_hold() {
        let f = example_degenerate_seifert();
        assert!(check_degenerate_seifert(&f.datum).iter().all(|c| c.holds));
    }

    #[test]
    fn identity_tuple_fails_the_quartic_facts() {
        let f = example_quartic();
        let id = MonodromyTuple::identity(f.tuple.decomposition().clone()).unwrap();
        let checks = check_quartic(&id, &f.datum).unwrap();
        assert!(!checks[4].holds);
    }
}
