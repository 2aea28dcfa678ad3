//! The operations behind the `mono` command-line tool.
//!
//! Each command takes the text of an instance file (when it needs one) and
//! produces the text to print plus an exit status:
//!
//! | status | meaning |
//! |---|---|
//! | 0 | success, every check passed |
//! | 1 | a verification property failed |
//! | 2 | malformed input |
//! | 3 | refused: `NotRealizable`, `TorsionPresent`, `DegenerateSeifertForm` |
//!
//! Reports are JSON objects with sorted keys, so output is a function of the
//! command, the input and the seed.

use serde_json::{json, Value};

use crate::corpus::{check_degenerate_seifert, check_quartic, example_degenerate_seifert, example_quartic, FactCheck};
use crate::duality::{dimension_chain, dualize_tuple, general_position_report};
use crate::error::Error;
use crate::group::FgAbelianGroup;
use crate::hom::{submodule_equal, Submodule};
use crate::instance::{matrix_spec, Instance, InstanceFile, ProvenanceEntry};
use crate::matrix::ExactMatrix;
use crate::random::{random_element, random_tuple, torsion_summand_menu, InstanceRng, TupleConfig};
use crate::reconstruct::{eigen_partial_check, fixed_space_at_infinity, invariant_subspace, reconstruct_tuple};
use crate::ring::{int, RingDescriptor, Scalar};
use crate::seifert::{intersection_from_seifert, monodromy_from_seifert, symmetry_report, SeifertDatum, Symmetry};
use crate::sequence::{corollary_b_check, sequence_e_constraints, CriticalValueDatum};
use crate::star::{picard_defect, FreeGroupWord, MonodromyTuple, StarDecomposition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;

pub const EXAMPLES: [&str; 3] = ["quartic", "quartic-sequence", "degenerate-seifert"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub pretty: bool,
    /// Reinterprets the instance over this ring.
    pub ring: Option<RingDescriptor>,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct GenOptions {
    pub ring: RingDescriptor,
    pub degree: u32,
    pub sizes: Vec<usize>,
    /// Over `Z`, draw the summands from a menu of groups with torsion.
    pub torsion: bool,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotRealizable { .. } | Error::TorsionPresent | Error::DegenerateSeifertForm => EXIT_REFUSED,
        Error::InconsistentData { .. } => EXIT_CHECK_FAILED,
        _ => EXIT_MALFORMED,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidRing(_) => "invalid_ring",
        Error::InvalidGroup(_) => "invalid_group",
        Error::ShapeMismatch(_) => "shape_mismatch",
        Error::InvalidScalar(..) => "invalid_scalar",
        Error::NotWellDefined(_) => "not_well_defined",
        Error::NotInvertible(_) => "not_invertible",
        Error::DiagonalBlockNotInvertible { .. } => "diagonal_block_not_invertible",
        Error::NotRealizable { .. } => "not_realizable",
        Error::TorsionPresent => "torsion_present",
        Error::FieldRequired(_) => "field_required",
        Error::DegenerateSeifertForm => "degenerate_seifert_form",
        Error::InconsistentData { .. } => "inconsistent_data",
        Error::Malformed(_) => "malformed",
    }
}

fn render(v: &Value, pretty: bool) -> String {
    let mut s = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) }.expect("serializable");
    s.push('\n');
    s
}

fn error_output(e: &Error, opts: &Options) -> Output {
    let mut body = json!({ "kind": error_kind(e), "message": e.to_string() });
    match e {
        Error::NotRealizable { k } => body["k"] = json!(k),
        Error::InconsistentData { index, .. } => body["index"] = json!(index),
        Error::DiagonalBlockNotInvertible { row } => body["row"] = json!(row),
        _ => {}
    }
    Output { stdout: render(&json!({ "error": body }), opts.pretty), code: exit_code(e) }
}

fn report(v: Value, ok: bool, opts: &Options) -> Output {
    Output { stdout: render(&v, opts.pretty), code: if ok { EXIT_OK } else { EXIT_CHECK_FAILED } }
}

fn instance_output(file: &InstanceFile, opts: &Options) -> Output {
    let mut stdout = file.to_json(opts.pretty);
    stdout.push('\n');
    Output { stdout, code: EXIT_OK }
}

fn load(input: &str, opts: &Options) -> Result<(InstanceFile, Instance), Error> {
    let mut file = InstanceFile::parse(input)?;
    if let Some(r) = &opts.ring {
        file.ring = r.to_string();
    }
    let instance = file.decode()?;
    Ok((file, instance))
}

fn carry_metadata(mut out: InstanceFile, from: &InstanceFile) -> InstanceFile {
    out.example.clone_from(&from.example);
    out.provenance.clone_from(&from.provenance);
    out
}

/// The tuple of a tuple or matrix instance, reconstructing when needed.
fn tuple_of(instance: &Instance) -> Result<MonodromyTuple, Error> {
    match instance {
        Instance::Tuple(t) => Ok(t.clone()),
        Instance::Matrix { decomposition, operator } => reconstruct_tuple(operator, decomposition),
        _ => Err(Error::Malformed("expected a tuple or matrix payload".into())),
    }
}

/// Over a field only the dimension matters: `Q^2`, `F_3`, `0`.
fn group_json(ring: &RingDescriptor, g: &FgAbelianGroup) -> Value {
    let field = match ring {
        RingDescriptor::Rationals => "Q".to_string(),
        RingDescriptor::PrimeField(p) => format!("F_{p}"),
        _ => return json!(g.to_string()),
    };
    json!(match g.free_rank() {
        0 => "0".to_string(),
        1 => field,
        d => format!("{field}^{d}"),
    })
}

fn submodule_json(s: &Submodule) -> Result<Value, Error> {
    let gens: Vec<Vec<String>> = s.generators.iter().map(|g| g.iter().map(crate::ring::format_scalar).collect()).collect();
    Ok(json!({ "group": group_json(&s.ring, &s.group()?), "generators": gens }))
}

fn check(name: &str, pass: bool) -> Value {
    json!({ "name": name, "pass": pass })
}

fn fact_checks(checks: &[FactCheck]) -> Vec<Value> {
    checks
        .iter()
        .map(|c| json!({ "name": format!("fact:{}", c.fact.id), "pass": c.holds, "source": c.fact.provenance.to_string() }))
        .collect()
}

pub fn cmd_compose(input: &str, opts: &Options) -> Output {
    let run = || -> Result<Output, Error> {
        let (file, instance) = load(input, opts)?;
        let (dec, m) = match instance {
            Instance::Tuple(t) => (t.decomposition().clone(), t.compose()),
            Instance::Matrix { decomposition, operator } => (decomposition, operator),
            _ => return Err(Error::Malformed("compose needs a tuple or matrix payload".into())),
        };
        Ok(instance_output(&carry_metadata(InstanceFile::from_matrix(&dec, &m), &file), opts))
    };
    run().unwrap_or_else(|e| error_output(&e, opts))
}

pub fn cmd_reconstruct(input: &str, opts: &Options) -> Output {
    let run = || -> Result<Output, Error> {
        let (file, instance) = load(input, opts)?;
        let (dec, m) = match instance {
            Instance::Tuple(t) => (t.decomposition().clone(), t.compose()),
            Instance::Matrix { decomposition, operator } => (decomposition, operator),
            _ => return Err(Error::Malformed("reconstruct needs a tuple or matrix payload".into())),
        };
        let tuple = reconstruct_tuple(&m, &dec)?;
        Ok(instance_output(&carry_metadata(InstanceFile::from_tuple(&tuple), &file), opts))
    };
    run().unwrap_or_else(|e| error_output(&e, opts))
}

/// Vectors and scalars for the eigenvector spot checks: basis vectors and
/// seeded random elements with `a ∈ {1, -1, 2}`, plus over a field a basis
/// of each eigenspace `Ker(M∞ - a)` so that both sides can come out true.
fn eigen_probes(tuple: &MonodromyTuple, seed: u64) -> Result<Vec<(Vec<Scalar>, Scalar)>, Error> {
    let dec = tuple.decomposition();
    let ring = dec.hom_ring();
    let n = dec.total().len();
    let scalars: Vec<Scalar> = [int(1), int(-1), int(2)].iter().map(|a| ring.canonical(a)).collect::<Result<_, _>>()?;
    let mut vectors: Vec<Vec<Scalar>> = (0..n).map(|i| (0..n).map(|j| int(i64::from(i == j))).collect()).collect();
    let mut rng = InstanceRng::new(seed);
    vectors.extend((0..4).map(|_| random_element(&mut rng, dec)));
    let mut probes = Vec::new();
    for a in &scalars {
        for v in &vectors {
            probes.push((v.clone(), a.clone()));
        }
        if ring.is_field() {
            let shifted = tuple.compose().minus_scalar(a)?;
            for v in Submodule::from_embedding(&shifted.kernel()?).generators {
                probes.push((v, a.clone()));
            }
        }
    }
    Ok(probes)
}

fn tuple_checks(tuple: &MonodromyTuple, seed: u64) -> Result<Vec<Value>, Error> {
    let dec = tuple.decomposition();
    let m = tuple.compose();
    let mut checks = vec![check("roundtrip", reconstruct_tuple(&m, dec).as_ref() == Ok(tuple))];
    let shape = tuple
        .operators()
        .iter()
        .enumerate()
        .map(|(k, op)| picard_defect(dec, op.to_full_operator(), k).map(|p| p.is_blockrow))
        .collect::<Result<Vec<_>, _>>()?;
    checks.push(check("block_row_shape", shape.iter().all(|&b| b)));
    checks.push(check("invariant_identity", submodule_equal(&invariant_subspace(tuple)?, &fixed_space_at_infinity(tuple)?)?));
    let mut eigen_ok = true;
    for (v, a) in eigen_probes(tuple, seed)? {
        let c = eigen_partial_check(tuple, &v, &a)?;
        eigen_ok &= c.lhs == c.rhs;
    }
    checks.push(check("eigen_partial", eigen_ok));
    checks.push(check("loop_at_infinity", tuple.evaluate_word(&FreeGroupWord::loop_at_infinity(tuple.len()))? == m));
    if dec.hom_ring().is_field() {
        checks.push(check("dimension_chain", dimension_chain(tuple)?.holds()));
    }
    Ok(checks)
}

fn verify_tuple(file: &InstanceFile, instance: &Instance, opts: &Options) -> Result<Output, Error> {
    let tuple = tuple_of(instance)?;
    let mut checks = tuple_checks(&tuple, opts.seed)?;
    if file.example.as_deref() == Some("quartic") {
        let lower = MonodromyTuple::identity(StarDecomposition::from_dims(tuple.decomposition().ring().clone(), 0, &[0])?)?;
        let datum = CriticalValueDatum::from_tuples(&tuple, &lower, 1, FgAbelianGroup::trivial())?;
        checks.extend(fact_checks(&check_quartic(&tuple, &datum)?));
    }
    let ok = checks.iter().all(|c| c["pass"] == json!(true));
    let notes = json!({
        "m_infinity_is_identity": tuple.compose().is_identity(),
        "t": tuple.len(),
        "total_group": group_json(&tuple.decomposition().hom_ring(), &tuple.decomposition().total_group()),
    });
    Ok(report(json!({ "command": "verify", "checks": checks, "notes": notes, "provenance": file.provenance }), ok, opts))
}

fn verify_seifert(file: &InstanceFile, l: &ExactMatrix, m: Option<&ExactMatrix>, s: Option<&ExactMatrix>, opts: &Options) -> Result<Output, Error> {
    let mut checks = Vec::new();
    let mut datum = None;
    if let Some(m) = m {
        let computed = intersection_from_seifert(l, m)?;
        if let Some(s) = s {
            checks.push(check("relation", &computed == s));
        }
        let identity = ExactMatrix::identity(RingDescriptor::Integers, l.rows());
        checks.push(check("identity_gives_zero_form", intersection_from_seifert(l, &identity)?.is_zero()));
        match monodromy_from_seifert(l, &computed) {
            Ok(r) => checks.push(check("roundtrip", r.integral().as_ref() == Some(m))),
            Err(Error::DegenerateSeifertForm) => {}
            Err(e) => return Err(e),
        }
        datum = Some(SeifertDatum::from_l_and_m(l.clone(), m.clone())?);
    }
    if let Some(d) = &datum {
        if file.example.as_deref() == Some("degenerate-seifert") {
            checks.extend(fact_checks(&check_degenerate_seifert(d)));
        }
    }
    let ok = checks.iter().all(|c| c["pass"] == json!(true));
    let degenerate = datum.as_ref().map(SeifertDatum::is_degenerate);
    let notes = json!({ "degenerate": degenerate });
    Ok(report(json!({ "command": "verify", "checks": checks, "notes": notes, "provenance": file.provenance }), ok, opts))
}

fn sequence_report(tuple_q: &MonodromyTuple, tuple_qm1: &MonodromyTuple, data: &[CriticalValueDatum]) -> Result<(Value, bool), Error> {
    let per_datum = data
        .iter()
        .map(|d| {
            let c = sequence_e_constraints(d)?;
            let ring = d.local.decomposition().hom_ring();
            Ok(json!({
                "index": d.index,
                "coker": group_json(&ring, &c.coker),
                "ker_qm1": group_json(&ring, &d.ker_qm1),
                "h_c": group_json(&ring, &d.h_c),
                "rank_forced": c.rank_forced,
                "consistent": c.consistent,
            }))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let (verdict, ok) = match corollary_b_check(tuple_q, tuple_qm1, data) {
        Ok(v) => (json!({ "cond_i": v.cond_i, "cond_ii": v.cond_ii, "equivalent": v.equivalent }), v.equivalent),
        Err(e @ Error::InconsistentData { .. }) => (json!({ "error": e.to_string() }), false),
        Err(e) => return Err(e),
    };
    Ok((json!({ "data": per_datum, "verdict": verdict }), ok))
}

pub fn cmd_verify(input: &str, opts: &Options) -> Output {
    let run = || -> Result<Output, Error> {
        let (file, instance) = load(input, opts)?;
        match &instance {
            Instance::Tuple(_) | Instance::Matrix { .. } => verify_tuple(&file, &instance, opts),
            Instance::Seifert { l, m, s } => verify_seifert(&file, l, m.as_ref(), s.as_ref(), opts),
            Instance::SequenceE { tuple_q, tuple_qm1, data } => {
                let (mut body, mut ok) = sequence_report(tuple_q, tuple_qm1, data)?;
                if file.example.as_deref() == Some("quartic-sequence") {
                    let datum = data.first().ok_or_else(|| Error::Malformed("no critical value data".into()))?;
                    let checks = fact_checks(&check_quartic(tuple_q, datum)?);
                    ok &= checks.iter().all(|c| c["pass"] == json!(true));
                    body["checks"] = json!(checks);
                }
                body["command"] = json!("verify");
                body["provenance"] = json!(file.provenance);
                Ok(report(body, ok, opts))
            }
        }
    };
    run().unwrap_or_else(|e| error_output(&e, opts))
}

pub fn cmd_invariants(input: &str, opts: &Options) -> Output {
    let run = || -> Result<Output, Error> {
        let (_, instance) = load(input, opts)?;
        let tuple = tuple_of(&instance)?;
        let fixed = fixed_space_at_infinity(&tuple)?;
        let inv = invariant_subspace(&tuple)?;
        let equal = submodule_equal(&inv, &fixed)?;
        let mut body = json!({
            "command": "invariants",
            "fixed_at_infinity": submodule_json(&fixed)?,
            "invariants": submodule_json(&inv)?,
            "equal": equal,
            "dimension_chain": Value::Null,
            "general_position": Value::Null,
        });
        if tuple.decomposition().hom_ring().is_field() {
            let c = dimension_chain(&tuple)?;
            body["dimension_chain"] = json!({
                "dim_inv_homology": c.dim_inv_homology,
                "dim_ker_minf_homology": c.dim_ker_minf_homology,
                "dim_ker_minf_cohomology": c.dim_ker_minf_cohomology,
                "dim_inv_cohomology": c.dim_inv_cohomology,
                "per_operator": c.per_operator,
                "holds": c.holds(),
                "strict": c.is_strict(),
            });
            if tuple.len() <= 12 {
                let g = general_position_report(&tuple)?;
                let failures: Vec<Vec<usize>> = g.failures.iter().map(|s| s.iter().map(|k| k + 1).collect()).collect();
                body["general_position"] = json!({
                    "kernel_dims": g.kernel_dims,
                    "in_general_position": g.in_general_position(),
                    "failures": failures,
                });
            }
        }
        Ok(report(body, equal, opts))
    };
    run().unwrap_or_else(|e| error_output(&e, opts))
}

pub fn cmd_dualize(input: &str, opts: &Options) -> Output {
    let run = || -> Result<Output, Error> {
        let (_, instance) = load(input, opts)?;
        let tuple = tuple_of(&instance)?;
        let dual = dualize_tuple(&tuple)?;
        let ops: Vec<_> = dual.operators.iter().map(|m| matrix_spec(m.matrix())).collect();
        let consistent = dual.compose() == dual.at_infinity;
        let body = json!({
            "command": "dualize",
            "operators": ops,
            "at_infinity": matrix_spec(dual.at_infinity.matrix()),
            "compose_commutes": consistent,
        });
        Ok(report(body, consistent, opts))
    };
    run().unwrap_or_else(|e| error_output(&e, opts))
}

pub fn cmd_seqcheck(input: &str, opts: &Options) -> Output {
    let run = || -> Result<Output, Error> {
        let (_, instance) = load(input, opts)?;
        let Instance::SequenceE { tuple_q, tuple_qm1, data } = instance else {
            return Err(Error::Malformed("seqcheck needs a sequence_e payload".into()));
        };
        let (mut body, ok) = sequence_report(&tuple_q, &tuple_qm1, &data)?;
        body["command"] = json!("seqcheck");
        Ok(report(body, ok, opts))
    };
    run().unwrap_or_else(|e| error_output(&e, opts))
}

fn symmetry_name(s: Symmetry) -> &'static str {
    match s {
        Symmetry::Symmetric => "symmetric",
        Symmetry::Antisymmetric => "antisymmetric",
        Symmetry::Both => "both",
        Symmetry::Neither => "neither",
    }
}

pub fn cmd_seifert(input: &str, opts: &Options) -> Output {
    let run = || -> Result<Output, Error> {
        let (_, instance) = load(input, opts)?;
        let Instance::Seifert { l, m, s } = instance else {
            return Err(Error::Malformed("seifert needs a seifert payload".into()));
        };
        match (m, s) {
            (Some(m), given) => {
                let computed = intersection_from_seifert(&l, &m)?;
                let relation = given.as_ref().map(|s| s == &computed);
                let body = json!({
                    "command": "seifert",
                    "s": matrix_spec(&computed),
                    "symmetry": symmetry_name(symmetry_report(&computed)),
                    "degenerate": SeifertDatum::from_l_and_m(l, m)?.is_degenerate(),
                    "relation_holds": relation,
                });
                Ok(report(body, relation != Some(false), opts))
            }
            (None, Some(s)) => {
                let r = monodromy_from_seifert(&l, &s)?;
                let body = json!({
                    "command": "seifert",
                    "m": matrix_spec(&r.m),
                    "realizable": r.realizable,
                    "symmetry": symmetry_name(symmetry_report(&s)),
                });
                Ok(report(body, true, opts))
            }
            (None, None) => Err(Error::Malformed("seifert payload needs m or s".into())),
        }
    };
    run().unwrap_or_else(|e| error_output(&e, opts))
}

/// A random valid tuple instance. Over `Z` with `torsion`, each summand is
/// drawn from [`torsion_summand_menu`] (one draw per summand, before the
/// operators) and `sizes` only fixes their number.
pub fn cmd_gen(gen: &GenOptions, opts: &Options) -> Output {
    let run = || -> Result<Output, Error> {
        let mut rng = InstanceRng::new(opts.seed);
        let dec = if gen.torsion {
            if gen.ring != RingDescriptor::Integers {
                return Err(Error::InvalidRing("torsion summands need the ring Z".into()));
            }
            let menu = torsion_summand_menu();
            let summands = gen.sizes.iter().map(|_| rng.pick(&menu).clone()).collect();
            StarDecomposition::new(gen.ring.clone(), gen.degree, summands)?
        } else {
            StarDecomposition::from_dims(gen.ring.clone(), gen.degree, &gen.sizes)?
        };
        let tuple = random_tuple(&mut rng, &dec, &TupleConfig::default())?;
        Ok(instance_output(&InstanceFile::from_tuple(&tuple), opts))
    };
    run().unwrap_or_else(|e| error_output(&e, opts))
}

fn provenance_entries(facts: &[crate::corpus::Fact]) -> Vec<ProvenanceEntry> {
    facts
        .iter()
        .map(|f| ProvenanceEntry { id: f.id.into(), statement: f.statement.into(), source: f.provenance.to_string() })
        .collect()
}

pub fn example_file(name: &str) -> Result<InstanceFile, Error> {
    let mut file = match name {
        "quartic" => {
            let q = example_quartic();
            let mut f = InstanceFile::from_tuple(&q.tuple);
            f.provenance = provenance_entries(&q.facts);
            f
        }
        "quartic-sequence" => {
            let q = example_quartic();
            let lower = MonodromyTuple::identity(StarDecomposition::from_dims(RingDescriptor::Integers, 0, &[0])?)?;
            let mut f = InstanceFile::from_sequence(&q.tuple, &lower, std::slice::from_ref(&q.datum));
            f.provenance = provenance_entries(&q.facts);
            f
        }
        "degenerate-seifert" => {
            let d = example_degenerate_seifert();
            let mut f = InstanceFile::from_seifert(&d.datum.l, Some(&d.datum.m), Some(&d.datum.s));
            f.provenance = provenance_entries(&d.facts);
            f
        }
        _ => return Err(Error::Malformed(format!("unknown example {name:?}; known: {}", EXAMPLES.join(", ")))),
    };
    file.example = Some(name.to_string());
    Ok(file)
}

pub fn cmd_example(name: &str, opts: &Options) -> Output {
    match example_file(name) {
        Ok(f) => instance_output(&f, opts),
        Err(e) => error_output(&e, opts),
    }
}
