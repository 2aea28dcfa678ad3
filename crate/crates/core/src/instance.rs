//! The JSON instance format read and written by the `mono` tool.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "ring": "Z",
//!   "degree": 1,
//!   "decomposition": [{"free_rank": 0, "torsion": ["3"]}],
//!   "payload": {"kind": "tuple", "operators": [{"row": 1, "blocks": [[["2"]]]}]}
//! }
//! ```
//!
//! Numbers are decimal strings (`"-3"`, `"5/2"`); bare JSON integers are
//! accepted on input. Over a field or `Z/n` a summand is `{"dim": d}`, over
//! `Z` it is `{"free_rank": r, "torsion": [d_1, ...]}` with `d_i | d_{i+1}`.
//! Blocks are `rows × columns` matrices, rows first; `row` and `index`
//! fields count from 1.

use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::FgAbelianGroup;
use crate::hom::ModuleHom;
use crate::matrix::ExactMatrix;
use crate::ring::{format_scalar, RingDescriptor, Scalar};
use crate::sequence::{local_kernel, CriticalValueDatum};
use crate::star::{BlockRowOperator, MonodromyTuple, StarDecomposition};

pub const SCHEMA_VERSION: u32 = 1;

/// A number on the wire, kept as its decimal text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Num(pub String);

impl Num {
    pub fn from_scalar(x: &Scalar) -> Self {
        Num(format_scalar(x))
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct NumVisitor;
        impl Visitor<'_> for NumVisitor {
            type Value = Num;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a decimal string or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Num, E> {
                Ok(Num(v.to_string()))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Num, E> {
                Ok(Num(v.to_string()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Num, E> {
                Ok(Num(v.to_string()))
            }
        }
        d.deserialize_any(NumVisitor)
    }
}

pub type MatrixSpec = Vec<Vec<Num>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub free_rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion: Option<Vec<Num>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSpec {
    pub row: usize,
    pub blocks: Vec<MatrixSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LowerSpec {
    pub decomposition: Vec<SummandSpec>,
    pub operators: Vec<OperatorSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumSpec {
    pub index: usize,
    pub h_c: SummandSpec,
    /// Computed from the lower tuple when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ker_qm1: Option<SummandSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Tuple {
        operators: Vec<OperatorSpec>,
    },
    Matrix {
        matrix: MatrixSpec,
    },
    Seifert {
        l: MatrixSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        m: Option<MatrixSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        s: Option<MatrixSpec>,
    },
    SequenceE {
        operators: Vec<OperatorSpec>,
        lower: LowerSpec,
        data: Vec<DatumSpec>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProvenanceEntry {
    pub id: String,
    pub statement: String,
    /// `stated` or `derived`.
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub schema: u32,
    pub ring: String,
    #[serde(default)]
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub decomposition: Vec<SummandSpec>,
    pub payload: Payload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub example: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub provenance: Vec<ProvenanceEntry>,
}

/// A decoded instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Tuple(MonodromyTuple),
    Matrix { decomposition: StarDecomposition, operator: ModuleHom },
    Seifert { l: ExactMatrix, m: Option<ExactMatrix>, s: Option<ExactMatrix> },
    SequenceE { tuple_q: MonodromyTuple, tuple_qm1: MonodromyTuple, data: Vec<CriticalValueDatum> },
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

fn parse_bigint(n: &Num) -> Result<BigInt> {
    n.0.trim().parse().map_err(|_| malformed(format!("not an integer: {:?}", n.0)))
}

pub fn summand_spec(ring: &RingDescriptor, g: &FgAbelianGroup) -> SummandSpec {
    match ring {
        RingDescriptor::Integers => SummandSpec {
            dim: None,
            free_rank: Some(g.free_rank()),
            torsion: Some(g.invariant_factors().iter().map(|d| Num(d.to_string())).collect()),
        },
        _ => SummandSpec { dim: Some(g.generator_count()), free_rank: None, torsion: None },
    }
}

/// The group described by a summand spec over `ring`; over `Z/n` a
/// dimension means a power of `Z/n`.
pub fn decode_summand(ring: &RingDescriptor, s: &SummandSpec) -> Result<FgAbelianGroup> {
    match (s.dim, s.free_rank, &s.torsion) {
        (Some(d), None, None) => match ring {
            RingDescriptor::IntegersMod(n) => FgAbelianGroup::new(0, vec![BigInt::from(*n); d]),
            _ => Ok(FgAbelianGroup::free(d)),
        },
        (None, Some(r), t) => {
            let torsion = t.iter().flatten().map(parse_bigint).collect::<Result<Vec<_>>>()?;
            FgAbelianGroup::new(r, torsion)
        }
        _ => Err(malformed("a summand is either {dim} or {free_rank, torsion}")),
    }
}

fn decode_decomposition(ring: &RingDescriptor, degree: u32, specs: &[SummandSpec]) -> Result<StarDecomposition> {
    let summands = specs.iter().map(|s| decode_summand(ring, s)).collect::<Result<Vec<_>>>()?;
    StarDecomposition::new(ring.clone(), degree, summands)
}

pub fn matrix_spec(m: &ExactMatrix) -> MatrixSpec {
    m.to_rows().iter().map(|r| r.iter().map(Num::from_scalar).collect()).collect()
}

/// Parses `rows × cols` entries; a matrix without rows is written `[]`.
fn decode_matrix(ring: &RingDescriptor, spec: &MatrixSpec, rows: usize, cols: usize) -> Result<ExactMatrix> {
    if spec.len() != rows || spec.iter().any(|r| r.len() != cols) {
        return Err(malformed(format!("expected a {rows}x{cols} matrix")));
    }
    let entries = spec.iter().flatten().map(|x| ring.parse_scalar(&x.0)).collect::<Result<Vec<_>>>()?;
    ExactMatrix::new(ring.clone(), rows, cols, entries)
}

fn decode_square(ring: &RingDescriptor, spec: &MatrixSpec) -> Result<ExactMatrix> {
    decode_matrix(ring, spec, spec.len(), spec.len())
}

fn decode_tuple(dec: &StarDecomposition, specs: &[OperatorSpec]) -> Result<MonodromyTuple> {
    let ring = dec.hom_ring();
    let t = dec.len();
    if specs.len() != t {
        return Err(malformed(format!("{} operators for {t} summands", specs.len())));
    }
    let operators = specs
        .iter()
        .enumerate()
        .map(|(k, spec)| {
            if spec.row != k + 1 {
                return Err(malformed(format!("operator {} is labelled row {}", k + 1, spec.row)));
            }
            if spec.blocks.len() != t {
                return Err(malformed(format!("operator {} has {} blocks", k + 1, spec.blocks.len())));
            }
            let target = dec.summand(k);
            let blocks = spec
                .blocks
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    let source = dec.summand(i);
                    let m = decode_matrix(&ring, b, target.len(), source.len())?;
                    ModuleHom::new(ring.clone(), source.clone(), target.clone(), m)
                })
                .collect::<Result<Vec<_>>>()?;
            BlockRowOperator::new(dec.clone(), k, blocks)
        })
        .collect::<Result<Vec<_>>>()?;
    MonodromyTuple::new(dec.clone(), operators)
}

fn operator_specs(tuple: &MonodromyTuple) -> Vec<OperatorSpec> {
    tuple
        .operators()
        .iter()
        .map(|op| OperatorSpec { row: op.row() + 1, blocks: op.blocks().iter().map(|b| matrix_spec(b.matrix())).collect() })
        .collect()
}

fn decomposition_specs(dec: &StarDecomposition) -> Vec<SummandSpec> {
    dec.summands().iter().map(|g| summand_spec(dec.ring(), g)).collect()
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: Self = serde_json::from_str(text).map_err(|e| malformed(e.to_string()))?;
        if file.schema != SCHEMA_VERSION {
            return Err(malformed(format!("unsupported schema {}", file.schema)));
        }
        Ok(file)
    }

    pub fn to_json(&self, pretty: bool) -> String {
        if pretty {
            serde_json::to_string_pretty(self).expect("serializable")
        } else {
            serde_json::to_string(self).expect("serializable")
        }
    }

    pub fn ring(&self) -> Result<RingDescriptor> {
        self.ring.parse()
    }

    fn blank(ring: &RingDescriptor, degree: u32, decomposition: Vec<SummandSpec>, payload: Payload) -> Self {
        Self { schema: SCHEMA_VERSION, ring: ring.to_string(), degree, decomposition, payload, example: None, provenance: Vec::new() }
    }

    pub fn from_tuple(tuple: &MonodromyTuple) -> Self {
        let dec = tuple.decomposition();
        Self::blank(dec.ring(), dec.degree(), decomposition_specs(dec), Payload::Tuple { operators: operator_specs(tuple) })
    }

    pub fn from_matrix(decomposition: &StarDecomposition, operator: &ModuleHom) -> Self {
        Self::blank(
            decomposition.ring(),
            decomposition.degree(),
            decomposition_specs(decomposition),
            Payload::Matrix { matrix: matrix_spec(operator.matrix()) },
        )
    }

    pub fn from_seifert(l: &ExactMatrix, m: Option<&ExactMatrix>, s: Option<&ExactMatrix>) -> Self {
        let payload = Payload::Seifert { l: matrix_spec(l), m: m.map(matrix_spec), s: s.map(matrix_spec) };
        Self::blank(&RingDescriptor::Integers, 0, Vec::new(), payload)
    }

    pub fn from_sequence(tuple_q: &MonodromyTuple, tuple_qm1: &MonodromyTuple, data: &[CriticalValueDatum]) -> Self {
        let dec = tuple_q.decomposition();
        let ring = dec.ring();
        let payload = Payload::SequenceE {
            operators: operator_specs(tuple_q),
            lower: LowerSpec { decomposition: decomposition_specs(tuple_qm1.decomposition()), operators: operator_specs(tuple_qm1) },
            data: data
                .iter()
                .map(|d| DatumSpec { index: d.index, h_c: summand_spec(ring, &d.h_c), ker_qm1: Some(summand_spec(ring, &d.ker_qm1)) })
                .collect(),
        };
        Self::blank(ring, dec.degree(), decomposition_specs(dec), payload)
    }

    pub fn decode(&self) -> Result<Instance> {
        let ring = self.ring()?;
        match &self.payload {
            Payload::Tuple { operators } => {
                let dec = decode_decomposition(&ring, self.degree, &self.decomposition)?;
                Ok(Instance::Tuple(decode_tuple(&dec, operators)?))
            }
            Payload::Matrix { matrix } => {
                let dec = decode_decomposition(&ring, self.degree, &self.decomposition)?;
                let n = dec.total().len();
                let m = decode_matrix(&dec.hom_ring(), matrix, n, n)?;
                let operator = ModuleHom::new(dec.hom_ring(), dec.total().clone(), dec.total().clone(), m)?;
                Ok(Instance::Matrix { decomposition: dec, operator })
            }
            Payload::Seifert { l, m, s } => {
                if ring != RingDescriptor::Integers {
                    return Err(malformed("Seifert data are integral"));
                }
                let l = decode_square(&ring, l)?;
                let m = m.as_ref().map(|m| decode_square(&ring, m)).transpose()?;
                let s = s.as_ref().map(|s| decode_square(&ring, s)).transpose()?;
                if m.is_none() && s.is_none() {
                    return Err(malformed("Seifert payload needs m or s"));
                }
                Ok(Instance::Seifert { l, m, s })
            }
            Payload::SequenceE { operators, lower, data } => {
                let dec = decode_decomposition(&ring, self.degree, &self.decomposition)?;
                let tuple_q = decode_tuple(&dec, operators)?;
                let lower_degree = self.degree.checked_sub(1).ok_or_else(|| malformed("degree 0 has no lower degree"))?;
                let lower_dec = decode_decomposition(&ring, lower_degree, &lower.decomposition)?;
                let tuple_qm1 = decode_tuple(&lower_dec, &lower.operators)?;
                if tuple_qm1.len() != tuple_q.len() || data.len() != tuple_q.len() {
                    return Err(malformed("both degrees and the data need one entry per critical value"));
                }
                let data = data
                    .iter()
                    .map(|d| {
                        if d.index == 0 || d.index > tuple_q.len() {
                            return Err(malformed(format!("critical value index {} out of range", d.index)));
                        }
                        let k = d.index - 1;
                        let ker_qm1 = match &d.ker_qm1 {
                            Some(s) => decode_summand(&ring, s)?,
                            None => local_kernel(&tuple_qm1.operators()[k])?,
                        };
                        Ok(CriticalValueDatum {
                            index: d.index,
                            local: tuple_q.operators()[k].clone(),
                            ker_qm1,
                            h_c: decode_summand(&ring, &d.h_c)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Instance::SequenceE { tuple_q, tuple_qm1, data })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::example_quartic;
    use crate::random::{random_tuple, InstanceRng, TupleConfig};

    #[test]
    fn tuple_roundtrip_through_json() {
        let dec = StarDecomposition::from_dims(RingDescriptor::Rationals, 1, &[2, 0, 1]).unwrap();
        let t = random_tuple(&mut InstanceRng::new(3), &dec, &TupleConfig::default()).unwrap();
        let text = InstanceFile::from_tuple(&t).to_json(false);
        assert_eq!(InstanceFile::parse(&text).unwrap().decode().unwrap(), Instance::Tuple(t));
    }

    #[test]
    fn torsion_roundtrip_and_wire_shape() {
        let q = example_quartic();
        let file = InstanceFile::from_tuple(&q.tuple);
        let text = file.to_json(false);
        assert_eq!(
            text,
            r#"{"schema":1,"ring":"Z","degree":1,"decomposition":[{"free_rank":0,"torsion":["3"]}],"payload":{"kind":"tuple","operators":[{"row":1,"blocks":[[["2"]]]}]}}"#
        );
        assert_eq!(InstanceFile::parse(&text).unwrap().decode().unwrap(), Instance::Tuple(q.tuple));
    }

    #[test]
    fn sequence_roundtrip() {
        let q = example_quartic();
        let lower = MonodromyTuple::identity(StarDecomposition::from_dims(RingDescriptor::Integers, 0, &[0]).unwrap()).unwrap();
        let file = InstanceFile::from_sequence(&q.tuple, &lower, std::slice::from_ref(&q.datum));
        let back = InstanceFile::parse(&file.to_json(true)).unwrap().decode().unwrap();
        assert_eq!(back, Instance::SequenceE { tuple_q: q.tuple, tuple_qm1: lower, data: vec![q.datum] });
    }

    #[test]
    fn bare_integers_and_fractions() {
        let text = r#"{"schema":1,"ring":"Q","decomposition":[{"dim":2}],"payload":{"kind":"matrix","matrix":[[1,"1/2"],[0,"-3"]]}}"#;
        let Instance::Matrix { operator, .. } = InstanceFile::parse(text).unwrap().decode().unwrap() else {
            panic!("matrix payload");
        };
        assert_eq!(operator.matrix().get(0, 1), &(crate::ring::int(1) / crate::ring::int(2)));
    }

    #[test]
    fn malformed_inputs() {
        for text in [
            "{",
            r#"{"schema":2,"ring":"Q","payload":{"kind":"matrix","matrix":[]}}"#,
            r#"{"schema":1,"ring":"Q","decomposition":[{"dim":1}],"payload":{"kind":"matrix","matrix":[["1","2"]]}}"#,
            r#"{"schema":1,"ring":"Q","decomposition":[{"dim":1}],"payload":{"kind":"matrix","matrix":[["x"]]}}"#,
            r#"{"schema":1,"ring":"Q","decomposition":[{"dim":1}],"payload":{"kind":"matrix","matrix":[["1"]]},"extra":0}"#,
        ] {
            let r = InstanceFile::parse(text).and_then(|f| f.decode());
            assert!(matches!(r, Err(Error::Malformed(_))), "{text}: {r:?}");
        }
    }
}
