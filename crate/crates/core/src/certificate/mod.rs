//! JSON realization certificates: schema, canonical emission, parsing and
//! validation.
//!
//! Canonical form: object keys sorted, two-space indentation, trailing
//! newline. Rationals are `"p/q"` strings (`"p"` when `q = 1`), univariate
//! polynomials ascending coefficient arrays, bivariate polynomials arrays of
//! rows indexed by the power of `T`, number-field elements coordinate arrays
//! in the powers of the field generator, permutations cycle notation.

mod family;
mod validate;

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::exact::{render_qbipoly, render_qpoly, render_rational, Poly};
use crate::groupspec::GroupSpec;
use crate::numfield::{NfElem, OrbitFamily};
use crate::pipeline::{
    DistinctMode, PairDistinctness, ParameterChoice, PipelineState, Realization, RunOptions, SpecializationRecord,
    Verification,
};

pub use family::{DistinctnessRecord, S3Record, ShapeRecord};
pub use validate::{validate, validate_certificate, Check, ValidationReport};

pub const FORMAT: &str = "autfield-realization/1";
/// Recorded for pairs whose distinctness is not computed.
pub const GUARANTEED_CITE: &str = "condition (eq)";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("I/O error: {0}")]
    Io(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("schema violations:\n  {}", .0.join("\n  "))]
    Schema(Vec<String>),
}

type Coeffs = Vec<String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealizationCertificate {
    pub format: String,
    pub version: String,
    pub group: GroupRecord,
    pub splitting_field: SplittingRecord,
    pub parameter: ParameterRecord,
    pub primitive_element: PrimitiveRecord,
    pub bad_set: BadSetRecord,
    pub s3: S3Record,
    pub search: SearchRecord,
    pub fields: Vec<FieldRecord>,
    pub pairs: Vec<PairRecord>,
    pub determinism: DeterminismRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupRecord {
    pub spec: GroupSpec,
    pub order: usize,
    /// Sorted; indices into this list are the domain of each witness.
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplittingRecord {
    /// `Xⁿ − X − 1`, or `X` for `n = 1`.
    pub polynomial: Coeffs,
    pub modulus: Coeffs,
    pub degree: usize,
    pub roots: Vec<Coeffs>,
    pub galois: Vec<GaloisRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaloisRecord {
    pub sigma: String,
    /// Image of the generator of `L`.
    pub image: Coeffs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParameterRecord {
    /// `"canonical"` (`y = 0`) or `"orbit_sum"`.
    pub choice: String,
    pub orbit_power: Option<usize>,
    pub orbit_family: Option<String>,
    pub preimage: Vec<String>,
    /// `y` in `L`.
    pub y: Coeffs,
    pub minpoly: Coeffs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimitiveRecord {
    /// `c` in `z = x + c·θ_L`.
    pub shift: i64,
    pub q: Vec<Coeffs>,
    pub degree_x: usize,
    pub irreducible_at: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BadSetRecord {
    pub discriminant: Coeffs,
    pub factors: Vec<FactorRecord>,
    pub rational: Vec<String>,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorRecord {
    pub poly: Coeffs,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchRecord {
    pub count: usize,
    pub t_max: u64,
    pub max_splitting_degree: usize,
    /// `"exact"`, `"auto"` or `"assumed"`.
    pub distinct_mode: String,
    pub exact_distinctness: bool,
    pub transcript: Vec<CandidateRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidateRecord {
    pub t0: String,
    pub accepted: bool,
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldRecord {
    pub t0: String,
    pub defining_polynomial: Coeffs,
    pub degree: usize,
    /// Generator of `L` inside this field.
    pub theta: Coeffs,
    /// Root of the cubic inside this field.
    pub x: Coeffs,
    /// Generator images, identity first.
    pub automorphisms: Vec<Coeffs>,
    /// `table[i][j]` is the index of `automorphisms[i] ∘ automorphisms[j]`.
    pub table: Vec<Vec<usize>>,
    /// `witness[a]` is the automorphism matched with group element `a`.
    pub witness: Vec<usize>,
    pub lifts: Vec<LiftRecord>,
    pub primes: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LiftRecord {
    pub sigma: String,
    pub in_preimage: bool,
    pub roots: usize,
    pub trager_shift: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    pub distinctness: PairDistinctnessRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum PairDistinctnessRecord {
    Exact { forward_roots: usize, backward_roots: usize },
    Guaranteed { cite: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeterminismRecord {
    /// Primes used by the factorizations over ℚ, sorted.
    pub primes: Vec<u64>,
    pub primitive_shift: i64,
    /// Shifts used by the root computations over each field, sorted.
    pub trager_shifts: Vec<i64>,
}

pub(crate) fn elem(a: &NfElem) -> Coeffs {
    render_qpoly(a.coords())
}

pub(crate) fn elem_poly(f: &Poly<NfElem>) -> Vec<Coeffs> {
    f.coeffs().iter().map(elem).collect()
}

pub fn mode_name(m: DistinctMode) -> &'static str {
    match m {
        DistinctMode::Exact => "exact",
        DistinctMode::Auto => "auto",
        DistinctMode::Assumed => "assumed",
    }
}

fn family_name(f: OrbitFamily) -> &'static str {
    match f {
        OrbitFamily::Power => "power",
        OrbitFamily::PowerPlusLinear => "power_plus_linear",
    }
}

impl RealizationCertificate {
    pub fn from_realization(spec: &GroupSpec, r: &Realization, opts: &RunOptions) -> Self {
        let state = &r.state;
        let fields: Vec<FieldRecord> =
            r.accepted().map(|rec| field_record(rec, rec.verification().expect("accepted"))).collect();
        let mut primes: Vec<u64> = fields.iter().flat_map(|f| f.primes.iter().copied()).collect();
        primes.sort_unstable();
        primes.dedup();
        let mut trager_shifts: Vec<i64> =
            fields.iter().flat_map(|f| f.lifts.iter().map(|l| l.trager_shift)).collect();
        trager_shifts.sort_unstable();
        trager_shifts.dedup();
        RealizationCertificate {
            format: FORMAT.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            group: GroupRecord {
                spec: spec.clone(),
                order: state.group.order(),
                elements: state.group.elements().iter().map(|p| p.to_string()).collect(),
            },
            splitting_field: splitting_record(state),
            parameter: parameter_record(state),
            primitive_element: primitive_record(state),
            bad_set: bad_set_record(state),
            s3: S3Record::new(&state.base, &r.s3),
            search: SearchRecord {
                count: opts.count,
                t_max: opts.t_max,
                max_splitting_degree: opts.max_splitting_degree,
                distinct_mode: mode_name(r.distinct_mode).into(),
                exact_distinctness: r.exact_distinctness,
                transcript: r
                    .transcript
                    .iter()
                    .map(|rec| CandidateRecord {
                        t0: render_rational(&rec.t0),
                        accepted: rec.verification().is_some(),
                        reason: match &rec.outcome {
                            crate::pipeline::Outcome::Accepted(_) => None,
                            crate::pipeline::Outcome::Rejected(why) => Some(why.to_string()),
                        },
                    })
                    .collect(),
            },
            fields,
            pairs: r
                .pairs
                .iter()
                .map(|p| PairRecord {
                    i: p.i,
                    j: p.j,
                    distinctness: match p.evidence {
                        PairDistinctness::Exact { forward_roots, backward_roots } => {
                            PairDistinctnessRecord::Exact { forward_roots, backward_roots }
                        }
                        PairDistinctness::Guaranteed => {
                            PairDistinctnessRecord::Guaranteed { cite: GUARANTEED_CITE.into() }
                        }
                    },
                })
                .collect(),
            determinism: DeterminismRecord { primes, primitive_shift: state.shift, trager_shifts },
        }
    }

    /// Canonical JSON text.
    pub fn to_json(&self) -> String {
        canonical_json(self)
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        parse_json(text)
    }

    pub fn accepted_t0(&self) -> Vec<&str> {
        self.fields.iter().map(|f| f.t0.as_str()).collect()
    }
}

pub(crate) fn canonical_json<T: Serialize>(t: &T) -> String {
    let v = serde_json::to_value(t).expect("records serialize");
    let mut s = serde_json::to_string_pretty(&canonical(v)).expect("value serializes");
    s.push('\n');
    s
}

pub(crate) fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CertificateError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CertificateError::Json(e.to_string()))?;
    serde_json::from_value(v).map_err(|e| CertificateError::Schema(vec![e.to_string()]))
}

/// Rebuilds every object with its keys in sorted order.
fn canonical(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut entries: Vec<(String, Value)> = m.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = Map::new();
            for (k, v) in entries {
                out.insert(k, canonical(v));
            }
            Value::Object(out)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(canonical).collect()),
        v => v,
    }
}

pub fn emit_certificate(cert: &RealizationCertificate, path: &Path) -> Result<(), CertificateError> {
    fs::write(path, cert.to_json()).map_err(|e| CertificateError::Io(format!("{}: {e}", path.display())))
}

pub fn read_certificate(path: &Path) -> Result<RealizationCertificate, CertificateError> {
    let text = fs::read_to_string(path).map_err(|e| CertificateError::Io(format!("{}: {e}", path.display())))?;
    RealizationCertificate::from_json(&text)
}

pub(crate) fn splitting_record(state: &PipelineState) -> SplittingRecord {
    let l = &state.splitting;
    SplittingRecord {
        polynomial: render_qpoly(&l.source),
        modulus: render_qpoly(l.field.modulus()),
        degree: l.field.degree(),
        roots: l.roots.iter().map(elem).collect(),
        galois: l
            .galois
            .elements()
            .iter()
            .zip(&l.auts)
            .map(|(s, img)| GaloisRecord { sigma: s.to_string(), image: elem(img) })
            .collect(),
    }
}

pub(crate) fn parameter_record(state: &PipelineState) -> ParameterRecord {
    let (choice, orbit_power, orbit_family) = match state.y_choice {
        ParameterChoice::Canonical => ("canonical", None, None),
        ParameterChoice::OrbitSum { j, family } => ("orbit_sum", Some(j), Some(family_name(family).to_string())),
    };
    ParameterRecord {
        choice: choice.into(),
        orbit_power,
        orbit_family,
        preimage: state.preimage.elements().iter().map(|p| p.to_string()).collect(),
        y: elem(&state.y),
        minpoly: render_qpoly(&state.y_minpoly),
    }
}

pub(crate) fn primitive_record(state: &PipelineState) -> PrimitiveRecord {
    PrimitiveRecord {
        shift: state.shift,
        q: render_qbipoly(&state.q),
        degree_x: state.e_degree(),
        irreducible_at: render_rational(&state.irreducible_at),
    }
}

pub(crate) fn bad_set_record(state: &PipelineState) -> BadSetRecord {
    let b = &state.bad;
    BadSetRecord {
        discriminant: render_qpoly(&b.discriminant),
        factors: b.factors.iter().map(|(p, m)| FactorRecord { poly: render_qpoly(p), multiplicity: *m }).collect(),
        rational: b.rational.iter().map(render_rational).collect(),
        complete: b.complete,
    }
}

pub(crate) fn field_record(rec: &SpecializationRecord, v: &Verification) -> FieldRecord {
    FieldRecord {
        t0: render_rational(&rec.t0),
        defining_polynomial: render_qpoly(&rec.defining_polynomial),
        degree: v.field.degree(),
        theta: elem(&v.theta),
        x: elem(&v.x),
        automorphisms: v.automorphisms.maps().iter().map(elem).collect(),
        table: v.automorphisms.table().to_vec(),
        witness: v.witness.map.clone(),
        lifts: v
            .lifts
            .iter()
            .map(|l| LiftRecord {
                sigma: l.sigma.to_string(),
                in_preimage: l.in_preimage,
                roots: l.roots,
                trager_shift: l.trager_shift,
            })
            .collect(),
        primes: v.primes.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupspec::parse_group_spec;
    use crate::pipeline::run;

    pub(super) fn trivial_certificate() -> RealizationCertificate {
        let spec = parse_group_spec(1, "()").unwrap();
        let opts = RunOptions { count: 3, t_max: 10, ..RunOptions::default() };
        let r = run(&spec.group().unwrap(), &opts).unwrap();
        RealizationCertificate::from_realization(&spec, &r, &opts)
    }

    #[test]
    fn trivial_group_schema() {
        let cert = trivial_certificate();
        let text = cert.to_json();
        assert!(text.contains("\"defining_polynomial\": [\n        \"1\",\n        \"1\",\n        \"0\",\n        \"1\"\n      ]"));
        let back = RealizationCertificate::from_json(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.to_json(), text);
        assert_eq!(cert.accepted_t0(), vec!["1", "-1", "2"]);
        assert_eq!(cert.search.transcript[0].reason.as_deref(), Some("bad set: q(t0, X) has a multiple root"));
    }

    #[test]
    fn keys_sorted() {
        let text = trivial_certificate().to_json();
        let v: Value = serde_json::from_str(&text).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        let top: Vec<usize> = ["\"bad_set\"", "\"determinism\"", "\"fields\"", "\"format\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(top.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn guaranteed_pair_shape() {
        let p = PairDistinctnessRecord::Guaranteed { cite: GUARANTEED_CITE.into() };
        let v = canonical(serde_json::to_value(&p).unwrap());
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"cite":"condition (eq)","mode":"guaranteed"}"#);
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(RealizationCertificate::from_json("{"), Err(CertificateError::Json(_))));
        assert!(matches!(RealizationCertificate::from_json("{}"), Err(CertificateError::Schema(_))));
    }
}
