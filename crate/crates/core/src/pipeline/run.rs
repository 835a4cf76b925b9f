use num_integer::Integer;
use rayon::prelude::*;

use super::specialize::{specialize_and_verify, Outcome, Rejection, SpecializationRecord};
use super::state::{build_state, PipelineState};
use super::PipelineError;
use crate::exact::{render_rational, Rational};
use crate::family::{certify_s3, S3Certificate};
use crate::numfield::rational_poly_roots;
use crate::perm::PermGroup;

/// Largest field degree at which `DistinctMode::Auto` checks distinctness
/// exactly.
pub const AUTO_EXACT_DEGREE: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistinctMode {
    Exact,
    Auto,
    Assumed,
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub count: usize,
    pub t_max: u64,
    pub distinct: DistinctMode,
    pub max_splitting_degree: usize,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { count: 2, t_max: 200, distinct: DistinctMode::Auto, max_splitting_degree: 24 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairDistinctness {
    /// Roots of each defining polynomial in the other field, both zero.
    Exact { forward_roots: usize, backward_roots: usize },
    /// Not computed; distinct specializations are covered by the
    /// geometric irreducibility of the cubic layer.
    Guaranteed,
}

/// Evidence for the `i`-th and `j`-th accepted fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairEvidence {
    pub i: usize,
    pub j: usize,
    pub evidence: PairDistinctness,
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub state: PipelineState,
    pub s3: S3Certificate,
    /// Every candidate examined, in enumeration order.
    pub transcript: Vec<SpecializationRecord>,
    pub distinct_mode: DistinctMode,
    pub exact_distinctness: bool,
    pub pairs: Vec<PairEvidence>,
}

impl Realization {
    pub fn accepted(&self) -> impl Iterator<Item = &SpecializationRecord> {
        self.transcript.iter().filter(|r| r.verification().is_some())
    }
}

/// `0, 1, −1, …, h, −h`, then fractions `p/q` with `2 ≤ q ≤ h`,
/// `|p| ≤ h` in lowest terms, ordered by `q`, then `|p|`, positive first.
pub fn candidates(h: u64) -> impl Iterator<Item = Rational> {
    let h = h.min(i64::MAX as u64) as i64;
    let int = |v: i64| Rational::from_integer(v.into());
    let ints = std::iter::once(0).chain((1..=h).flat_map(|i| [i, -i])).map(int);
    let fracs = (2..=h).flat_map(move |den| {
        (1..=h)
            .filter(move |p| p.gcd(&den) == 1)
            .flat_map(|p| [p, -p])
            .map(move |p| Rational::new(p.into(), den.into()))
    });
    ints.chain(fracs)
}

pub fn run(group: &PermGroup, opts: &RunOptions) -> Result<Realization, PipelineError> {
    if opts.count == 0 {
        return Err(PipelineError::ZeroCount);
    }
    let state = build_state(group, opts.max_splitting_degree)?;
    let s3 = certify_s3(&state.member)?;
    let exact = match opts.distinct {
        DistinctMode::Exact => true,
        DistinctMode::Assumed => false,
        DistinctMode::Auto => state.e_degree() <= AUTO_EXACT_DEGREE,
    };

    let mut pool = candidates(opts.t_max);
    let mut transcript: Vec<SpecializationRecord> = Vec::new();
    let mut accepted: Vec<usize> = Vec::new();
    let mut pairs = Vec::new();
    'search: while accepted.len() < opts.count {
        // independent candidates are verified concurrently, merged in order
        let batch: Vec<Rational> = pool.by_ref().take(opts.count - accepted.len()).collect();
        if batch.is_empty() {
            return Err(PipelineError::SearchExhausted {
                found: accepted.len(),
                wanted: opts.count,
                tried: transcript.len(),
            });
        }
        let results: Vec<Result<SpecializationRecord, PipelineError>> =
            batch.par_iter().map(|t| specialize_and_verify(&state, t)).collect();
        for res in results {
            let mut rec = res?;
            if rec.verification().is_some() {
                let j = accepted.len();
                let mut found = Vec::new();
                if exact {
                    for (i, &ti) in accepted.iter().enumerate() {
                        let other = &transcript[ti];
                        let forward = cross_roots(other, &rec)?;
                        let backward = cross_roots(&rec, other)?;
                        if forward + backward > 0 {
                            rec.outcome = Outcome::Rejected(Rejection::Duplicate { of: other.t0.clone() });
                            found.clear();
                            break;
                        }
                        found.push(PairEvidence {
                            i,
                            j,
                            evidence: PairDistinctness::Exact { forward_roots: forward, backward_roots: backward },
                        });
                    }
                } else {
                    found.extend((0..j).map(|i| PairEvidence { i, j, evidence: PairDistinctness::Guaranteed }));
                }
                if rec.verification().is_some() {
                    pairs.extend(found);
                    accepted.push(transcript.len());
                }
            }
            match &rec.outcome {
                Outcome::Accepted(v) => log::info!(
                    "t0 = {}: accepted, degree {}, |Aut| = {}",
                    render_rational(&rec.t0),
                    v.field.degree(),
                    v.automorphisms.order()
                ),
                Outcome::Rejected(r) => log::info!("t0 = {}: rejected ({r})", render_rational(&rec.t0)),
            }
            transcript.push(rec);
            if accepted.len() == opts.count {
                break 'search;
            }
        }
    }
    Ok(Realization { state, s3, transcript, distinct_mode: opts.distinct, exact_distinctness: exact, pairs })
}

/// Number of roots of `a`'s defining polynomial in `b`'s field.
fn cross_roots(a: &SpecializationRecord, b: &SpecializationRecord) -> Result<usize, PipelineError> {
    let field = &b.verification().expect("accepted").field;
    Ok(rational_poly_roots(field, &a.defining_polynomial)?.len())
}
