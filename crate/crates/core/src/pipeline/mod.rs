//! From a subgroup `G ≤ Sₙ` to number fields whose automorphism group is
//! isomorphic to `G`.
//!
//! `L` is the splitting field of `Xⁿ − X − 1`, `G′` the subgroup of
//! `Gal(L/ℚ)` acting on the roots as `G` does, `y` a generator of `L^{G′}`,
//! and `E = L(T, x)` with `x` a root of `P_y(T, X)`. Specializing `T` at
//! rationals `t₀` outside a finite bad set gives candidate fields, each of
//! which is verified directly.

mod run;
mod specialize;
mod state;

use thiserror::Error;

use crate::factor::FactorError;
use crate::family::FamilyError;
use crate::numfield::NfError;
use crate::perm::PermError;

pub use run::{
    candidates, run, DistinctMode, AUTO_EXACT_DEGREE, PairEvidence, PairDistinctness, Realization, RunOptions,
};
pub use specialize::{
    specialize_and_verify, LiftCount, Outcome, Rejection, SpecializationRecord, Verification,
};
pub use state::{
    build_e_minpoly, build_state, compute_y, realize_sn, subgroup_preimage, ParameterChoice,
    PipelineState,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("n must be at least 1")]
    ZeroDegree,
    #[error("count must be at least 1")]
    ZeroCount,
    #[error("Galois group of order {found}, expected {expected}")]
    GroupOrder { expected: usize, found: usize },
    #[error("group is not a subgroup of S_{0}")]
    NotInSn(usize),
    #[error("no primitive element found for E over ℚ(T)")]
    NoPrimitiveElement,
    #[error("no irreducible specialization of q found")]
    NoIrreducibleSpecialization,
    #[error("verification infeasible at this degree: {0}")]
    Infeasible(String),
    #[error("found {found} of {wanted} fields after {tried} candidates")]
    SearchExhausted { found: usize, wanted: usize, tried: usize },
    #[error(transparent)]
    Field(NfError),
    #[error(transparent)]
    Family(FamilyError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl PipelineError {
    /// Whether a size cap, rather than a mathematical failure, stopped the run.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            PipelineError::Infeasible(_)
                | PipelineError::Field(NfError::DegreeCap { .. })
                | PipelineError::Field(NfError::Factor(FactorError::DegreeCap(_)))
                | PipelineError::Perm(PermError::DegreeCap(_))
                | PipelineError::Perm(PermError::OrderCap(_))
        )
    }
}

impl From<NfError> for PipelineError {
    fn from(e: NfError) -> Self {
        match e {
            NfError::Factor(FactorError::DegreeCap(d)) => {
                PipelineError::Infeasible(format!("factoring degree {d}"))
            }
            e => PipelineError::Field(e),
        }
    }
}

impl From<FactorError> for PipelineError {
    fn from(e: FactorError) -> Self {
        NfError::Factor(e).into()
    }
}

impl From<FamilyError> for PipelineError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Field(e) => e.into(),
            FamilyError::Factor(e) => e.into(),
            e => PipelineError::Family(e),
        }
    }
}
