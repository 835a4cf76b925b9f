//! The cubic family `P_y(T, X) = X³ + (T − y)X + (T − y)` over a number
//! field `K`: construction, Galois-group and distinctness certificates, and
//! bad specializations.

mod badset;
mod distinct;
mod s3;

use thiserror::Error;

use crate::exact::{BiPoly, Field, Poly};
use crate::factor::FactorError;
use crate::numfield::{NfElem, NfError, NumberField};

pub use badset::{bad_set, BadSet};
pub use distinct::{certify_distinct, DistinctnessCertificate, ShapeRefutation};
pub use s3::{certify_s3, replay_s3, S3Certificate};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("y₁ = y₂: the two members coincide")]
    EqualParameters,
    #[error("discriminant in X vanishes identically")]
    InseparableInX,
    #[error("polynomial has degree below 2 in X")]
    DegreeTooLow,
    #[error("certificate check failed: {0}")]
    CheckFailed(String),
    #[error(transparent)]
    Field(#[from] NfError),
    #[error(transparent)]
    Factor(#[from] FactorError),
}

/// `P_y` over `K`, stored with `T`-major rows.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    field: NumberField,
    y: NfElem,
    poly: BiPoly<NfElem>,
}

impl FamilyMember {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn y(&self) -> &NfElem {
        &self.y
    }

    pub fn poly(&self) -> &BiPoly<NfElem> {
        &self.poly
    }

    /// `P_y(t₀, X)` for `t₀ ∈ K`.
    pub fn specialize(&self, t0: &NfElem) -> Poly<NfElem> {
        cubic_at(&self.field, &self.y, t0)
    }
}

/// `X³ + (t − y)X + (t − y)` over `K`.
pub fn cubic_at(k: &NumberField, y: &NfElem, t: &NfElem) -> Poly<NfElem> {
    let a = k.sub(t, y);
    Poly::new(vec![a.clone(), a, k.zero(), k.one()])
}

pub fn build_member(k: &NumberField, y: &NfElem) -> FamilyMember {
    let ny = k.neg(y);
    let row0 = Poly::new(vec![ny.clone(), ny, k.zero(), k.one()]);
    let row1 = Poly::new(vec![k.one(), k.one()]);
    FamilyMember { field: k.clone(), y: y.clone(), poly: BiPoly::from_rows(vec![row0, row1]) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qpoly, BiRing};

    #[test]
    fn members_over_q() {
        let q = NumberField::rationals();
        let m = build_member(&q, &q.from_int(0));
        let b = BiRing::new(q.clone());
        assert_eq!(m.poly().deg_x(), Some(3));
        assert_eq!(m.poly().deg_t(), Some(1));
        let s = b.specialize_t(m.poly(), &q.from_int(1));
        assert_eq!(s, q.lift_poly(&qpoly(&[1, 1, 0, 1])));
        assert_eq!(m.specialize(&q.from_int(1)), s);

        let m1 = build_member(&q, &q.from_int(1));
        // X³ + (T−1)X + (T−1) at T = 3
        assert_eq!(m1.specialize(&q.from_int(3)), q.lift_poly(&qpoly(&[2, 2, 0, 1])));
    }
}
