use std::fmt;

use rayon::prelude::*;

use super::{PipelineError, PipelineState};
use crate::exact::{render_rational, Field, FieldElem, Poly, QPoly, Rational};
use crate::factor;
use crate::numfield::{roots_with_shift, AutomorphismTable, NfElem, NumberField};
use crate::perm::{are_isomorphic, Isomorphism, Permutation};

/// Extensions of one `σ ∈ Gal(L/ℚ)` to `E_{t₀}`: the roots of
/// `P_{σ(y)}(t₀, X)` in `E_{t₀}`.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftCount {
    pub sigma: Permutation,
    pub in_preimage: bool,
    pub roots: usize,
    pub trager_shift: i64,
}

impl LiftCount {
    /// One extension for `σ ∈ G′`, none otherwise.
    pub fn matches_tower(&self) -> bool {
        self.roots == usize::from(self.in_preimage)
    }
}

#[derive(Clone, Debug)]
pub struct Verification {
    pub field: NumberField,
    /// θ_L and `x` written in `E_{t₀}`; the generator is `x + c·θ_L`.
    pub theta: NfElem,
    pub x: NfElem,
    pub lifts: Vec<LiftCount>,
    pub automorphisms: AutomorphismTable,
    /// From the elements of `G` (sorted) to indices of `automorphisms`.
    pub witness: Isomorphism,
    pub primes: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    BadPoint,
    Reducible { degrees: Vec<usize> },
    Unseparated,
    AutCount { found: usize, expected: usize },
    NotIsomorphic,
    Duplicate { of: Rational },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::BadPoint => write!(f, "bad set: q(t0, X) has a multiple root"),
            Rejection::Reducible { degrees } => write!(f, "reducible: factor degrees {degrees:?}"),
            Rejection::Unseparated => write!(f, "theta_L not determined by the generator"),
            Rejection::AutCount { found, expected } => {
                write!(f, "{found} automorphisms, expected {expected}")
            }
            Rejection::NotIsomorphic => write!(f, "automorphism group not isomorphic to G"),
            Rejection::Duplicate { of } => write!(f, "isomorphic to the field at t0 = {}", render_rational(of)),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Outcome {
    Accepted(Box<Verification>),
    Rejected(Rejection),
}

#[derive(Clone, Debug)]
pub struct SpecializationRecord {
    pub t0: Rational,
    pub defining_polynomial: QPoly,
    pub outcome: Outcome,
}

impl SpecializationRecord {
    pub fn verification(&self) -> Option<&Verification> {
        match &self.outcome {
            Outcome::Accepted(v) => Some(v),
            Outcome::Rejected(_) => None,
        }
    }
}

pub fn specialize_and_verify(state: &PipelineState, t0: &Rational) -> Result<SpecializationRecord, PipelineError> {
    let q0 = state.specialize_q(t0);
    let reject = |r| Ok(SpecializationRecord { t0: t0.clone(), defining_polynomial: q0.clone(), outcome: Outcome::Rejected(r) });
    if state.bad.contains(t0) {
        return reject(Rejection::BadPoint);
    }
    if !factor::is_squarefree_q(&q0) {
        return Err(PipelineError::Internal("good point with a multiple root".into()));
    }
    let fac = factor::factor_over_q(&q0)?;
    if !fac.is_irreducible() {
        return reject(Rejection::Reducible { degrees: fac.factors.iter().map(|(g, _)| g.deg0()).collect() });
    }
    let e = NumberField::trusted(q0.clone());
    let theta = match locate_theta(state, &e, t0) {
        Some(t) => t,
        None => return reject(Rejection::Unseparated),
    };
    let c = state.shift;
    let x = e.sub(&e.generator(), &e.mul(&e.from_int(c), &theta));

    let l = &state.splitting;
    let t0e = e.from_rational(t0);
    // σ only enters the cubic through σ(y); solve each distinct cubic once
    let sigma_y: Vec<NfElem> = l.auts.iter().map(|img| l.field.substitute(&state.y, img)).collect();
    let mut distinct = sigma_y.clone();
    distinct.sort();
    distinct.dedup();
    let solved: Vec<(Vec<NfElem>, i64)> = distinct
        .par_iter()
        .map(|yl| {
            let a = e.sub(&t0e, &e.eval_q(yl.coords(), &theta));
            roots_with_shift(&e, &Poly::new(vec![a.clone(), a, e.zero(), e.one()]))
        })
        .collect::<Result<_, _>>()?;
    let mut per_sigma: Vec<(LiftCount, Vec<NfElem>)> = Vec::with_capacity(sigma_y.len());
    for ((sigma, img), sy) in l.galois.elements().iter().zip(&l.auts).zip(&sigma_y) {
        let (roots, shift) = &solved[distinct.binary_search(sy).expect("present")];
        let sigma_theta = e.eval_q(img.coords(), &theta);
        let ct = e.mul(&e.from_int(c), &sigma_theta);
        let maps: Vec<NfElem> = roots.iter().map(|r| e.add(r, &ct)).collect();
        for image in &maps {
            if !e.eval_q(&q0, image).is_zero() {
                return Err(PipelineError::Internal("lifted map does not preserve q".into()));
            }
        }
        let lift = LiftCount {
            sigma: sigma.clone(),
            in_preimage: state.preimage.contains(sigma),
            roots: maps.len(),
            trager_shift: *shift,
        };
        log::debug!("t0 = {}: σ = {sigma} lifts {} times", render_rational(t0), lift.roots);
        per_sigma.push((lift, maps));
    }
    let lifts: Vec<LiftCount> = per_sigma.iter().map(|(l, _)| l.clone()).collect();
    let maps: Vec<NfElem> = per_sigma.into_iter().flat_map(|(_, m)| m).collect();

    let expected = state.group.order();
    if maps.len() != expected {
        return reject(Rejection::AutCount { found: maps.len(), expected });
    }
    let automorphisms = AutomorphismTable::from_maps(&e, maps)?;
    let witness = match are_isomorphic(&state.group.to_abstract(), &automorphisms.to_abstract()) {
        Ok(Some(w)) => w,
        Ok(None) => return reject(Rejection::NotIsomorphic),
        Err(m) => return Err(PipelineError::Infeasible(format!("isomorphism test at order {m}"))),
    };
    Ok(SpecializationRecord {
        t0: t0.clone(),
        defining_polynomial: q0,
        outcome: Outcome::Accepted(Box::new(Verification {
            field: e,
            theta,
            x,
            lifts,
            automorphisms,
            witness,
            primes: fac.primes,
        })),
    })
}

/// θ_L inside `E_{t₀}`: the common root of `g_L(U)` and
/// `P_{y(U)}(t₀, z − cU)`, where `z` is the generator of `E_{t₀}`.
fn locate_theta(state: &PipelineState, e: &NumberField, t0: &Rational) -> Option<NfElem> {
    let ring = e.ring();
    let l = &state.splitting.field;
    let g = e.lift_poly(l.modulus());
    let w = Poly::new(vec![e.generator(), e.from_int(-state.shift)]);
    let b = ring.sub(&Poly::constant(e.from_rational(t0)), &e.lift_poly(state.y.coords()));
    let w2 = ring.mul(&w, &w);
    let h = ring.add(&ring.add(&ring.mul(&w2, &w), &ring.mul(&b, &w)), &b);
    let h = ring.rem(&h, &g).expect("g nonzero");
    let d = if h.is_zero() { ring.monic(&g) } else { ring.gcd(&g, &h).expect("g nonzero") };
    (d.deg0() == 1).then(|| e.neg(&d.coeffs()[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qpoly, rat, ratio};
    use crate::perm::{closure, PermGroup};
    use crate::pipeline::build_state;

    #[test]
    fn trivial_group_points() {
        let s = build_state(&PermGroup::trivial(1), 24).unwrap();
        let r = specialize_and_verify(&s, &rat(0)).unwrap();
        assert!(matches!(r.outcome, Outcome::Rejected(Rejection::BadPoint)));
        let r = specialize_and_verify(&s, &ratio(-27, 4)).unwrap();
        assert!(matches!(r.outcome, Outcome::Rejected(Rejection::BadPoint)));
        let r = specialize_and_verify(&s, &rat(1)).unwrap();
        assert_eq!(r.defining_polynomial, qpoly(&[1, 1, 0, 1]));
        let v = r.verification().unwrap();
        assert_eq!(v.automorphisms.order(), 1);
        assert!(v.lifts.iter().all(LiftCount::matches_tower));
    }

    #[test]
    fn s2_point() {
        let g = closure(2, &[Permutation::from_cycles(2, &[vec![1, 2]]).unwrap()]).unwrap();
        let s = build_state(&g, 24).unwrap();
        let r = specialize_and_verify(&s, &rat(1)).unwrap();
        let v = r.verification().expect("t0 = 1 accepted");
        assert_eq!(v.field.degree(), 6);
        assert_eq!(v.automorphisms.order(), 2);
        v.witness.verify(&s.group.to_abstract(), &v.automorphisms.to_abstract()).unwrap();
        assert_eq!(v.lifts.iter().map(|l| l.roots).sum::<usize>(), 2);
    }
}
