use rayon::prelude::*;

use super::run::candidates;
use super::PipelineError;
use crate::exact::{interpolate, BiPoly, BiRing, Field, Poly, QPoly, Rational, RationalField};
use crate::factor;
use crate::family::{bad_set, build_member, BadSet, FamilyMember};
use crate::numfield::{fixed_field, shift_sequence, splitting_field, NfElem, NumberField, OrbitFamily, SplittingField};
use crate::perm::{closure, PermGroup};

const MAX_PRIMITIVE_SHIFTS: usize = 16;
const SQUAREFREE_PROBES: usize = 8;
const IRREDUCIBILITY_PROBES: usize = 64;

/// How `y` was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParameterChoice {
    /// `G′` is all of `Gal(L/ℚ)`, so `y ∈ ℚ`; we take `y = 0`.
    Canonical,
    OrbitSum { j: usize, family: OrbitFamily },
}

#[derive(Clone, Debug)]
pub struct PipelineState {
    pub n: usize,
    pub group: PermGroup,
    pub splitting: SplittingField,
    pub preimage: PermGroup,
    /// `y` as an element of `L`.
    pub y: NfElem,
    pub y_minpoly: QPoly,
    pub y_choice: ParameterChoice,
    /// `K = ℚ(y)`, with `y` its generator (or `ℚ` with `y = 0`).
    pub base: NumberField,
    pub member: FamilyMember,
    /// Minimal polynomial over ℚ(T) of `z = x + c·θ_L`, monic in `X`.
    pub q: BiPoly<Rational>,
    /// The `c` above.
    pub shift: i64,
    /// A `t` with `q(t, X)` irreducible over ℚ, proving `q` irreducible
    /// over ℚ(T).
    pub irreducible_at: Rational,
    pub bad: BadSet,
}

impl PipelineState {
    pub fn e_degree(&self) -> usize {
        self.q.deg_x().unwrap_or(0)
    }

    pub fn specialize_q(&self, t0: &Rational) -> QPoly {
        BiRing::new(RationalField).specialize_t(&self.q, t0)
    }
}

/// The splitting field of `Xⁿ − X − 1` (of `X` when `n = 1`), with its
/// group checked to be all of `Sₙ`.
pub fn realize_sn(n: usize, cap: usize) -> Result<SplittingField, PipelineError> {
    if n == 0 {
        return Err(PipelineError::ZeroDegree);
    }
    let f = if n == 1 {
        Poly::new(vec![Rational::from_integer(0.into()), Rational::from_integer(1.into())])
    } else {
        let mut c = vec![Rational::from_integer(0.into()); n + 1];
        c[0] = Rational::from_integer((-1).into());
        c[1] = Rational::from_integer((-1).into());
        c[n] = Rational::from_integer(1.into());
        Poly::new(c)
    };
    let expected: usize = (1..=n).product();
    if expected > cap {
        return Err(crate::numfield::NfError::DegreeCap { attempted: expected, cap }.into());
    }
    let l = splitting_field(&f, cap)?;
    if l.galois.order() != expected {
        return Err(PipelineError::GroupOrder { expected, found: l.galois.order() });
    }
    Ok(l)
}

/// `G′ = φ⁻¹(G)`. The stored `φ` labels each automorphism by its action on
/// the sorted roots, so `G′` has the same permutations as `G`.
pub fn subgroup_preimage(l: &SplittingField, g: &PermGroup) -> Result<PermGroup, PipelineError> {
    let n = l.galois.degree();
    if g.degree() != n || !g.is_subgroup_of(&l.galois) {
        return Err(PipelineError::NotInSn(n));
    }
    for p in g.generators() {
        l.phi_inverse(p).ok_or_else(|| PipelineError::Internal(format!("{p} has no automorphism")))?;
    }
    Ok(closure(n, g.generators())?)
}

/// A generator `y` of `L^{G′}` and its minimal polynomial.
pub fn compute_y(
    l: &SplittingField,
    g_prime: &PermGroup,
) -> Result<(NfElem, QPoly, ParameterChoice), PipelineError> {
    if g_prime.order() == l.galois.order() {
        let x = Poly::new(vec![Rational::from_integer(0.into()), Rational::from_integer(1.into())]);
        return Ok((l.field.zero(), x, ParameterChoice::Canonical));
    }
    let ff = fixed_field(l, g_prime)?;
    Ok((ff.generator, ff.minpoly, ParameterChoice::OrbitSum { j: ff.j, family: ff.family }))
}

/// `q(T, X) = Res_Z(g_L(Z), P_{y(Z)}(T, X − cZ))`, the norm from `L(T)` of
/// the cubic shifted by `c·θ_L`, recovered from its values on a grid.
pub fn build_e_minpoly(l: &SplittingField, y: &NfElem, c: i64) -> BiPoly<Rational> {
    let k = &l.field;
    let d = k.degree();
    let ct = k.mul(&k.from_int(c), &k.generator());
    let ts: Vec<i64> = (0..=d as i64).collect();
    let xs: Vec<i64> = (0..=3 * d as i64).collect();
    let rows: Vec<Poly<Rational>> = ts
        .par_iter()
        .map(|&t| {
            let b = k.sub(&k.from_int(t), y);
            let vals: Vec<Rational> = xs
                .par_iter()
                .map(|&x| {
                    let a = k.sub(&k.from_int(x), &ct);
                    let a2 = k.mul(&a, &a);
                    let e = k.add(&k.add(&k.mul(&a2, &a), &k.mul(&b, &a)), &b);
                    k.norm(&e)
                })
                .collect();
            let nodes: Vec<Rational> = xs.iter().map(|&x| Rational::from_integer(x.into())).collect();
            interpolate(&RationalField, &nodes, &vals)
        })
        .collect();
    // rows[i] is q(tᵢ, X); interpolate each X-coefficient over the tᵢ
    let tnodes: Vec<Rational> = ts.iter().map(|&t| Rational::from_integer(t.into())).collect();
    let zero = Rational::from_integer(0.into());
    let cols: Vec<Poly<Rational>> = (0..=3 * d)
        .map(|j| {
            let vals: Vec<Rational> = rows.iter().map(|r| r.coeff(j).cloned().unwrap_or_else(|| zero.clone())).collect();
            interpolate(&RationalField, &tnodes, &vals)
        })
        .collect();
    BiRing::new(RationalField).from_x_major(&cols)
}

/// Runs every step up to the bad set for `G ≤ Sₙ`.
pub fn build_state(group: &PermGroup, cap: usize) -> Result<PipelineState, PipelineError> {
    let n = group.degree();
    let l = realize_sn(n, cap)?;
    let g_prime = subgroup_preimage(&l, group)?;
    if g_prime.order() != group.order() {
        return Err(PipelineError::Internal("preimage has the wrong order".into()));
    }
    let (y, y_minpoly, y_choice) = compute_y(&l, &g_prime)?;
    if y_minpoly.deg0() * group.order() != l.field.degree() {
        return Err(PipelineError::Internal("fixed field has the wrong degree".into()));
    }
    let base = match y_choice {
        ParameterChoice::Canonical => NumberField::rationals(),
        ParameterChoice::OrbitSum { .. } => NumberField::new(y_minpoly.clone())?,
    };
    let member = build_member(&base, &base.generator());

    let d = l.field.degree();
    let bi = BiRing::new(RationalField);
    let mut chosen = None;
    for c in shift_sequence().take(MAX_PRIMITIVE_SHIFTS) {
        let q = build_e_minpoly(&l, &y, c);
        if q.deg_x() != Some(3 * d) {
            return Err(PipelineError::Internal(format!("deg_X q = {:?}, expected {}", q.deg_x(), 3 * d)));
        }
        let separated = candidates(u64::MAX)
            .take(SQUAREFREE_PROBES)
            .any(|t| factor::is_squarefree_q(&bi.specialize_t(&q, &t)));
        if separated {
            chosen = Some((q, c));
            break;
        }
        log::debug!("shift {c} does not give a primitive element");
    }
    let (q, shift) = chosen.ok_or(PipelineError::NoPrimitiveElement)?;

    let mut irreducible_at = None;
    for t in candidates(u64::MAX).take(IRREDUCIBILITY_PROBES) {
        let s = bi.specialize_t(&q, &t);
        if factor::is_squarefree_q(&s) && factor::is_irreducible_q(&s)? {
            irreducible_at = Some(t);
            break;
        }
    }
    let irreducible_at = irreducible_at.ok_or(PipelineError::NoIrreducibleSpecialization)?;
    let bad = bad_set(&q)?;
    log::info!(
        "state: n = {n}, |G| = {}, [L:ℚ] = {d}, deg y = {}, shift {shift}, {} rational bad points",
        group.order(),
        y_minpoly.deg0(),
        bad.rational.len()
    );
    Ok(PipelineState {
        n,
        group: group.clone(),
        splitting: l,
        preimage: g_prime,
        y,
        y_minpoly,
        y_choice,
        base,
        member,
        q,
        shift,
        irreducible_at,
        bad,
    })
}
