//! Factoring over a number field by norms (Trager).

use super::minpoly::shifted_norm;
use super::{NfElem, NfError, NumberField};
use crate::exact::{Field, Poly, PolyRing, QPoly};
use crate::factor::{self, FactorOptions, DEGREE_CAP};

/// `f = unit · Π hᵢ^{eᵢ}` over a number field, `hᵢ` monic irreducible.
#[derive(Clone, Debug, PartialEq)]
pub struct NfFactorization {
    pub unit: NfElem,
    pub factors: Vec<(Poly<NfElem>, usize)>,
    /// Shift `s` used for each squarefree part, for audit.
    pub shifts: Vec<i64>,
}

/// 0, 1, −1, 2, −2, …
pub(crate) fn shift_sequence() -> impl Iterator<Item = i64> {
    (0i64..).flat_map(|i| if i == 0 { vec![0] } else { vec![i, -i] })
}

const MAX_SHIFTS: usize = 64;

pub(crate) fn poly_key(f: &Poly<NfElem>) -> (usize, Vec<NfElem>) {
    (f.len(), f.coeffs().to_vec())
}

/// Factors `f ≠ 0` over `k`.
pub fn factor_over_nf(k: &NumberField, f: &Poly<NfElem>) -> Result<NfFactorization, NfError> {
    let ring = k.ring();
    let deg = f.degree().ok_or(NfError::ZeroPolynomial)?;
    let unit = f.lc().unwrap().clone();
    let mut factors = Vec::new();
    let mut shifts = Vec::new();
    if deg == 0 {
        return Ok(NfFactorization { unit, factors, shifts });
    }
    let parts = ring.squarefree_decomposition(f).expect("nonzero");
    for (h, mult) in parts {
        let (hs, s) = factor_squarefree(k, &h, Wanted::All)?;
        shifts.push(s);
        factors.extend(hs.into_iter().map(|g| (g, mult)));
    }
    factors.sort_by(|a, b| poly_key(&a.0).cmp(&poly_key(&b.0)));
    Ok(NfFactorization { unit, factors, shifts })
}

fn to_q(f: &Poly<NfElem>) -> QPoly {
    f.map(|c| c.as_rational().expect("rational coefficient"))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Wanted {
    All,
    /// Only linear factors; norm factors of other degrees are not pulled back.
    Linear,
}

/// Monic squarefree `h` into monic irreducibles; also returns the shift.
fn factor_squarefree(k: &NumberField, h: &Poly<NfElem>, wanted: Wanted) -> Result<(Vec<Poly<NfElem>>, i64), NfError> {
    let e = h.deg0();
    if e == 1 {
        return Ok((vec![h.clone()], 0));
    }
    if k.is_rationals() {
        let fac = factor::factor_over_q(&to_q(h))?;
        return Ok((fac.factors.iter().map(|(g, _)| k.lift_poly(g)).collect(), 0));
    }
    let n = e * k.degree();
    if n > DEGREE_CAP {
        return Err(NfError::Factor(factor::FactorError::DegreeCap(n)));
    }
    let mut chosen = None;
    for s in shift_sequence().take(MAX_SHIFTS) {
        let norm = shifted_norm(k, h, s);
        if factor::is_squarefree_q(&norm) {
            chosen = Some((s, norm));
            break;
        }
    }
    let (s, norm) = chosen.ok_or(NfError::NoShift)?;
    let opts = FactorOptions { degree_multiple: k.degree(), subset_budget: None };
    let fac = factor::factor_with(&norm, &opts)?;
    log::debug!(
        "trager: degree {e} over degree {}, shift {s}, norm factors {:?}",
        k.degree(),
        fac.factors.iter().map(|(g, _)| g.deg0()).collect::<Vec<_>>()
    );
    if fac.factors.len() == 1 {
        return Ok((vec![h.clone()], s));
    }
    let ring = k.ring();
    let mut out = Vec::new();
    for (ni, _) in &fac.factors {
        // a factor of h of degree j has a norm of degree j·[k:ℚ]
        if wanted == Wanted::Linear && ni.deg0() != k.degree() {
            continue;
        }
        let r = compose_shift_mod(k, ni, s, h);
        let g = ring.gcd(h, &r).expect("h nonzero");
        debug_assert!(g.deg0() >= 1);
        out.push(g);
    }
    Ok((out, s))
}

/// `n(X + sθ) mod h` over `k`, by Horner.
fn compose_shift_mod(k: &NumberField, n: &QPoly, s: i64, h: &Poly<NfElem>) -> Poly<NfElem> {
    let ring = k.ring();
    let st = k.mul(&k.from_int(s), &k.generator());
    let lin = Poly::new(vec![st, k.one()]);
    let mut acc: Poly<NfElem> = Poly::zero();
    for c in n.coeffs().iter().rev() {
        acc = ring.mul(&acc, &lin);
        acc = ring.add(&acc, &Poly::constant(k.from_rational(c)));
        acc = ring.rem(&acc, h).expect("h nonzero");
    }
    acc
}

/// All roots of `f ≠ 0` lying in `k`, sorted by coordinates.
pub fn roots_in_field(k: &NumberField, f: &Poly<NfElem>) -> Result<Vec<NfElem>, NfError> {
    Ok(roots_with_shift(k, f)?.0)
}

/// Roots together with the Trager shift used (0 when none was needed).
pub(crate) fn roots_with_shift(k: &NumberField, f: &Poly<NfElem>) -> Result<(Vec<NfElem>, i64), NfError> {
    let ring = k.ring();
    let deg = f.degree().ok_or(NfError::ZeroPolynomial)?;
    if deg == 0 {
        return Ok((Vec::new(), 0));
    }
    let h = ring.squarefree_part(f).expect("nonzero");
    let (hs, s) = factor_squarefree(k, &h, Wanted::Linear)?;
    let mut roots: Vec<NfElem> = hs.iter().filter(|g| g.deg0() == 1).map(|g| k.neg(&g.coeffs()[0])).collect();
    roots.sort();
    Ok((roots, s))
}

/// Roots in `k` of a polynomial over ℚ.
pub fn rational_poly_roots(k: &NumberField, f: &QPoly) -> Result<Vec<NfElem>, NfError> {
    roots_in_field(k, &k.lift_poly(f))
}

/// Expands a factorization back (for checks).
pub fn expand(k: &NumberField, fac: &NfFactorization) -> Poly<NfElem> {
    let ring: PolyRing<NumberField> = k.ring();
    let mut acc = Poly::constant(fac.unit.clone());
    for (g, e) in &fac.factors {
        acc = ring.mul(&acc, &ring.pow(g, *e as u32));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qpoly;

    #[test]
    fn golden_ratio_splits() {
        let k = NumberField::new(qpoly(&[-1, -1, 1])).unwrap();
        let f = k.lift_poly(&qpoly(&[-1, -1, 1]));
        let fac = factor_over_nf(&k, &f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(expand(&k, &fac), f);
        let roots = roots_in_field(&k, &f).unwrap();
        let t = k.generator();
        let conj = k.sub(&k.one(), &t);
        assert!(roots.contains(&t) && roots.contains(&conj));
    }

    #[test]
    fn cube_root_of_two() {
        let k = NumberField::new(qpoly(&[-2, 0, 0, 1])).unwrap();
        let f = k.lift_poly(&qpoly(&[-2, 0, 0, 1]));
        let fac = factor_over_nf(&k, &f).unwrap();
        let degs: Vec<usize> = fac.factors.iter().map(|(g, _)| g.deg0()).collect();
        assert_eq!(degs, vec![1, 2]);
        assert_eq!(expand(&k, &fac), f);
    }

    #[test]
    fn i_not_in_real_quadratic() {
        let k = NumberField::new(qpoly(&[-2, 0, 1])).unwrap();
        let f = k.lift_poly(&qpoly(&[1, 0, 1]));
        assert_eq!(factor_over_nf(&k, &f).unwrap().factors.len(), 1);
    }

    #[test]
    fn sqrt5_in_golden_field() {
        let k = NumberField::new(qpoly(&[-1, -1, 1])).unwrap();
        let roots = rational_poly_roots(&k, &qpoly(&[-5, 0, 1])).unwrap();
        let two_t_minus_1 = k.elem(qpoly(&[-1, 2]));
        let one_minus_2t = k.elem(qpoly(&[1, -2]));
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&two_t_minus_1) && roots.contains(&one_minus_2t));
        let q = NumberField::rationals();
        assert!(rational_poly_roots(&q, &qpoly(&[1, 1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn repeated_factor_over_field() {
        // (X − θ)² (X + θ) over ℚ(√2)
        let k = NumberField::new(qpoly(&[-2, 0, 1])).unwrap();
        let ring = k.ring();
        let t = k.generator();
        let a = Poly::new(vec![k.neg(&t), k.one()]);
        let b = Poly::new(vec![t.clone(), k.one()]);
        let f = ring.mul(&ring.mul(&a, &a), &b);
        let fac = factor_over_nf(&k, &f).unwrap();
        assert_eq!(expand(&k, &fac), f);
        assert!(fac.factors.contains(&(a, 2)) && fac.factors.contains(&(b, 1)));
    }
}
