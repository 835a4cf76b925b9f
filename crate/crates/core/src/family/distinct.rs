use super::FamilyError;
use crate::exact::{Field, FieldElem, Poly, PolyRing};
use crate::numfield::{factor_over_nf, roots_in_field, NfElem, NumberField};

/// One candidate root shape `λ·D(x₁)/v(x₁)` of `F` over `K(x₁)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShapeRefutation {
    /// Monic divisor of `G` over `K`.
    pub divisor: Poly<NfElem>,
    /// `1` or `x₁ + 1`.
    pub denominator: Poly<NfElem>,
    /// gcd over `K` of the coefficient equations in `λ`.
    pub scalar_gcd: Poly<NfElem>,
    /// Roots of `scalar_gcd` in `K`; usually none.
    pub scalars: Vec<NfElem>,
    /// `v³·F(λD/v)` for each entry of `scalars`; all nonzero.
    pub residuals: Vec<Poly<NfElem>>,
}

impl ShapeRefutation {
    pub fn is_refuted(&self) -> bool {
        self.scalars.len() == self.residuals.len() && self.residuals.iter().all(|r| !r.is_zero())
    }
}

/// Proof that the fields cut out by `P_{y₁}` and `P_{y₂}` over `K(T)` differ.
///
/// `K(T)(x₁) = K(x₁)` with `T = y₁ − x₁³/(1 + x₁)`, and `x₂` is a root of
/// `F(X) = (x₁+1)X³ − G(x₁)(X+1)`, `G(Y) = (Y+1)δ + Y³`. A root of `F` in
/// `K(x₁)` has the form `λ·D/v` with `D | G` monic and `v | x₁ + 1`; each
/// shape is refuted.
#[derive(Clone, Debug, PartialEq)]
pub struct DistinctnessCertificate {
    pub y1: NfElem,
    pub y2: NfElem,
    pub delta: NfElem,
    pub g: Poly<NfElem>,
    pub g_factors: Vec<(Poly<NfElem>, usize)>,
    /// Coefficients of `F` in `X`, each a polynomial in `x₁`.
    pub f: Vec<Poly<NfElem>>,
    /// `T = t_numerator / t_denominator` in `K(x₁)`.
    pub t_numerator: Poly<NfElem>,
    pub t_denominator: Poly<NfElem>,
    pub shapes: Vec<ShapeRefutation>,
}

impl DistinctnessCertificate {
    pub fn is_distinct(&self) -> bool {
        self.shapes.iter().all(ShapeRefutation::is_refuted)
    }

    pub fn replay(&self, k: &NumberField) -> Result<(), FamilyError> {
        let fresh = certify_distinct(k, &self.y1, &self.y2)?;
        if fresh != *self {
            return Err(FamilyError::CheckFailed("distinctness certificate does not replay".into()));
        }
        Ok(())
    }
}

pub fn certify_distinct(
    k: &NumberField,
    y1: &NfElem,
    y2: &NfElem,
) -> Result<DistinctnessCertificate, FamilyError> {
    let delta = k.sub(y2, y1);
    if delta.is_zero() {
        return Err(FamilyError::EqualParameters);
    }
    let ring = k.ring();
    let one_plus = Poly::new(vec![k.one(), k.one()]);
    let g = Poly::new(vec![delta.clone(), delta.clone(), k.zero(), k.one()]);

    let f = vec![ring.neg(&g), ring.neg(&g), Poly::zero(), one_plus.clone()];
    let x1_cubed = ring.monomial(k.one(), 3);
    let t_numerator = ring.sub(&ring.scale(y1, &one_plus), &x1_cubed);
    let t_denominator = one_plus.clone();
    check_identities(k, y1, y2, &t_numerator, &t_denominator, &f)?;

    let fac = factor_over_nf(k, &g)?;
    let g_factors = fac.factors;
    let mut shapes = Vec::new();
    for divisor in monic_divisors(&ring, &g_factors) {
        for v in [ring.one(), one_plus.clone()] {
            shapes.push(refute_shape(k, &ring, &g, &f, &divisor, &v)?);
        }
    }
    let cert = DistinctnessCertificate {
        y1: y1.clone(),
        y2: y2.clone(),
        delta,
        g,
        g_factors,
        f,
        t_numerator,
        t_denominator,
        shapes,
    };
    if !cert.is_distinct() {
        return Err(FamilyError::CheckFailed("F has a root in K(x₁)".into()));
    }
    Ok(cert)
}

/// Checks `P_{y₁}(T, x₁) = 0` and `(1 + x₁)·P_{y₂}(T, X) = F(X)` for
/// `T = num/den` by clearing the denominator.
fn check_identities(
    k: &NumberField,
    y1: &NfElem,
    y2: &NfElem,
    num: &Poly<NfElem>,
    den: &Poly<NfElem>,
    f: &[Poly<NfElem>],
) -> Result<(), FamilyError> {
    let ring = k.ring();
    // den·(T − y) = num − y·den
    let shifted = |y: &NfElem| ring.sub(num, &ring.scale(y, den));
    let x1 = ring.monomial(k.one(), 1);
    let x1_plus = ring.add(&x1, &ring.one());
    let lhs = ring.add(
        &ring.mul(den, &ring.pow(&x1, 3)),
        &ring.mul(&shifted(y1), &x1_plus),
    );
    if !lhs.is_zero() {
        return Err(FamilyError::CheckFailed("T-identity fails".into()));
    }
    let a = shifted(y2);
    let derived = [a.clone(), a, Poly::zero(), den.clone()];
    if derived.as_slice() != f {
        return Err(FamilyError::CheckFailed("F does not match the substituted cubic".into()));
    }
    Ok(())
}

fn monic_divisors(ring: &PolyRing<NumberField>, factors: &[(Poly<NfElem>, usize)]) -> Vec<Poly<NfElem>> {
    let mut out = vec![ring.one()];
    for (p, m) in factors {
        let mut next = Vec::with_capacity(out.len() * (m + 1));
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*m {
                acc = ring.mul(&acc, p);
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out
}

/// `v³·F(λD/v) = (x₁+1)λ³D³ − G·(λ·D·v² + v³)`; each `x₁`-coefficient is a
/// cubic in `λ` that must vanish.
fn refute_shape(
    k: &NumberField,
    ring: &PolyRing<NumberField>,
    g: &Poly<NfElem>,
    f: &[Poly<NfElem>],
    divisor: &Poly<NfElem>,
    v: &Poly<NfElem>,
) -> Result<ShapeRefutation, FamilyError> {
    let v2 = ring.mul(v, v);
    let a = ring.mul(&f[3], &ring.pow(divisor, 3));
    let b = ring.mul(g, &ring.mul(divisor, &v2));
    let c = ring.mul(g, &ring.mul(&v2, v));
    let len = a.len().max(b.len()).max(c.len());
    let coef = |p: &Poly<NfElem>, i: usize| p.coeff(i).cloned().unwrap_or_else(|| k.zero());
    let mut scalar_gcd: Poly<NfElem> = Poly::zero();
    for i in 0..len {
        let eq = Poly::new(vec![k.neg(&coef(&c, i)), k.neg(&coef(&b, i)), k.zero(), coef(&a, i)]);
        if eq.is_zero() {
            continue;
        }
        scalar_gcd = if scalar_gcd.is_zero() { ring.monic(&eq) } else { ring.gcd(&scalar_gcd, &eq).expect("nonzero") };
    }
    let scalars = if scalar_gcd.deg0() == 0 { Vec::new() } else { roots_in_field(k, &scalar_gcd)? };
    let residuals = scalars
        .iter()
        .map(|lam| {
            let u = ring.scale(lam, divisor);
            let mut acc = Poly::zero();
            for (j, fj) in f.iter().enumerate() {
                // fⱼ·uʲ·v^{3−j}
                let term = ring.mul(fj, &ring.mul(&ring.pow(&u, j as u32), &ring.pow(v, 3 - j as u32)));
                acc = ring.add(&acc, &term);
            }
            acc
        })
        .collect();
    Ok(ShapeRefutation { divisor: divisor.clone(), denominator: v.clone(), scalar_gcd, scalars, residuals })
}
