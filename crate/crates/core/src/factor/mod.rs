//! Factorization of polynomials over ℚ (Zassenhaus with Hensel lifting) and
//! related utilities: squarefree decomposition and rational roots.

mod hensel;
pub(crate) mod modp;
mod zassenhaus;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::zpoly::{self, ZPoly};
use crate::exact::{PolyRing, QPoly, Rational, RationalField};

/// Polynomials above this degree are refused.
pub const DEGREE_CAP: usize = 400;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("cannot factor a constant polynomial")]
    ConstantPolynomial,
    #[error("degree {0} exceeds the cap of {DEGREE_CAP}")]
    DegreeCap(usize),
    #[error("recombination budget exceeded")]
    BudgetExceeded,
}

/// `f = unit · Π gᵢ^{eᵢ}` with each `gᵢ` monic irreducible over ℚ.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Rational,
    /// Sorted by degree, then coefficients; multiplicities attached.
    pub factors: Vec<(QPoly, usize)>,
    /// Primes used for the modular factorizations, one per squarefree part
    /// that needed one.
    pub primes: Vec<u64>,
}

impl Factorization {
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Multiplies the factorization back out.
    pub fn expand(&self) -> QPoly {
        let r = PolyRing::new(RationalField);
        let mut acc = QPoly::constant(self.unit.clone());
        for (g, e) in &self.factors {
            acc = r.mul(&acc, &r.pow(g, *e as u32));
        }
        acc
    }
}

#[derive(Clone, Debug)]
pub struct FactorOptions {
    /// Prior knowledge that every irreducible factor has degree divisible by
    /// this number. Wrong priors give wrong answers.
    pub degree_multiple: usize,
    /// Maximum number of recombination candidates to test.
    pub subset_budget: Option<u64>,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions { degree_multiple: 1, subset_budget: None }
    }
}

fn check(f: &QPoly) -> Result<usize, FactorError> {
    match f.degree() {
        None => Err(FactorError::ZeroPolynomial),
        Some(0) => Err(FactorError::ConstantPolynomial),
        Some(d) if d > DEGREE_CAP => Err(FactorError::DegreeCap(d)),
        Some(d) => Ok(d),
    }
}

/// Factors `f` over ℚ into monic irreducibles.
pub fn factor_over_q(f: &QPoly) -> Result<Factorization, FactorError> {
    factor_with(f, &FactorOptions::default())
}

pub fn factor_with(f: &QPoly, opts: &FactorOptions) -> Result<Factorization, FactorError> {
    check(f)?;
    let unit = f.lc().unwrap().clone();
    let mut factors = Vec::new();
    let mut primes = Vec::new();
    for (part, mult) in squarefree_decomposition(f)? {
        let (z, _) = zpoly::from_qpoly(&part);
        let z = zpoly::primitive(&z);
        // the prior only survives on parts whose degree it divides
        let dm = if (z.len() - 1) % opts.degree_multiple == 0 { opts.degree_multiple } else { 1 };
        let tuning = zassenhaus::Tuning { degree_multiple: dm, subset_budget: opts.subset_budget };
        let (fs, audit) = zassenhaus::factor_squarefree(&z, &tuning)?;
        primes.extend(audit.prime);
        factors.extend(fs.iter().map(|g| (zpoly::to_monic_qpoly(g), mult)));
    }
    factors.sort_by(|(a, _), (b, _)| {
        a.len().cmp(&b.len()).then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    Ok(Factorization { unit, factors, primes })
}

pub fn is_irreducible_q(f: &QPoly) -> Result<bool, FactorError> {
    Ok(factor_over_q(f)?.is_irreducible())
}

/// Monic gcd over ℚ through the multi-modular integer gcd.
pub(crate) fn gcd_q(a: &QPoly, b: &QPoly) -> QPoly {
    let (za, _) = zpoly::from_qpoly(a);
    let (zb, _) = zpoly::from_qpoly(b);
    zpoly::to_monic_qpoly(&zpoly::gcd(&za, &zb))
}

/// Yun decomposition `f = lc · Π aᵢ^i` returned as `(aᵢ, i)` with the
/// trivial parts dropped; each `aᵢ` monic.
pub fn squarefree_decomposition(f: &QPoly) -> Result<Vec<(QPoly, usize)>, FactorError> {
    check(f)?;
    let r = PolyRing::new(RationalField);
    let f = r.monic(f);
    if is_squarefree_q(&f) {
        return Ok(vec![(f, 1)]);
    }
    let div = |a: &QPoly, b: &QPoly| r.exact_div(a, b).expect("gcd divides");
    let df = r.derivative(&f);
    let g = gcd_q(&f, &df);
    let mut c = div(&f, &g);
    let mut d = r.sub(&div(&df, &g), &r.derivative(&c));
    let mut out = Vec::new();
    let mut i = 1;
    while c.deg0() > 0 {
        let a = if d.is_zero() { c.clone() } else { gcd_q(&c, &d) };
        c = div(&c, &a);
        d = r.sub(&div(&d, &a), &r.derivative(&c));
        if a.deg0() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Monic squarefree part of a nonconstant polynomial.
pub fn squarefree_part(f: &QPoly) -> Result<QPoly, FactorError> {
    check(f)?;
    let r = PolyRing::new(RationalField);
    if is_squarefree_q(f) {
        return Ok(r.monic(f));
    }
    let g = gcd_q(f, &r.derivative(f));
    Ok(r.monic(&r.exact_div(f, &g).expect("gcd divides")))
}

/// Squarefreeness over ℚ. A squarefree reduction modulo a prime not
/// dividing the leading coefficient settles it; otherwise an exact
/// multi-modular gcd with the derivative decides.
pub fn is_squarefree_q(f: &QPoly) -> bool {
    match f.degree() {
        None => return false,
        Some(0) => return true,
        _ => {}
    }
    let (z, _) = zpoly::from_qpoly(f);
    let dz = zpoly::derivative(&z);
    for p in modp::large_primes().take(3) {
        let zp = modp::Zp::new(p);
        if zp.reduce_int(z.last().unwrap()) == 0 {
            continue;
        }
        let fp = zp.reduce_poly(&z);
        if zp.gcd(&fp, &zp.derivative(&fp)).len() == 1 {
            return true;
        }
    }
    zpoly::gcd(&z, &dz).len() == 1
}

/// Distinct rational roots of a nonzero polynomial, in increasing order.
pub fn rational_roots(f: &QPoly) -> Vec<Rational> {
    if f.degree().map_or(true, |d| d == 0) {
        return Vec::new();
    }
    let sq = squarefree_part(f).expect("nonconstant input");
    let (mut z, _) = zpoly::from_qpoly(&sq);
    let mut roots = Vec::new();
    if z[0].is_zero() {
        roots.push(Rational::zero());
        z.remove(0);
    }
    let z: ZPoly = zpoly::primitive(&z);
    for (num, den) in zassenhaus::rational_roots_squarefree(&z) {
        roots.push(Rational::new(num, den));
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Product of the parts of odd multiplicity, scaled to an integer
/// squarefree representative of the class of `f` modulo squares in ℚ(T).
pub fn odd_part(f: &QPoly) -> Result<QPoly, FactorError> {
    let r = PolyRing::new(RationalField);
    let mut acc = QPoly::constant(f.lc().unwrap().clone());
    for (a, i) in squarefree_decomposition(f)? {
        if i % 2 == 1 {
            acc = r.mul(&acc, &a);
        }
    }
    Ok(acc)
}

/// Squarefree integer representative of `q` modulo `(ℚ*)²`.
pub fn rational_square_class(q: &Rational) -> BigInt {
    assert!(!q.is_zero(), "zero has no square class");
    let n = q.numer() * q.denom();
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut n = n.abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    sign * out * n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qpoly, rat, ratio};

    fn degrees(f: &Factorization) -> Vec<(usize, usize)> {
        f.factors.iter().map(|(g, e)| (g.degree().unwrap(), *e)).collect()
    }

    #[test]
    fn small_factorizations() {
        let f = factor_over_q(&qpoly(&[6, 0, -5, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(qpoly(&[-3, 0, 1]), 1), (qpoly(&[-2, 0, 1]), 1)]);
        assert!(is_irreducible_q(&qpoly(&[1, 1, 0, 1])).unwrap());
        assert!(is_irreducible_q(&qpoly(&[1, 0, 0, 0, 1])).unwrap());
        assert!(is_irreducible_q(&qpoly(&[-1, -1, 0, 1])).unwrap());
    }

    #[test]
    fn repeated_and_nonmonic() {
        // 4 T^2 (4T + 27)
        let f = qpoly(&[0, 0, 108, 16]);
        let fac = factor_over_q(&f).unwrap();
        assert_eq!(fac.unit, rat(16));
        assert_eq!(fac.factors, vec![(qpoly(&[0, 1]), 2), (QPoly::new(vec![ratio(27, 4), rat(1)]), 1)]);
        assert_eq!(fac.expand(), f);
        assert_eq!(squarefree_part(&f).unwrap(), QPoly::new(vec![rat(0), ratio(27, 4), rat(1)]));
    }

    #[test]
    fn swinnerton_dyer_like() {
        // minimal polynomial of sqrt2 + sqrt3 is irreducible but splits mod every prime
        assert!(is_irreducible_q(&qpoly(&[1, 0, -10, 0, 1])).unwrap());
        // (x^4 - 10x^2 + 1)(x^4 + 1) times a linear factor
        let r = PolyRing::new(RationalField);
        let f = r.mul(&r.mul(&qpoly(&[1, 0, -10, 0, 1]), &qpoly(&[1, 0, 0, 0, 1])), &qpoly(&[3, 2]));
        let fac = factor_over_q(&f).unwrap();
        assert_eq!(degrees(&fac), vec![(1, 1), (4, 1), (4, 1)]);
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn degree_prior() {
        // (x^3 - 2)(x^3 - 3), factored with the prior that degrees are multiples of 3
        let r = PolyRing::new(RationalField);
        let f = r.mul(&qpoly(&[-2, 0, 0, 1]), &qpoly(&[-3, 0, 0, 1]));
        let opts = FactorOptions { degree_multiple: 3, subset_budget: None };
        let fac = factor_with(&f, &opts).unwrap();
        assert_eq!(degrees(&fac), vec![(3, 1), (3, 1)]);
    }

    #[test]
    fn errors() {
        assert_eq!(factor_over_q(&qpoly(&[])), Err(FactorError::ZeroPolynomial));
        assert_eq!(factor_over_q(&qpoly(&[5])), Err(FactorError::ConstantPolynomial));
        let mut big = vec![0i64; 402];
        big[401] = 1;
        big[0] = 1;
        assert_eq!(factor_over_q(&qpoly(&big)), Err(FactorError::DegreeCap(401)));
    }

    #[test]
    fn roots() {
        // 6(x - 1/2)(x + 2/3) x (x^2 + 1)
        let r = PolyRing::new(RationalField);
        let f = r.mul(&r.mul(&qpoly(&[-1, 2]), &qpoly(&[2, 3])), &qpoly(&[0, 1, 0, 1]));
        assert_eq!(rational_roots(&f), vec![ratio(-2, 3), rat(0), ratio(1, 2)]);
        assert_eq!(rational_roots(&qpoly(&[27, 4])), vec![ratio(-27, 4)]);
        assert!(rational_roots(&qpoly(&[-2, 0, 1])).is_empty());
    }

    #[test]
    fn square_classes() {
        assert_eq!(rational_square_class(&ratio(-23, 4)), BigInt::from(-23));
        assert_eq!(rational_square_class(&ratio(-92, 1)), BigInt::from(-23));
        assert_eq!(rational_square_class(&ratio(1, 8)), BigInt::from(2));
        assert_eq!(odd_part(&qpoly(&[0, 0, 108, 16])).unwrap(), qpoly(&[108, 16]));
    }
}
