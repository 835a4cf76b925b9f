//! Exact arithmetic: rationals, dense univariate and bivariate polynomials
//! over an exact field, resultants and discriminants.
//!
//! Coefficient fields are passed around as "ring objects" implementing
//! [`Field`]; elements carry no reference to their field. The same
//! polynomial code therefore serves ℚ ([`RationalField`]) and number fields.

mod bipoly;
mod interp;
pub(crate) mod linalg;
mod poly;
pub(crate) mod zpoly;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use bipoly::{BiPoly, BiRing};
pub use interp::interpolate;
pub use poly::{sylvester_resultant, Poly, PolyRing};

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Univariate polynomial over ℚ.
pub type QPoly = Poly<Rational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("resultant with a zero polynomial")]
    ZeroResultantInput,
    #[error("discriminant of a polynomial of degree 0 in the main variable")]
    ConstantDiscriminant,
    #[error("malformed rational literal {0:?}")]
    BadRational(String),
}

/// Elements that know whether they are zero without consulting their field.
pub trait FieldElem: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn is_zero(&self) -> bool;
}

impl FieldElem for Rational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// An exact field: equality is decidable and inversion is exact.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: FieldElem;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` exactly when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_rational(&self, q: &Rational) -> Self::Elem;

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&Rational::from_integer(n.into()))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Resultant of two nonzero polynomials. The default walks the Euclidean
    /// remainder sequence, which is exact over any field; implementations
    /// with a cheaper fraction-free route override it.
    fn poly_resultant(&self, f: &Poly<Self::Elem>, g: &Poly<Self::Elem>) -> Self::Elem {
        poly::euclidean_resultant(self, f, g)
    }
}

/// The field ℚ.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        if Zero::is_zero(a) {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_rational(&self, q: &Rational) -> Rational {
        q.clone()
    }
    fn poly_resultant(&self, f: &QPoly, g: &QPoly) -> Rational {
        zpoly::resultant_q(f, g)
    }
}

/// Shorthand for `n/1`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`; panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds a polynomial over ℚ from small integer coefficients (ascending).
pub fn qpoly(coeffs: &[i64]) -> QPoly {
    Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
}

/// Renders a rational as `"p/q"`, omitting `/q` when `q = 1`.
pub fn render_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses the `"p/q"` (or `"p"`) form produced by [`render_rational`].
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::BadRational(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() || d.is_negative() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Ascending dense coefficient array of `p/q` strings.
pub fn render_qpoly(f: &QPoly) -> Vec<String> {
    f.coeffs().iter().map(render_rational).collect()
}

pub fn parse_qpoly(coeffs: &[String]) -> Result<QPoly, ExactError> {
    let c = coeffs
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::new(c))
}

/// Bivariate rendering: outer index is the power of `T`.
pub fn render_qbipoly(f: &BiPoly<Rational>) -> Vec<Vec<String>> {
    f.rows().iter().map(render_qpoly).collect()
}

pub fn parse_qbipoly(rows: &[Vec<String>]) -> Result<BiPoly<Rational>, ExactError> {
    let rows = rows
        .iter()
        .map(|r| parse_qpoly(r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BiPoly::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_rendering() {
        assert_eq!(render_rational(&ratio(-27, 4)), "-27/4");
        assert_eq!(render_rational(&rat(3)), "3");
        assert_eq!(render_rational(&ratio(4, 2)), "2");
        assert_eq!(parse_rational("-27/4").unwrap(), ratio(-27, 4));
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn zero_is_zero_over_one() {
        let z = ratio(0, 7);
        assert_eq!(z.denom(), &BigInt::from(1));
        assert_eq!(render_rational(&z), "0");
    }
}
