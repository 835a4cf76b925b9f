use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::NfError;
use crate::exact::{linalg, zpoly};
use crate::exact::{render_qpoly, Field, FieldElem, Poly, PolyRing, QPoly, Rational, RationalField};
use crate::factor;

/// `ℚ[Z]/(g)` for a monic irreducible `g`. Cheap to clone (shared handle).
#[derive(Clone)]
pub struct NumberField(Arc<Inner>);

struct Inner {
    modulus: QPoly,
    degree: usize,
}

/// Residue class of a polynomial in `Z` modulo the defining polynomial.
/// Elements do not carry their field; every operation goes through the
/// [`NumberField`] that created them.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NfElem(QPoly);

impl FieldElem for NfElem {
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", render_qpoly(&self.0))
    }
}

impl NfElem {
    pub fn coords(&self) -> &QPoly {
        &self.0
    }

    /// `Some(c)` when the element is the rational constant `c`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.0.degree() {
            None => Some(Rational::from_integer(0.into())),
            Some(0) => Some(self.0.coeffs()[0].clone()),
            _ => None,
        }
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.modulus == other.0.modulus
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField{:?}", render_qpoly(&self.0.modulus))
    }
}

impl NumberField {
    /// Builds `ℚ[Z]/(g)`, certifying that `g` is monic and irreducible.
    pub fn new(g: QPoly) -> Result<Self, NfError> {
        if !g.lc().is_some_and(|c| c.is_one()) {
            return Err(NfError::NotMonic);
        }
        if !factor::is_irreducible_q(&g)? {
            return Err(NfError::Reducible);
        }
        Ok(Self::trusted(g))
    }

    /// For moduli already known to be irreducible (norms proven squarefree
    /// of irreducible polynomials, minimal polynomials).
    pub(crate) fn trusted(g: QPoly) -> Self {
        let degree = g.deg0();
        debug_assert!(degree >= 1);
        NumberField(Arc::new(Inner { modulus: g, degree }))
    }

    /// ℚ itself, as `ℚ[Z]/(Z)`; its generator is `0`.
    pub fn rationals() -> Self {
        Self::trusted(Poly::new(vec![Rational::from_integer(0.into()), Rational::one()]))
    }

    pub fn modulus(&self) -> &QPoly {
        &self.0.modulus
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn is_rationals(&self) -> bool {
        self.0.degree == 1
    }

    /// Reduces `coords` modulo the defining polynomial.
    pub fn elem(&self, coords: QPoly) -> NfElem {
        if coords.len() <= self.0.degree {
            return NfElem(coords);
        }
        let r = PolyRing::new(RationalField);
        NfElem(r.rem(&coords, &self.0.modulus).expect("nonzero modulus"))
    }

    pub fn generator(&self) -> NfElem {
        self.elem(Poly::new(vec![Rational::from_integer(0.into()), Rational::one()]))
    }

    /// `f(a)` for `f` over ℚ.
    pub fn eval_q(&self, f: &QPoly, a: &NfElem) -> NfElem {
        let mut acc = self.zero();
        for c in f.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, a), &self.from_rational(c));
        }
        acc
    }

    /// Image of `a` under the embedding sending the generator to `image`.
    pub fn substitute(&self, a: &NfElem, image: &NfElem) -> NfElem {
        self.substitute_all(std::slice::from_ref(a), image).pop().unwrap()
    }

    /// [`substitute`](Self::substitute) for several elements sharing one
    /// image: Horner steps are integer products with the multiplication
    /// matrix of `image`, with a single normalization at the end.
    pub fn substitute_all(&self, elems: &[NfElem], image: &NfElem) -> Vec<NfElem> {
        let d = self.0.degree;
        if d == 1 || image.0.len() <= 1 {
            return elems.iter().map(|a| self.eval_q(a.coords(), image)).collect();
        }
        let mut cols = Vec::with_capacity(d);
        let mut col = image.clone();
        for _ in 0..d {
            let next = self.mul_generator(&col);
            cols.push(col);
            col = next;
        }
        let den = cols
            .iter()
            .flat_map(|c| c.0.coeffs())
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        // m[r][c] = den · (image·θᶜ)_r
        let m: Vec<Vec<BigInt>> = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| cols[c].0.coeff(r).map_or_else(BigInt::zero, |q| q.numer() * (&den / q.denom())))
                    .collect()
            })
            .collect();
        elems
            .iter()
            .map(|a| {
                if a.0.len() <= 1 {
                    return a.clone();
                }
                let da = a.0.coeffs().iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
                let ai: Vec<BigInt> = a.0.coeffs().iter().map(|q| q.numer() * (&da / q.denom())).collect();
                // v = V / den^s
                let mut v = vec![BigInt::zero(); d];
                let mut scale = BigInt::one();
                v[0] = ai.last().unwrap().clone();
                for ak in ai.iter().rev().skip(1) {
                    let mut w: Vec<BigInt> = m
                        .iter()
                        .map(|row| row.iter().zip(&v).filter(|(_, x)| !x.is_zero()).map(|(e, x)| e * x).sum())
                        .collect();
                    scale *= &den;
                    w[0] += ak * &scale;
                    v = w;
                }
                let total = scale * da;
                NfElem(Poly::new(v.into_iter().map(|x| Rational::new(x, total.clone())).collect()))
            })
            .collect()
    }

    /// `a·θ`, where θ is the generator. Linear time.
    pub(crate) fn mul_generator(&self, a: &NfElem) -> NfElem {
        let mut c = Vec::with_capacity(a.0.len() + 1);
        c.push(Rational::from_integer(0.into()));
        c.extend(a.0.coeffs().iter().cloned());
        let d = self.0.degree;
        if c.len() <= d {
            return NfElem(Poly::new(c));
        }
        // subtract top · g
        let top = c.pop().unwrap();
        let g = self.0.modulus.coeffs();
        for (i, gi) in g[..d].iter().enumerate() {
            c[i] -= &top * gi;
        }
        NfElem(Poly::new(c))
    }

    /// Polynomial over ℚ viewed over this field.
    pub fn lift_poly(&self, f: &QPoly) -> Poly<NfElem> {
        f.map(|c| self.from_rational(c))
    }

    pub fn ring(&self) -> PolyRing<NumberField> {
        PolyRing::new(self.clone())
    }

    /// `N_{K/ℚ}(a) = Res(g, a(Z))`.
    pub fn norm(&self, a: &NfElem) -> Rational {
        if a.is_zero() {
            return Rational::from_integer(0.into());
        }
        if self.is_rationals() {
            return a.as_rational().unwrap();
        }
        zpoly::resultant_q(&self.0.modulus, &a.0)
    }
}

impl Field for NumberField {
    type Elem = NfElem;

    fn zero(&self) -> NfElem {
        NfElem(Poly::zero())
    }
    fn one(&self) -> NfElem {
        NfElem(Poly::constant(Rational::one()))
    }
    fn add(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(PolyRing::new(RationalField).add(&a.0, &b.0))
    }
    fn sub(&self, a: &NfElem, b: &NfElem) -> NfElem {
        NfElem(PolyRing::new(RationalField).sub(&a.0, &b.0))
    }
    fn neg(&self, a: &NfElem) -> NfElem {
        NfElem(a.0.map(|c| -c))
    }
    fn mul(&self, a: &NfElem, b: &NfElem) -> NfElem {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        if a.0.len() == 1 {
            let c = &a.0.coeffs()[0];
            return NfElem(b.0.map(|x| x * c));
        }
        if b.0.len() == 1 {
            let c = &b.0.coeffs()[0];
            return NfElem(a.0.map(|x| x * c));
        }
        self.elem(PolyRing::new(RationalField).mul(&a.0, &b.0))
    }
    fn inv(&self, a: &NfElem) -> Option<NfElem> {
        if a.is_zero() {
            return None;
        }
        if a.0.len() == 1 {
            return Some(NfElem(Poly::constant(a.0.coeffs()[0].recip())));
        }
        // solve Σ vᵢ·(a·θⁱ) = 1 with the multiplication matrix of a
        let d = self.0.degree;
        let mut cols = Vec::with_capacity(d);
        let mut col = a.clone();
        for _ in 0..d {
            let next = self.mul_generator(&col);
            cols.push(col);
            col = next;
        }
        let entry = |r: usize, c: usize| cols[c].0.coeff(r).cloned().unwrap_or_else(Rational::zero);
        let mut m = Vec::with_capacity(d);
        let mut rhs = Vec::with_capacity(d);
        for r in 0..d {
            let row: Vec<Rational> = (0..d).map(|c| entry(r, c)).collect();
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            m.push(row.iter().map(|q| q.numer() * (&l / q.denom())).collect());
            rhs.push(if r == 0 { l } else { BigInt::zero() });
        }
        let v = linalg::solve_integer(m, rhs).expect("modulus is irreducible");
        Some(NfElem(Poly::new(v)))
    }
    fn from_rational(&self, q: &Rational) -> NfElem {
        NfElem(Poly::constant(q.clone()))
    }
}
