use rayon::prelude::*;

use super::{interpolate, ExactError, Field, FieldElem, Poly, PolyRing};

/// Dense polynomial in `(T, X)`. Row `i` holds the coefficient of `Tⁱ` as a
/// polynomial in `X`; trailing zero rows are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly<E> {
    rows: Vec<Poly<E>>,
}

impl<E: FieldElem> BiPoly<E> {
    pub fn from_rows(mut rows: Vec<Poly<E>>) -> Self {
        while rows.last().is_some_and(|r| r.is_zero()) {
            rows.pop();
        }
        BiPoly { rows }
    }

    pub fn rows(&self) -> &[Poly<E>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn deg_t(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| r.degree()).max()
    }

    /// Coefficient of `Tⁱ Xʲ`, if stored.
    pub fn coeff(&self, i: usize, j: usize) -> Option<&E> {
        self.rows.get(i).and_then(|r| r.coeff(j))
    }

    pub fn map<E2: FieldElem>(&self, mut f: impl FnMut(&E) -> E2) -> BiPoly<E2> {
        BiPoly::from_rows(self.rows.iter().map(|r| r.map(&mut f)).collect())
    }
}

/// Operations on [`BiPoly`] over a fixed coefficient field.
#[derive(Clone, Debug)]
pub struct BiRing<F: Field> {
    ring: PolyRing<F>,
}

impl<F: Field> BiRing<F> {
    pub fn new(field: F) -> Self {
        BiRing { ring: PolyRing::new(field) }
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    /// Builds from X-major data: `cols[j]` is the coefficient of `Xʲ` as a
    /// polynomial in `T`.
    pub fn from_x_major(&self, cols: &[Poly<F::Elem>]) -> BiPoly<F::Elem> {
        let k = self.field();
        let deg_t = cols.iter().map(|c| c.len()).max().unwrap_or(0);
        let rows = (0..deg_t)
            .map(|i| {
                Poly::new(
                    cols.iter()
                        .map(|c| c.coeff(i).cloned().unwrap_or_else(|| k.zero()))
                        .collect(),
                )
            })
            .collect();
        BiPoly::from_rows(rows)
    }

    /// Coefficient of `Xʲ` as a polynomial in `T`.
    pub fn x_coeff(&self, f: &BiPoly<F::Elem>, j: usize) -> Poly<F::Elem> {
        let k = self.field();
        Poly::new(
            f.rows()
                .iter()
                .map(|r| r.coeff(j).cloned().unwrap_or_else(|| k.zero()))
                .collect(),
        )
    }

    pub fn to_x_major(&self, f: &BiPoly<F::Elem>) -> Vec<Poly<F::Elem>> {
        match f.deg_x() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|j| self.x_coeff(f, j)).collect(),
        }
    }

    pub fn add(&self, a: &BiPoly<F::Elem>, b: &BiPoly<F::Elem>) -> BiPoly<F::Elem> {
        let n = a.rows().len().max(b.rows().len());
        let zero = Poly::zero();
        BiPoly::from_rows(
            (0..n)
                .map(|i| {
                    self.ring.add(
                        a.rows().get(i).unwrap_or(&zero),
                        b.rows().get(i).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }

    pub fn mul(&self, a: &BiPoly<F::Elem>, b: &BiPoly<F::Elem>) -> BiPoly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return BiPoly::from_rows(Vec::new());
        }
        let mut rows = vec![Poly::zero(); a.rows().len() + b.rows().len() - 1];
        for (i, ra) in a.rows().iter().enumerate() {
            for (j, rb) in b.rows().iter().enumerate() {
                rows[i + j] = self.ring.add(&rows[i + j], &self.ring.mul(ra, rb));
            }
        }
        BiPoly::from_rows(rows)
    }

    /// `f(t₀, X)`.
    pub fn specialize_t(&self, f: &BiPoly<F::Elem>, t0: &F::Elem) -> Poly<F::Elem> {
        f.rows().iter().rev().fold(Poly::zero(), |acc, row| {
            self.ring.add(&self.ring.scale(t0, &acc), row)
        })
    }

    /// `f(T, x₀)`.
    pub fn specialize_x(&self, f: &BiPoly<F::Elem>, x0: &F::Elem) -> Poly<F::Elem> {
        Poly::new(f.rows().iter().map(|r| self.ring.eval(r, x0)).collect())
    }

    /// `∂f/∂X`.
    pub fn derivative_x(&self, f: &BiPoly<F::Elem>) -> BiPoly<F::Elem> {
        BiPoly::from_rows(f.rows().iter().map(|r| self.ring.derivative(r)).collect())
    }

    /// `Res_X(f, g)` as a polynomial in `T`, by evaluation at `T = 0, 1, 2, …`
    /// (skipping points where either leading coefficient in `X` vanishes) and
    /// interpolation.
    pub fn resultant_x(
        &self,
        f: &BiPoly<F::Elem>,
        g: &BiPoly<F::Elem>,
    ) -> Result<Poly<F::Elem>, ExactError> {
        let (dfx, dgx) = match (f.deg_x(), g.deg_x()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(ExactError::ZeroResultantInput),
        };
        let k = self.field();
        let lf = self.x_coeff(f, dfx);
        let lg = self.x_coeff(g, dgx);
        let bound = f.deg_t().unwrap_or(0) * dgx + g.deg_t().unwrap_or(0) * dfx;
        let mut xs = Vec::with_capacity(bound + 1);
        let mut t = 0i64;
        while xs.len() <= bound {
            let tv = k.from_int(t);
            t += 1;
            if self.ring.eval(&lf, &tv).is_zero() || self.ring.eval(&lg, &tv).is_zero() {
                continue;
            }
            xs.push(tv);
        }
        let ys = xs
            .par_iter()
            .map(|tv| self.ring.resultant(&self.specialize_t(f, tv), &self.specialize_t(g, tv)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(interpolate(k, &xs, &ys))
    }

    /// `disc_X f = (-1)^{d(d-1)/2} Res_X(f, ∂f/∂X) / lc_X(f)`, a polynomial in `T`.
    pub fn discriminant_x(&self, f: &BiPoly<F::Elem>) -> Result<Poly<F::Elem>, ExactError> {
        let d = match f.deg_x() {
            None | Some(0) => return Err(ExactError::ConstantDiscriminant),
            Some(d) => d,
        };
        let res = self.resultant_x(f, &self.derivative_x(f))?;
        let lc = self.x_coeff(f, d);
        let q = self
            .ring
            .exact_div(&res, &lc)
            .expect("leading coefficient divides Res(f, f_X)");
        Ok(if (d * (d - 1) / 2) % 2 == 1 { self.ring.neg(&q) } else { q })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qpoly, rat, RationalField};

    fn family_y0() -> BiPoly<crate::exact::Rational> {
        // X^3 + T X + T
        BiPoly::from_rows(vec![qpoly(&[0, 0, 0, 1]), qpoly(&[1, 1])])
    }

    #[test]
    fn specialize_family() {
        let b = BiRing::new(RationalField);
        let f = family_y0();
        assert_eq!(b.specialize_t(&f, &rat(1)), qpoly(&[1, 1, 0, 1]));
        assert_eq!(b.specialize_t(&f, &rat(0)), qpoly(&[0, 0, 0, 1]));
        let g = BiPoly::from_rows(vec![qpoly(&[2, 0, 5])]);
        assert_eq!(b.specialize_t(&g, &rat(7)), qpoly(&[2, 0, 5]));
    }

    #[test]
    fn discriminant_of_family() {
        let b = BiRing::new(RationalField);
        // -4T^3 - 27T^2
        assert_eq!(b.discriminant_x(&family_y0()).unwrap(), qpoly(&[0, 0, -27, -4]));
    }

    #[test]
    fn x_major_round_trip() {
        let b = BiRing::new(RationalField);
        let f = family_y0();
        let cols = b.to_x_major(&f);
        assert_eq!(cols, vec![qpoly(&[0, 1]), qpoly(&[0, 1]), qpoly(&[]), qpoly(&[1])]);
        assert_eq!(b.from_x_major(&cols), f);
    }
}
