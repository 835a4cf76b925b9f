use rayon::prelude::*;

use super::{NfElem, NumberField};
use crate::exact::{interpolate, zpoly, Field, Poly, QPoly, Rational, RationalField};
use crate::factor;

fn rat(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// Characteristic polynomial of multiplication by `a`, i.e.
/// `Res_Z(g(Z), W − a(Z))`, by interpolation in `W`.
pub fn charpoly(k: &NumberField, a: &NfElem) -> QPoly {
    let d = k.degree();
    if let Some(c) = a.as_rational() {
        // (W − c)^d
        let lin = Poly::new(vec![-c, rat(1)]);
        let r = crate::exact::PolyRing::new(RationalField);
        return r.pow(&lin, d as u32);
    }
    let xs: Vec<Rational> = (0..=d).map(rat).collect();
    let ys: Vec<Rational> = xs
        .par_iter()
        .map(|w| {
            let mut c = a.coords().coeffs().iter().map(|x| -x).collect::<Vec<_>>();
            c[0] += w;
            zpoly::resultant_q(k.modulus(), &Poly::new(c))
        })
        .collect();
    interpolate(&RationalField, &xs, &ys)
}

/// Minimal polynomial over ℚ: the characteristic polynomial is a power of
/// it, so its squarefree part is the answer.
pub fn minpoly(k: &NumberField, a: &NfElem) -> QPoly {
    let cp = charpoly(k, a);
    factor::squarefree_part(&cp).expect("charpoly has positive degree")
}

/// `N(X) = Norm_{K/ℚ} f(X − sθ)` for `f` over `K` (θ the generator), by
/// evaluation at `X = 0, 1, …` and interpolation. Monic `f` gives a monic
/// result of degree `deg f · [K:ℚ]`.
pub(crate) fn shifted_norm(k: &NumberField, f: &Poly<NfElem>, s: i64) -> QPoly {
    let e = f.deg0();
    let n = e * k.degree();
    let xs: Vec<Rational> = (0..=n).map(rat).collect();
    let sr = Rational::from_integer(s.into());
    let ys: Vec<Rational> = xs
        .par_iter()
        .map(|x0| {
            // Horner in K with the linear element x0 − sθ
            let mut acc = k.zero();
            for c in f.coeffs().iter().rev() {
                let t = k.mul_generator(&acc);
                let lin = k.sub(
                    &k.mul(&acc, &k.from_rational(x0)),
                    &k.mul(&t, &k.from_rational(&sr)),
                );
                acc = k.add(&lin, c);
            }
            k.norm(&acc)
        })
        .collect();
    interpolate(&RationalField, &xs, &ys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qpoly;

    #[test]
    fn minpoly_examples() {
        let k = NumberField::new(qpoly(&[1, 0, -10, 0, 1])).unwrap();
        let t = k.generator();
        assert_eq!(minpoly(&k, &t), qpoly(&[1, 0, -10, 0, 1]));
        assert_eq!(minpoly(&k, &k.from_int(3)), qpoly(&[-3, 1]));
        // θ² = 5 ± 2√6, so the minpoly of θ² is W² − 10W + 1
        let t2 = k.mul(&t, &t);
        assert_eq!(minpoly(&k, &t2), qpoly(&[1, -10, 1]));
    }

    #[test]
    fn shifted_norm_of_linear() {
        // Norm of X − θ over ℚ(θ) is g itself
        let k = NumberField::new(qpoly(&[-2, 0, 0, 1])).unwrap();
        let f = Poly::new(vec![k.neg(&k.generator()), k.one()]);
        assert_eq!(shifted_norm(&k, &f, 0), qpoly(&[-2, 0, 0, 1]));
    }
}
