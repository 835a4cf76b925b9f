use super::{Field, Poly, PolyRing};

/// Newton interpolation through `(xs[i], ys[i])`; the `xs` must be distinct.
pub fn interpolate<F: Field>(k: &F, xs: &[F::Elem], ys: &[F::Elem]) -> Poly<F::Elem> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut coef: Vec<F::Elem> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = k.sub(&coef[i], &coef[i - 1]);
            let den = k.sub(&xs[i], &xs[i - j]);
            coef[i] = k.div(&num, &den).expect("interpolation nodes must be distinct");
        }
    }
    let ring = PolyRing::new(k.clone());
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        acc = ring.mul(&acc, &ring.linear(&xs[i]));
        acc = ring.add(&acc, &Poly::constant(coef[i].clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qpoly, rat, RationalField};

    #[test]
    fn recovers_cubic() {
        let f = qpoly(&[3, 0, -2, 5]);
        let ring = PolyRing::new(RationalField);
        let xs: Vec<_> = (0..6).map(rat).collect();
        let ys: Vec<_> = xs.iter().map(|x| ring.eval(&f, x)).collect();
        assert_eq!(interpolate(&RationalField, &xs, &ys), f);
    }
}
