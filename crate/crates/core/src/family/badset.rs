use super::FamilyError;
use crate::exact::{BiRing, QPoly, Rational, RationalField};
use crate::factor::{self, FactorOptions};

/// Recombination budget per squarefree part of the discriminant.
const SUBSET_BUDGET: u64 = 50_000;

/// The `t` where `q(t, X)` has a multiple root: zeros of `disc_X q`.
#[derive(Clone, Debug, PartialEq)]
pub struct BadSet {
    pub discriminant: QPoly,
    /// Monic factors with multiplicity. Irreducible when `complete`;
    /// otherwise some entries are squarefree parts left unsplit.
    pub factors: Vec<(QPoly, usize)>,
    /// Rational bad points, increasing.
    pub rational: Vec<Rational>,
    pub complete: bool,
}

impl BadSet {
    pub fn contains(&self, t: &Rational) -> bool {
        self.rational.binary_search(t).is_ok()
    }

    /// Bad points as `(minimal polynomial, index)` pairs; the index orders
    /// the roots of one factor and carries no further meaning.
    pub fn points(&self) -> impl Iterator<Item = (&QPoly, usize)> {
        self.factors.iter().flat_map(|(g, _)| (0..g.deg0()).map(move |i| (g, i)))
    }
}

pub fn bad_set(q: &BiPoly) -> Result<BadSet, FamilyError> {
    match q.deg_x() {
        Some(d) if d >= 2 => {}
        _ => return Err(FamilyError::DegreeTooLow),
    }
    let disc = BiRing::new(RationalField)
        .discriminant_x(q)
        .map_err(|e| FamilyError::CheckFailed(e.to_string()))?;
    if disc.is_zero() {
        return Err(FamilyError::InseparableInX);
    }
    if disc.deg0() == 0 {
        return Ok(BadSet { discriminant: disc, factors: Vec::new(), rational: Vec::new(), complete: true });
    }
    let rational = factor::rational_roots(&disc);
    let opts = FactorOptions { degree_multiple: 1, subset_budget: Some(SUBSET_BUDGET) };
    let mut factors = Vec::new();
    let mut complete = true;
    for (part, mult) in factor::squarefree_decomposition(&disc)? {
        match factor::factor_with(&part, &opts) {
            Ok(f) => factors.extend(f.factors.into_iter().map(|(g, _)| (g, mult))),
            Err(e) => {
                log::debug!("bad set: leaving a degree-{} part unsplit ({e})", part.deg0());
                complete = false;
                factors.push((part, mult));
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.coeffs().cmp(b.coeffs())));
    Ok(BadSet { discriminant: disc, factors, rational, complete })
}

type BiPoly = crate::exact::BiPoly<Rational>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qpoly, ratio, rat, PolyRing};

    fn bi(rows: &[&[i64]]) -> BiPoly {
        BiPoly::from_rows(rows.iter().map(|r| qpoly(r)).collect())
    }

    #[test]
    fn examples() {
        let b = bad_set(&bi(&[&[0, 0, 0, 1], &[1, 1]])).unwrap();
        assert_eq!(b.rational, vec![ratio(-27, 4), rat(0)]);
        assert!(b.complete);
        assert!(b.contains(&rat(0)) && !b.contains(&rat(1)));

        let b = bad_set(&bi(&[&[0, 0, 1], &[-1]])).unwrap();
        assert_eq!(b.rational, vec![rat(0)]);

        let b = bad_set(&bi(&[&[-1, -1, 0, 1], &[1, 1]])).unwrap();
        assert_eq!(b.rational, vec![ratio(-23, 4), rat(1)]);
    }

    #[test]
    fn irrational_points_kept() {
        // X² − (T² − 2): disc = 4(T² − 2)
        let b = bad_set(&bi(&[&[2, 0, 1], &[], &[-1]])).unwrap();
        assert!(b.rational.is_empty());
        assert_eq!(b.factors, vec![(qpoly(&[-2, 0, 1]), 1)]);
        assert_eq!(b.points().count(), 2);
    }

    #[test]
    fn errors() {
        assert_eq!(bad_set(&bi(&[&[1, 1], &[1]])), Err(FamilyError::DegreeTooLow));
        // (X − T)²
        assert_eq!(bad_set(&bi(&[&[0, 0, 1], &[0, -2], &[1]])), Err(FamilyError::InseparableInX));
    }

    #[test]
    fn good_points_give_squarefree_cubics() {
        let q = bi(&[&[0, 0, 0, 1], &[1, 1]]);
        let b = bad_set(&q).unwrap();
        let ring = PolyRing::new(RationalField);
        let br = BiRing::new(RationalField);
        for t in -10..=10 {
            let t = rat(t);
            let s = br.specialize_t(&q, &t);
            assert_eq!(ring.is_squarefree(&s), !b.contains(&t));
        }
    }
}
