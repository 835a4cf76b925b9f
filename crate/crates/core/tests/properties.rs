use autfield::exact::{
    interpolate, parse_rational, rat, render_rational, sylvester_resultant, Field, Poly, PolyRing, QPoly, Rational,
    RationalField,
};
use autfield::factor::factor_over_q;
use autfield::family::{bad_set, build_member, certify_s3};
use autfield::groupspec::parse_permutation;
use autfield::numfield::{NfElem, NumberField};
use autfield::perm::Permutation;
use autfield::pipeline::candidates;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| Poly::new(c.into_iter().map(rat).collect()))
}

fn cubic_field() -> NumberField {
    NumberField::new(Poly::new(vec![rat(-1), rat(-1), rat(0), rat(1)])).unwrap()
}

fn cubic_elem() -> impl Strategy<Value = NfElem> {
    prop::collection::vec(small_rational(), 3).prop_map(|c| cubic_field().elem(Poly::new(c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trip(q in small_rational()) {
        prop_assert_eq!(parse_rational(&render_rational(&q)).unwrap(), q);
    }

    #[test]
    fn factorization_multiplies_back(a in small_poly(3), b in small_poly(3), c in small_poly(2)) {
        let r = PolyRing::new(RationalField);
        let f = r.mul(&r.mul(&a, &b), &c);
        prop_assume!(f.degree().is_some_and(|d| d > 0));
        let fac = factor_over_q(&f).unwrap();
        prop_assert_eq!(fac.expand(), f.clone());
        for (g, e) in &fac.factors {
            let ge = r.pow(g, *e as u32);
            prop_assert!(r.rem(&f, &ge).unwrap().is_zero());
            prop_assert!(!r.rem(&f, &r.mul(&ge, g)).unwrap().is_zero());
        }
    }

    #[test]
    fn resultant_routes_agree(a in small_poly(4), b in small_poly(4)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let via_field = RationalField.poly_resultant(&a, &b);
        prop_assert_eq!(sylvester_resultant(&RationalField, &a, &b).unwrap(), via_field);
    }

    #[test]
    fn interpolation_recovers(f in small_poly(6)) {
        let r = PolyRing::new(RationalField);
        let nodes: Vec<Rational> = (0..7).map(rat).collect();
        let vals: Vec<Rational> = nodes.iter().map(|x| r.eval(&f, x)).collect();
        prop_assert_eq!(interpolate(&RationalField, &nodes, &vals), f);
    }

    #[test]
    fn number_field_inverse_and_norm(a in cubic_elem(), b in cubic_elem()) {
        let k = cubic_field();
        let ab = k.mul(&a, &b);
        prop_assert_eq!(k.norm(&ab), k.norm(&a) * k.norm(&b));
        if !a.coords().is_zero() {
            prop_assert_eq!(k.mul(&a, &k.inv(&a).unwrap()), k.one());
        }
    }

    #[test]
    fn permutation_text_round_trip(images in Just((1..=9usize).collect::<Vec<_>>()).prop_shuffle()) {
        let p = Permutation::from_images(&images).unwrap();
        prop_assert_eq!(parse_permutation(9, &p.to_string()).unwrap(), p);
    }

    /// `disc_X P_y = −(T − y)²(4(T − y) + 27)`, so the bad set over ℚ is
    /// `{y − 27/4, y}` and the S₃ class has degree 1.
    #[test]
    fn rational_family_members(y in small_rational(), t in small_rational()) {
        let q = NumberField::rationals();
        let member = build_member(&q, &q.from_rational(&y));
        let cert = certify_s3(&member).unwrap();
        prop_assert_eq!(cert.class_degree(), 1);
        let u = &t - &y;
        let expected = -(&u * &u) * (rat(4) * &u + rat(27));
        let ring = q.ring();
        prop_assert_eq!(ring.eval(&cert.discriminant, &q.from_rational(&t)).as_rational().unwrap(), expected);

        let rows = member.poly().rows().iter().map(|r| r.map(|c| c.as_rational().unwrap())).collect();
        let bad = bad_set(&autfield::exact::BiPoly::from_rows(rows)).unwrap();
        let mut oracle = vec![&y - Rational::new(27.into(), 4.into()), y.clone()];
        oracle.sort();
        prop_assert_eq!(bad.rational, oracle);
    }

    #[test]
    fn candidates_are_distinct_and_bounded(h in 1u64..=12) {
        let all: Vec<Rational> = candidates(h).collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), all.len());
        let hi = rat(h as i64);
        prop_assert!(all.iter().all(|t| t.numer().magnitude() <= hi.numer().magnitude() && *t.denom() <= *hi.numer()));
        // integers first
        let first_fraction = all.iter().position(|t| !t.is_integer()).unwrap_or(all.len());
        prop_assert_eq!(first_fraction, 2 * h as usize + 1);
    }
}
