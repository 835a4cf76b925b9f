//! Number fields `ℚ[Z]/(g)`: arithmetic, minimal polynomials, factoring
//! over the field, automorphisms, splitting fields and fixed fields.
//!
//! Towers are always flattened to a single generator.

mod auts;
mod field;
mod fixed;
mod minpoly;
mod splitting;
mod trager;

use thiserror::Error;

use crate::factor::FactorError;

pub use auts::{automorphisms, AutomorphismTable};
pub use field::{NfElem, NumberField};
pub use fixed::{fixed_field, FixedField, OrbitFamily};
pub use minpoly::{charpoly, minpoly};
pub use splitting::{primitive_element, splitting_field, Adjunction, SplittingField};
pub use trager::{expand, factor_over_nf, rational_poly_roots, roots_in_field, NfFactorization};

pub(crate) use trager::{roots_with_shift, shift_sequence};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NfError {
    #[error("defining polynomial must be monic")]
    NotMonic,
    #[error("defining polynomial is reducible over ℚ")]
    Reducible,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error("field degree {attempted} exceeds the cap {cap}")]
    DegreeCap { attempted: usize, cap: usize },
    #[error("no admissible shift found")]
    NoShift,
    #[error("no fixed-field generator found in the orbit-sum search")]
    NoGenerator,
    #[error("not a subgroup of the Galois group")]
    NotSubgroup,
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qpoly, rat, Field};
    use crate::factor::rational_square_class;
    use crate::perm::{aut_group_via_normalizer, closure, PermGroup, Permutation};

    #[test]
    fn inverses() {
        let k = NumberField::new(qpoly(&[-2, 0, 0, 1])).unwrap();
        let z = k.generator();
        let inv = k.inv(&z).unwrap();
        assert_eq!(inv, k.elem(crate::exact::Poly::new(vec![rat(0), rat(0), crate::exact::ratio(1, 2)])));
        let g = NumberField::new(qpoly(&[-1, -1, 1])).unwrap();
        let t = g.generator();
        assert_eq!(g.mul(&t, &g.sub(&t, &g.one())), g.one());
        assert!(NumberField::new(qpoly(&[-1, 0, 1])).is_err());
        assert!(NumberField::new(qpoly(&[1, 0, 2])).is_err());
    }

    fn cubic_splitting() -> SplittingField {
        splitting_field(&qpoly(&[-1, -1, 0, 1]), 24).unwrap()
    }

    fn sub(n: usize, gens: &[&[&[usize]]]) -> PermGroup {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|cs| Permutation::from_cycles(n, &cs.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap())
            .collect();
        closure(n, &gens).unwrap()
    }

    #[test]
    fn fixed_fields_of_cubic() {
        let l = cubic_splitting();
        let a3 = sub(3, &[&[&[1, 2, 3]]]);
        let y = fixed_field(&l, &a3).unwrap();
        assert_eq!(y.minpoly.deg0(), 2);
        let d = crate::exact::PolyRing::new(crate::exact::RationalField)
            .discriminant(&y.minpoly)
            .unwrap();
        assert_eq!(rational_square_class(&d), (-23).into());
        for p in a3.elements() {
            assert_eq!(l.apply(p, &y.generator).unwrap(), y.generator);
        }

        let stab = sub(3, &[&[&[1, 2]]]);
        let y = fixed_field(&l, &stab).unwrap();
        assert_eq!(y.minpoly.deg0(), 3);
        // the fixed field of the stabilizer of roots 1, 2 is ℚ(root 3)
        let kf = NumberField::new(y.minpoly.clone()).unwrap();
        assert!(!rational_poly_roots(&kf, &qpoly(&[-1, -1, 0, 1])).unwrap().is_empty());

        let full = fixed_field(&l, &l.galois).unwrap();
        assert_eq!(full.minpoly.deg0(), 1);
    }

    #[test]
    fn normalizer_cross_check_on_cubic() {
        let l = cubic_splitting();
        let groups = [
            (PermGroup::trivial(3), 6),
            (sub(3, &[&[&[1, 2]]]), 1),
            (sub(3, &[&[&[1, 2, 3]]]), 2),
            (l.galois.clone(), 1),
        ];
        for (h, want) in groups {
            let y = fixed_field(&l, &h).unwrap();
            let kf = NumberField::new(y.minpoly.clone()).unwrap();
            let field_side = automorphisms(&kf).unwrap().order();
            let group_side = aut_group_via_normalizer(&l.galois, &h).unwrap().order();
            assert_eq!((field_side, group_side), (want, want));
        }
    }
}
