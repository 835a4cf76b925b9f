use super::auts::automorphisms;
use super::minpoly::shifted_norm;
use super::trager::{factor_over_nf, poly_key, shift_sequence};
use super::{NfElem, NfError, NumberField};
use crate::exact::{Field, Poly, PolyRing, QPoly, RationalField};
use crate::factor;
use crate::perm::{closure, PermGroup, Permutation};

/// Result of adjoining a root `b` of an irreducible `h` over `K`.
#[derive(Clone, Debug)]
pub struct Adjunction {
    /// `ℚ(z)`, `z = b + c·θ`.
    pub field: NumberField,
    /// The old generator θ, written in the new field.
    pub old_generator: NfElem,
    /// The adjoined root `b`, written in the new field.
    pub new_root: NfElem,
    pub shift: i64,
}

const MAX_PRIMITIVE_SHIFTS: usize = 64;

/// Adjoins a root of the monic irreducible `h` over `k` and flattens the
/// tower: the new generator is `z = b + c·θ` for the first `c` in
/// `0, 1, −1, 2, …` whose minimal polynomial over ℚ has full degree.
pub fn primitive_element(k: &NumberField, h: &Poly<NfElem>) -> Result<Adjunction, NfError> {
    let e = h.deg0();
    let target = e * k.degree();
    for c in shift_sequence().take(MAX_PRIMITIVE_SHIFTS) {
        // z is a root of h(X − cθ); its norm is the minimal polynomial when squarefree
        let norm = shifted_norm(k, h, c);
        if !factor::is_squarefree_q(&norm) {
            continue;
        }
        debug_assert_eq!(norm.deg0(), target);
        let big = NumberField::trusted(norm);
        let theta = match locate_generator(k, h, c, &big)? {
            Some(t) => t,
            None => continue,
        };
        let z = big.generator();
        let b = big.sub(&z, &big.mul(&big.from_int(c), &theta));
        return Ok(Adjunction { field: big, old_generator: theta, new_root: b, shift: c });
    }
    Err(NfError::NoShift)
}

/// θ inside `big = ℚ(z)`: the common root of `g(U)` and `h(z − cU)` (with
/// θ replaced by `U` inside the coefficients of `h`).
fn locate_generator(
    k: &NumberField,
    h: &Poly<NfElem>,
    c: i64,
    big: &NumberField,
) -> Result<Option<NfElem>, NfError> {
    let ring = big.ring();
    // z − cU as a polynomial in U over big
    let z = big.generator();
    let lin = Poly::new(vec![z, big.from_int(-c)]);
    let mut acc: Poly<NfElem> = Poly::zero();
    let mut pow: Poly<NfElem> = ring.one();
    for coef in h.coeffs() {
        let hc = big.lift_poly(coef.coords());
        acc = ring.add(&acc, &ring.mul(&hc, &pow));
        pow = ring.mul(&pow, &lin);
    }
    let g = big.lift_poly(k.modulus());
    let d = ring.gcd(&g, &acc).expect("g nonzero");
    if d.deg0() != 1 {
        return Ok(None);
    }
    Ok(Some(big.neg(&d.coeffs()[0])))
}

/// A Galois extension `L = ℚ(θ)` generated by all roots of `source`,
/// with its automorphisms as permutations of those roots.
#[derive(Clone, Debug)]
pub struct SplittingField {
    pub field: NumberField,
    pub source: QPoly,
    /// Roots of `source` in `field`, sorted by coordinates; root `i` is the
    /// point `i + 1` of the permutation action.
    pub roots: Vec<NfElem>,
    pub galois: PermGroup,
    /// `auts[i]` is the image of θ under the automorphism whose permutation
    /// is `galois.elements()[i]`.
    pub auts: Vec<NfElem>,
}

impl SplittingField {
    /// Permutation of the automorphism with generator image `image`.
    pub fn phi(&self, image: &NfElem) -> Option<&Permutation> {
        self.auts.iter().position(|a| a == image).map(|i| &self.galois.elements()[i])
    }

    /// Automorphism (generator image) with permutation `p`.
    pub fn phi_inverse(&self, p: &Permutation) -> Option<&NfElem> {
        self.galois.index_of(p).map(|i| &self.auts[i])
    }

    /// `σ(a)` for the automorphism with permutation `p`.
    pub fn apply(&self, p: &Permutation, a: &NfElem) -> Option<NfElem> {
        self.phi_inverse(p).map(|img| self.field.substitute(a, img))
    }
}

/// Splitting field of a squarefree `f` by iterated adjunction, refusing to
/// build fields of degree above `cap`.
pub fn splitting_field(f: &QPoly, cap: usize) -> Result<SplittingField, NfError> {
    let n = f.degree().ok_or(NfError::ZeroPolynomial)?;
    if n == 0 || !factor::is_squarefree_q(f) {
        return Err(NfError::NotSquarefree);
    }
    let qring = PolyRing::new(RationalField);
    let f = qring.monic(f);
    let mut k = NumberField::rationals();
    let roots = loop {
        let fac = factor_over_nf(&k, &k.lift_poly(&f))?;
        let mut nonlinear: Vec<&Poly<NfElem>> =
            fac.factors.iter().map(|(g, _)| g).filter(|g| g.deg0() > 1).collect();
        if nonlinear.is_empty() {
            let mut r: Vec<NfElem> = fac.factors.iter().map(|(g, _)| k.neg(&g.coeffs()[0])).collect();
            r.sort();
            break r;
        }
        nonlinear.sort_by(|a, b| poly_key(a).cmp(&poly_key(b)));
        let h = nonlinear[0];
        let attempted = k.degree() * h.deg0();
        if attempted > cap {
            return Err(NfError::DegreeCap { attempted, cap });
        }
        log::debug!("splitting field: adjoining a root of a degree-{} factor over degree {}", h.deg0(), k.degree());
        k = primitive_element(&k, h)?.field;
    };

    let auts = automorphisms(&k)?;
    if auts.order() != k.degree() {
        return Err(NfError::Internal(format!(
            "splitting field of degree {} has {} automorphisms",
            k.degree(),
            auts.order()
        )));
    }
    let mut pairs: Vec<(Permutation, NfElem)> = Vec::new();
    for img in auts.maps() {
        let images: Vec<usize> = roots
            .iter()
            .map(|r| {
                let s = k.substitute(r, img);
                roots.iter().position(|x| *x == s).map(|j| j + 1)
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| NfError::Internal("automorphism does not permute the roots".into()))?;
        pairs.push((Permutation::from_images(&images).map_err(|e| NfError::Internal(e.to_string()))?, img.clone()));
    }
    pairs.sort();
    let perms: Vec<Permutation> = pairs.iter().map(|(p, _)| p.clone()).collect();
    let galois = closure(n, &perms).map_err(|e| NfError::Internal(e.to_string()))?;
    if galois.order() != perms.len() || galois.elements() != perms.as_slice() {
        return Err(NfError::Internal("root action is not faithful".into()));
    }
    Ok(SplittingField {
        field: k,
        source: f,
        roots,
        galois,
        auts: pairs.into_iter().map(|(_, a)| a).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qpoly;
    use crate::numfield::minpoly::minpoly;

    #[test]
    fn sqrt2_sqrt3() {
        let k = NumberField::new(qpoly(&[-2, 0, 1])).unwrap();
        let h = k.lift_poly(&qpoly(&[-3, 0, 1]));
        let adj = primitive_element(&k, &h).unwrap();
        assert_eq!(adj.field.degree(), 4);
        let big = &adj.field;
        assert_eq!(big.mul(&adj.old_generator, &adj.old_generator), big.from_int(2));
        assert_eq!(big.mul(&adj.new_root, &adj.new_root), big.from_int(3));
        assert_eq!(minpoly(big, &big.generator()), qpoly(&[1, 0, -10, 0, 1]));
    }

    #[test]
    fn rational_base() {
        let q = NumberField::rationals();
        let adj = primitive_element(&q, &q.lift_poly(&qpoly(&[-5, 0, 1]))).unwrap();
        assert_eq!(adj.field.modulus(), &qpoly(&[-5, 0, 1]));
        assert_eq!(adj.shift, 0);
    }

    #[test]
    fn splitting_fields() {
        let l = splitting_field(&qpoly(&[-1, -1, 1]), 24).unwrap();
        assert_eq!(l.field.degree(), 2);
        assert_eq!(l.galois.order(), 2);

        let l = splitting_field(&qpoly(&[2, -3, 1]), 24).unwrap();
        assert_eq!(l.field.degree(), 1);
        assert_eq!(l.galois.order(), 1);
        assert_eq!(l.roots.len(), 2);

        let l = splitting_field(&qpoly(&[-1, -1, 0, 1]), 24).unwrap();
        assert_eq!(l.field.degree(), 6);
        assert_eq!(l.galois.order(), 6);
        // f = Π (X − rᵢ) over L
        let ring = l.field.ring();
        let prod = l.roots.iter().fold(ring.one(), |acc, r| ring.mul(&acc, &ring.linear(r)));
        assert_eq!(prod, l.field.lift_poly(&qpoly(&[-1, -1, 0, 1])));

        assert!(matches!(
            splitting_field(&qpoly(&[-1, -1, 0, 1]), 5),
            Err(NfError::DegreeCap { attempted: 6, cap: 5 })
        ));
    }
}
