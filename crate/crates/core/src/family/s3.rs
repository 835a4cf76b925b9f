use super::{build_member, FamilyError, FamilyMember};
use crate::exact::{BiRing, Field, FieldElem, Poly, PolyRing};
use crate::numfield::{NfElem, NumberField};

/// Proof that `Gal(P_y / K(T)) ≅ S₃`.
///
/// A root in `K(T)` of the monic `P_y` lies in `K[T]` and divides the
/// constant term `T − y`, so up to a unit it is `c` or `c·(T − y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct S3Certificate {
    pub y: NfElem,
    /// The `T`-coefficient of `P_y(T, c)` is `c + 1`, forcing `c = −1`.
    pub forced_constant: NfElem,
    /// `P_y(T, −1)` as a polynomial in `T`.
    pub constant_residual: Poly<NfElem>,
    /// `P_y(y + u, c·u)`: entry `k` is the coefficient of `uᵏ` as a
    /// polynomial in `c`. The `u¹` entry is a nonzero constant.
    pub linear_residual: Vec<Poly<NfElem>>,
    /// `disc_X P_y` in `T`, via `−4a³ − 27b²`.
    pub discriminant: Poly<NfElem>,
    /// The same discriminant via `Res_X(P, ∂P/∂X)`.
    pub discriminant_resultant: Poly<NfElem>,
    /// Product of the odd-multiplicity squarefree parts times the leading
    /// coefficient: the class of the discriminant modulo squares.
    pub square_class: Poly<NfElem>,
}

impl S3Certificate {
    pub fn class_degree(&self) -> usize {
        self.square_class.deg0()
    }
}

pub fn certify_s3(member: &FamilyMember) -> Result<S3Certificate, FamilyError> {
    let k = member.field();
    let y = member.y();
    let ring = k.ring();
    let b = BiRing::new(k.clone());

    // P_y(T, c) = (c³ − y·c − y) + T·(c + 1): the T-row must vanish at c
    let t_row = &member.poly().rows()[1];
    let forced_constant = k.neg(&k.div(&t_row.coeffs()[0], t_row.lc().unwrap()).unwrap());
    let constant_residual = b.specialize_x(member.poly(), &forced_constant);
    if constant_residual.is_zero() {
        return Err(FamilyError::CheckFailed("X = −1 is a root".into()));
    }

    let linear_residual = linear_candidate(k, y);
    match linear_residual.get(1) {
        Some(p) if p.deg0() == 0 && !p.is_zero() => {}
        _ => return Err(FamilyError::CheckFailed("linear candidate not refuted".into())),
    }

    let a = Poly::new(vec![k.neg(y), k.one()]);
    let a2 = ring.mul(&a, &a);
    let a3 = ring.mul(&a2, &a);
    let discriminant = ring.sub(
        &ring.scale(&k.from_int(-4), &a3),
        &ring.scale(&k.from_int(27), &a2),
    );
    let discriminant_resultant =
        b.discriminant_x(member.poly()).map_err(|e| FamilyError::CheckFailed(e.to_string()))?;
    if discriminant != discriminant_resultant {
        return Err(FamilyError::CheckFailed("discriminant routes disagree".into()));
    }
    if discriminant.is_zero() {
        return Err(FamilyError::InseparableInX);
    }

    let square_class = odd_class(&ring, &discriminant);
    if square_class.deg0() % 2 == 0 {
        return Err(FamilyError::CheckFailed("discriminant class has even degree".into()));
    }
    Ok(S3Certificate {
        y: y.clone(),
        forced_constant,
        constant_residual,
        linear_residual,
        discriminant,
        discriminant_resultant,
        square_class,
    })
}

/// Recomputes every field of `cert` from `y` and compares.
pub fn replay_s3(k: &NumberField, cert: &S3Certificate) -> Result<(), FamilyError> {
    let fresh = certify_s3(&build_member(k, &cert.y))?;
    if fresh != *cert {
        return Err(FamilyError::CheckFailed("S₃ certificate does not replay".into()));
    }
    Ok(())
}

/// `P_y(y + u, c·u)` grouped by powers of `u`.
fn linear_candidate(k: &NumberField, y: &NfElem) -> Vec<Poly<NfElem>> {
    let ring = k.ring();
    let member = build_member(k, y);
    // rows in u: Σ_i row_i(X)·(y + u)^i
    let yu = Poly::new(vec![y.clone(), k.one()]);
    let mut shifted: Vec<Poly<NfElem>> = Vec::new(); // shifted[j] = coeff of Xʲ, poly in u
    let mut pw = ring.one();
    for row in member.poly().rows() {
        for (j, c) in row.coeffs().iter().enumerate() {
            if shifted.len() <= j {
                shifted.resize(j + 1, Poly::zero());
            }
            shifted[j] = ring.add(&shifted[j], &ring.scale(c, &pw));
        }
        pw = ring.mul(&pw, &yu);
    }
    // uⁱ Xʲ ↦ cʲ u^{i+j}
    let mut out: Vec<Poly<NfElem>> = Vec::new();
    for (j, col) in shifted.iter().enumerate() {
        for (i, c) in col.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if out.len() <= i + j {
                out.resize(i + j + 1, Poly::zero());
            }
            out[i + j] = ring.add(&out[i + j], &ring.monomial(c.clone(), j));
        }
    }
    out
}

fn odd_class(ring: &PolyRing<NumberField>, d: &Poly<NfElem>) -> Poly<NfElem> {
    let lc = d.lc().expect("nonzero").clone();
    let parts = ring.squarefree_decomposition(d).expect("nonzero");
    parts
        .iter()
        .filter(|(_, m)| m % 2 == 1)
        .fold(Poly::constant(lc), |acc, (a, _)| ring.mul(&acc, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qpoly, ratio};

    #[test]
    fn rational_parameter() {
        let q = NumberField::rationals();
        let c = certify_s3(&build_member(&q, &q.from_int(0))).unwrap();
        assert_eq!(c.constant_residual, Poly::constant(q.from_int(-1)));
        assert_eq!(c.discriminant, q.lift_poly(&qpoly(&[0, 0, -27, -4])));
        // −4T³ − 27T² = −4·T²·(T + 27/4)
        assert_eq!(
            c.square_class,
            q.ring().mul(&Poly::constant(q.from_int(-4)), &Poly::new(vec![q.from_rational(&ratio(27, 4)), q.one()]))
        );
        assert_eq!(c.class_degree(), 1);
        assert_eq!(c.linear_residual[1], Poly::constant(q.one()));
        assert_eq!(c.linear_residual[3], q.ring().monomial(q.one(), 3));
        replay_s3(&q, &c).unwrap();
    }

    #[test]
    fn irrational_parameter() {
        let k = NumberField::new(qpoly(&[-23, 0, 1])).unwrap();
        let y = k.generator();
        let c = certify_s3(&build_member(&k, &y)).unwrap();
        assert_eq!(c.class_degree(), 1);
        assert_eq!(c.discriminant, c.discriminant_resultant);
        let mut bad = c.clone();
        bad.y = k.from_int(1);
        assert!(replay_s3(&k, &bad).is_err());
    }
}
