//! Standalone records for the cubic-family certificates.

use serde::{Deserialize, Serialize};

use super::{canonical_json, elem, elem_poly, parse_json, CertificateError, Coeffs};
use crate::exact::{parse_qpoly, render_qpoly, Poly, QPoly};
use crate::family::{replay_s3, DistinctnessCertificate, S3Certificate, ShapeRefutation};
use crate::numfield::{NfElem, NumberField};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct S3Record {
    /// Defining polynomial of `K`; `X` for ℚ.
    pub base_modulus: Coeffs,
    pub y: Coeffs,
    pub forced_constant: Coeffs,
    pub constant_residual: Vec<Coeffs>,
    pub linear_residual: Vec<Vec<Coeffs>>,
    pub discriminant: Vec<Coeffs>,
    pub discriminant_resultant: Vec<Coeffs>,
    pub square_class: Vec<Coeffs>,
    pub class_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeRecord {
    pub divisor: Vec<Coeffs>,
    pub denominator: Vec<Coeffs>,
    pub scalar_gcd: Vec<Coeffs>,
    pub scalars: Vec<Coeffs>,
    pub residuals: Vec<Vec<Coeffs>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistinctnessRecord {
    pub base_modulus: Coeffs,
    pub y1: Coeffs,
    pub y2: Coeffs,
    pub delta: Coeffs,
    pub g: Vec<Coeffs>,
    pub g_factors: Vec<(Vec<Coeffs>, usize)>,
    pub f: Vec<Vec<Coeffs>>,
    pub t_numerator: Vec<Coeffs>,
    pub t_denominator: Vec<Coeffs>,
    pub shapes: Vec<ShapeRecord>,
    pub distinct: bool,
}

/// Collects every malformed entry instead of stopping at the first.
pub(crate) struct Decoder {
    pub errors: Vec<String>,
}

impl Decoder {
    pub fn new() -> Self {
        Decoder { errors: Vec::new() }
    }

    pub fn q(&mut self, what: &str, c: &[String]) -> QPoly {
        parse_qpoly(c).unwrap_or_else(|e| {
            self.errors.push(format!("{what}: {e}"));
            Poly::zero()
        })
    }

    pub fn elem(&mut self, k: &NumberField, what: &str, c: &[String]) -> NfElem {
        let p = self.q(what, c);
        if p.len() > k.degree() {
            self.errors.push(format!("{what}: {} coordinates for a field of degree {}", p.len(), k.degree()));
        }
        k.elem(p)
    }

    pub fn poly(&mut self, k: &NumberField, what: &str, c: &[Coeffs]) -> Poly<NfElem> {
        Poly::new(c.iter().map(|e| self.elem(k, what, e)).collect())
    }

    pub fn finish(self) -> Result<(), CertificateError> {
        if self.errors.is_empty() {
            Ok(())
        } else {
            Err(CertificateError::Schema(self.errors))
        }
    }
}

/// `K` from its defining polynomial, with `X` standing for ℚ.
pub(crate) fn base_field(d: &mut Decoder, modulus: &[String]) -> Result<NumberField, CertificateError> {
    let g = d.q("base_modulus", modulus);
    if g.deg0() == 1 && g.coeffs()[0] == crate::exact::rat(0) && g.coeffs()[1] == crate::exact::rat(1) {
        return Ok(NumberField::rationals());
    }
    NumberField::new(g).map_err(|e| CertificateError::Schema(vec![format!("base_modulus: {e}")]))
}

impl S3Record {
    pub fn new(k: &NumberField, c: &S3Certificate) -> Self {
        S3Record {
            base_modulus: render_qpoly(k.modulus()),
            y: elem(&c.y),
            forced_constant: elem(&c.forced_constant),
            constant_residual: elem_poly(&c.constant_residual),
            linear_residual: c.linear_residual.iter().map(elem_poly).collect(),
            discriminant: elem_poly(&c.discriminant),
            discriminant_resultant: elem_poly(&c.discriminant_resultant),
            square_class: elem_poly(&c.square_class),
            class_degree: c.class_degree(),
        }
    }

    pub fn decode(&self) -> Result<(NumberField, S3Certificate), CertificateError> {
        let mut d = Decoder::new();
        let k = base_field(&mut d, &self.base_modulus)?;
        let cert = S3Certificate {
            y: d.elem(&k, "y", &self.y),
            forced_constant: d.elem(&k, "forced_constant", &self.forced_constant),
            constant_residual: d.poly(&k, "constant_residual", &self.constant_residual),
            linear_residual: self.linear_residual.iter().map(|p| d.poly(&k, "linear_residual", p)).collect(),
            discriminant: d.poly(&k, "discriminant", &self.discriminant),
            discriminant_resultant: d.poly(&k, "discriminant_resultant", &self.discriminant_resultant),
            square_class: d.poly(&k, "square_class", &self.square_class),
        };
        if cert.class_degree() != self.class_degree {
            d.errors.push("class_degree disagrees with square_class".into());
        }
        d.finish()?;
        Ok((k, cert))
    }

    /// Recomputes the certificate from `y` and compares.
    pub fn replay(&self) -> Result<(), String> {
        let (k, cert) = self.decode().map_err(|e| e.to_string())?;
        if cert.class_degree() % 2 == 0 {
            return Err(format!("square class has even degree {}", cert.class_degree()));
        }
        replay_s3(&k, &cert).map_err(|e| e.to_string())
    }

    pub fn to_json(&self) -> String {
        canonical_json(self)
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        parse_json(text)
    }
}

impl DistinctnessRecord {
    pub fn new(k: &NumberField, c: &DistinctnessCertificate) -> Self {
        DistinctnessRecord {
            base_modulus: render_qpoly(k.modulus()),
            y1: elem(&c.y1),
            y2: elem(&c.y2),
            delta: elem(&c.delta),
            g: elem_poly(&c.g),
            g_factors: c.g_factors.iter().map(|(p, m)| (elem_poly(p), *m)).collect(),
            f: c.f.iter().map(elem_poly).collect(),
            t_numerator: elem_poly(&c.t_numerator),
            t_denominator: elem_poly(&c.t_denominator),
            shapes: c
                .shapes
                .iter()
                .map(|s| ShapeRecord {
                    divisor: elem_poly(&s.divisor),
                    denominator: elem_poly(&s.denominator),
                    scalar_gcd: elem_poly(&s.scalar_gcd),
                    scalars: s.scalars.iter().map(elem).collect(),
                    residuals: s.residuals.iter().map(elem_poly).collect(),
                })
                .collect(),
            distinct: c.is_distinct(),
        }
    }

    pub fn decode(&self) -> Result<(NumberField, DistinctnessCertificate), CertificateError> {
        let mut d = Decoder::new();
        let k = base_field(&mut d, &self.base_modulus)?;
        let shapes = self
            .shapes
            .iter()
            .map(|s| ShapeRefutation {
                divisor: d.poly(&k, "divisor", &s.divisor),
                denominator: d.poly(&k, "denominator", &s.denominator),
                scalar_gcd: d.poly(&k, "scalar_gcd", &s.scalar_gcd),
                scalars: s.scalars.iter().map(|c| d.elem(&k, "scalars", c)).collect(),
                residuals: s.residuals.iter().map(|p| d.poly(&k, "residuals", p)).collect(),
            })
            .collect();
        let cert = DistinctnessCertificate {
            y1: d.elem(&k, "y1", &self.y1),
            y2: d.elem(&k, "y2", &self.y2),
            delta: d.elem(&k, "delta", &self.delta),
            g: d.poly(&k, "g", &self.g),
            g_factors: self.g_factors.iter().map(|(p, m)| (d.poly(&k, "g_factors", p), *m)).collect(),
            f: self.f.iter().map(|p| d.poly(&k, "f", p)).collect(),
            t_numerator: d.poly(&k, "t_numerator", &self.t_numerator),
            t_denominator: d.poly(&k, "t_denominator", &self.t_denominator),
            shapes,
        };
        if cert.is_distinct() != self.distinct {
            d.errors.push("distinct flag disagrees with the shapes".into());
        }
        d.finish()?;
        Ok((k, cert))
    }

    pub fn replay(&self) -> Result<(), String> {
        let (k, cert) = self.decode().map_err(|e| e.to_string())?;
        if !cert.is_distinct() {
            return Err("a candidate shape is not refuted".into());
        }
        cert.replay(&k).map_err(|e| e.to_string())
    }

    pub fn to_json(&self) -> String {
        canonical_json(self)
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        parse_json(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qpoly, Field};
    use crate::family::{build_member, certify_distinct, certify_s3};

    #[test]
    fn s3_round_trip_and_replay() {
        let k = NumberField::new(qpoly(&[23, 0, 1])).unwrap();
        let cert = certify_s3(&build_member(&k, &k.generator())).unwrap();
        let rec = S3Record::new(&k, &cert);
        let back = S3Record::from_json(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
        assert_eq!(back.decode().unwrap().1, cert);
        back.replay().unwrap();

        let mut bad = rec.clone();
        bad.discriminant[0] = vec!["5".into()];
        assert!(bad.replay().is_err());
    }

    #[test]
    fn distinct_round_trip_and_replay() {
        let k = NumberField::rationals();
        let cert = certify_distinct(&k, &k.from_int(0), &k.from_int(1)).unwrap();
        let rec = DistinctnessRecord::new(&k, &cert);
        let back = DistinctnessRecord::from_json(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
        back.replay().unwrap();

        let mut bad = rec.clone();
        bad.y2 = vec!["2".into()];
        assert!(bad.replay().is_err());
        let mut junk = rec;
        junk.delta = vec!["x".into()];
        assert!(matches!(junk.decode(), Err(CertificateError::Schema(_))));
    }
}
