use super::minpoly::minpoly;
use super::splitting::SplittingField;
use super::{NfElem, NfError};
use crate::exact::{Field, QPoly};
use crate::perm::PermGroup;

/// Which deterministic family produced a fixed-field generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitFamily {
    /// `Σ_{σ∈H} σ(θʲ)`
    Power,
    /// `Σ_{σ∈H} σ(θʲ + jθ)`
    PowerPlusLinear,
}

#[derive(Clone, Debug)]
pub struct FixedField {
    pub generator: NfElem,
    pub minpoly: QPoly,
    pub j: usize,
    pub family: OrbitFamily,
}

/// A generator of `L^H` as an orbit sum of a power of θ.
pub fn fixed_field(l: &SplittingField, h: &PermGroup) -> Result<FixedField, NfError> {
    if !h.is_subgroup_of(&l.galois) {
        return Err(NfError::NotSubgroup);
    }
    let k = &l.field;
    let d = k.degree();
    let target = d / h.order();
    let images: Vec<&NfElem> = h.elements().iter().map(|p| l.phi_inverse(p).expect("subgroup")).collect();
    let theta = k.generator();
    let mut power = k.one();
    let mut sums = Vec::with_capacity(d);
    for j in 1..=d {
        power = k.mul(&power, &theta);
        // σ(θʲ) = σ(θ)ʲ
        let y = images
            .iter()
            .fold(k.zero(), |acc, img| k.add(&acc, &k.substitute(&power, img)));
        let mp = minpoly(k, &y);
        if mp.deg0() == target {
            return Ok(FixedField { generator: y, minpoly: mp, j, family: OrbitFamily::Power });
        }
        sums.push(y);
    }
    let y1 = sums[0].clone();
    for (j, yj) in sums.iter().enumerate().map(|(i, y)| (i + 1, y)) {
        let y = k.add(yj, &k.mul(&k.from_int(j as i64), &y1));
        let mp = minpoly(k, &y);
        if mp.deg0() == target {
            return Ok(FixedField { generator: y, minpoly: mp, j, family: OrbitFamily::PowerPlusLinear });
        }
    }
    Err(NfError::NoGenerator)
}
