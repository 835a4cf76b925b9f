use std::collections::HashMap;

use super::trager::rational_poly_roots;
use super::{NfElem, NfError, NumberField};
use crate::perm::AbstractGroup;

/// `Aut(K/ℚ)`: each automorphism is recorded by the image of the generator.
/// The identity is entry 0; the rest are sorted by coordinates.
#[derive(Clone, Debug)]
pub struct AutomorphismTable {
    field: NumberField,
    maps: Vec<NfElem>,
    table: Vec<Vec<usize>>,
}

impl AutomorphismTable {
    /// Builds the table from generator images, computing compositions.
    /// Fails if the images are not closed under composition.
    pub fn from_maps(field: &NumberField, mut maps: Vec<NfElem>) -> Result<Self, NfError> {
        let id = field.generator();
        maps.sort();
        maps.dedup();
        let pos = maps.iter().position(|m| *m == id).ok_or_else(|| {
            NfError::Internal("automorphism list lacks the identity".into())
        })?;
        let idm = maps.remove(pos);
        maps.insert(0, idm);
        let index: HashMap<&NfElem, usize> = maps.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut table = vec![vec![0; maps.len()]; maps.len()];
        for (i, mi) in maps.iter().enumerate() {
            // (σᵢ ∘ σⱼ)(θ) = σⱼ(θ) evaluated at σᵢ(θ)
            for (j, c) in field.substitute_all(&maps, mi).iter().enumerate() {
                table[i][j] = *index.get(c).ok_or_else(|| {
                    NfError::Internal(format!("composition {i}∘{j} leaves the list"))
                })?;
            }
        }
        Ok(AutomorphismTable { field: field.clone(), maps, table })
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    /// Image of the generator under each automorphism.
    pub fn maps(&self) -> &[NfElem] {
        &self.maps
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// `σᵢ(a)`.
    pub fn apply(&self, i: usize, a: &NfElem) -> NfElem {
        self.field.substitute(a, &self.maps[i])
    }

    pub fn to_abstract(&self) -> AbstractGroup {
        let labels = (0..self.order()).map(|i| format!("s{i}")).collect();
        AbstractGroup::from_table(self.table.clone(), labels).expect("composition of field maps is a group law")
    }
}

/// All automorphisms of `k`: one per root of the defining polynomial in `k`.
pub fn automorphisms(k: &NumberField) -> Result<AutomorphismTable, NfError> {
    let roots = rational_poly_roots(k, k.modulus())?;
    for r in &roots {
        debug_assert!(k.eval_q(k.modulus(), r).coords().is_zero());
    }
    AutomorphismTable::from_maps(k, roots)
}
