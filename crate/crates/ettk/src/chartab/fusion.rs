use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;

use super::{CharacterTable, ChartabError};

/// Class fusion from a subgroup table into a group table.
#[derive(Clone, Debug)]
pub struct FusionMap {
    pub sub: Arc<CharacterTable>,
    pub big: Arc<CharacterTable>,
    pub map: Vec<usize>,
}

impl FusionMap {
    pub fn new(
        sub: Arc<CharacterTable>,
        big: Arc<CharacterTable>,
        map: Vec<usize>,
    ) -> Result<Self, ChartabError> {
        if map.len() != sub.class_count() {
            return Err(ChartabError::LengthMismatch {
                expected: sub.class_count(),
                got: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&i| i >= big.class_count()) {
            return Err(ChartabError::Format(format!(
                "fusion target {bad} out of range for {}",
                big.name
            )));
        }
        Ok(FusionMap { sub, big, map })
    }

    /// Violated fusion invariants; empty when the map is consistent.
    pub fn validate(&self) -> Vec<String> {
        let (h, g) = (&self.sub, &self.big);
        let mut out = Vec::new();
        if self.map.first() != Some(&0) {
            out.push("identity class does not map to identity".to_string());
        }
        if !(&g.order % &h.order).is_zero() {
            out.push(format!("|{}| does not divide |{}|", h.name, g.name));
        }
        for (d, &c) in self.map.iter().enumerate() {
            let (hd, gc) = (&h.classes[d], &g.classes[c]);
            if hd.element_order != gc.element_order {
                out.push(format!(
                    "{} (order {}) fuses to {} (order {})",
                    hd.name, hd.element_order, gc.name, gc.element_order
                ));
            }
            if !g.centralizer_order(c).is_multiple_of(&h.centralizer_order(d)) {
                out.push(format!(
                    "centraliser order of {} does not divide that of {}",
                    hd.name, gc.name
                ));
            }
            for (q, &dq) in &hd.power_maps {
                if let Some(&cq) = gc.power_maps.get(q) {
                    if self.map[dq] != cq {
                        out.push(format!("{q}-power map does not commute at {}", hd.name));
                    }
                }
            }
        }
        out
    }

    /// Index |G:H|.
    pub fn index(&self) -> num_bigint::BigInt {
        &self.big.order / &self.sub.order
    }
}
