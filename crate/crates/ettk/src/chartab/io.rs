//! JSON file formats for character tables and fusion maps.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{CharacterTable, ChartabError, ClassInfo, FusionMap, Irreducible};
use crate::cyclo::Cyclotomic;

#[derive(Serialize, Deserialize)]
struct ClassJson {
    name: String,
    size: String,
    element_order: u32,
    #[serde(default)]
    power_maps: BTreeMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct IrrJson {
    id: String,
    values: Vec<Cyclotomic>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    name: String,
    order: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    center: Option<Vec<usize>>,
    classes: Vec<ClassJson>,
    irreducibles: Vec<IrrJson>,
}

/// On-disk fusion map: class indices of `big` for each class of `sub`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FusionJson {
    pub sub: String,
    pub big: String,
    pub map: Vec<usize>,
}

fn parse_big(s: &str, what: &str) -> Result<BigInt, ChartabError> {
    s.trim()
        .parse()
        .map_err(|_| ChartabError::Format(format!("{what}: not an integer: {s:?}")))
}

impl CharacterTable {
    pub fn from_json_str(text: &str) -> Result<Self, ChartabError> {
        let raw: TableJson =
            serde_json::from_str(text).map_err(|e| ChartabError::Format(e.to_string()))?;
        let k = raw.classes.len();
        let mut classes = Vec::with_capacity(k);
        for c in raw.classes {
            let mut power_maps = BTreeMap::new();
            for (q, idx) in c.power_maps {
                let q: u32 = q
                    .parse()
                    .map_err(|_| ChartabError::Format(format!("power map key {q:?}")))?;
                if idx >= k {
                    return Err(ChartabError::Format(format!(
                        "class {}: power map {q} points to {idx}",
                        c.name
                    )));
                }
                power_maps.insert(q, idx);
            }
            classes.push(ClassInfo {
                size: parse_big(&c.size, &c.name)?,
                name: c.name,
                element_order: c.element_order,
                power_maps,
            });
        }
        let mut irreducibles = Vec::with_capacity(raw.irreducibles.len());
        for x in raw.irreducibles {
            if x.values.len() != k {
                return Err(ChartabError::Format(format!(
                    "{}: {} values for {k} classes",
                    x.id,
                    x.values.len()
                )));
            }
            irreducibles.push(Irreducible {
                id: x.id,
                values: x.values,
            });
        }
        if let Some(c) = &raw.center {
            if c.iter().any(|&i| i >= k) {
                return Err(ChartabError::Format("center class out of range".into()));
            }
        }
        Ok(CharacterTable {
            order: parse_big(&raw.order, "order")?,
            name: raw.name,
            classes,
            irreducibles,
            center: raw.center,
        })
    }

    pub fn load(path: &Path) -> Result<Self, ChartabError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ChartabError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    /// Canonical JSON text. Loading and re-serialising this text is the identity.
    pub fn to_json_string(&self) -> String {
        let raw = TableJson {
            name: self.name.clone(),
            order: self.order.to_string(),
            center: self.center.clone(),
            classes: self
                .classes
                .iter()
                .map(|c| ClassJson {
                    name: c.name.clone(),
                    size: c.size.to_string(),
                    element_order: c.element_order,
                    power_maps: c.power_maps.iter().map(|(q, i)| (q.to_string(), *i)).collect(),
                })
                .collect(),
            irreducibles: self
                .irreducibles
                .iter()
                .map(|x| IrrJson {
                    id: x.id.clone(),
                    values: x.values.clone(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("serialisable")
    }
}

impl FusionJson {
    pub fn load(path: &Path) -> Result<Self, ChartabError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ChartabError::Io(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| ChartabError::Format(e.to_string()))
    }

    /// Attaches the map to loaded tables, checking names and ranges.
    pub fn bind(
        &self,
        sub: Arc<CharacterTable>,
        big: Arc<CharacterTable>,
    ) -> Result<FusionMap, ChartabError> {
        if sub.name != self.sub || big.name != self.big {
            return Err(ChartabError::Format(format!(
                "fusion {}→{} applied to {}→{}",
                self.sub, self.big, sub.name, big.name
            )));
        }
        FusionMap::new(sub, big, self.map.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const S3: &str = r#"{
      "name": "S3", "order": "6",
      "classes": [
        {"name": "1a", "size": "1", "element_order": 1, "power_maps": {"2": 0, "3": 0}},
        {"name": "2a", "size": "3", "element_order": 2, "power_maps": {"2": 0, "3": 1}},
        {"name": "3a", "size": "2", "element_order": 3, "power_maps": {"2": 2, "3": 0}}
      ],
      "irreducibles": [
        {"id": "chi_1", "values": ["1", "1", "1"]},
        {"id": "chi_2", "values": ["1", "-1", "1"]},
        {"id": "chi_3", "values": ["2", "0", {"n": 3, "terms": [[1, "1"], [2, "1"]]}]}
      ]
    }"#;

    #[test]
    fn load_and_roundtrip() {
        let t = CharacterTable::from_json_str(S3).unwrap();
        assert_eq!(t.irreducibles[2].values[2], Cyclotomic::from_int(-1));
        let text = t.to_json_string();
        let again = CharacterTable::from_json_str(&text).unwrap();
        assert_eq!(again, t);
        assert_eq!(again.to_json_string(), text);
    }

    #[test]
    fn rejects_ragged_rows() {
        let bad = S3.replace(r#"["1", "-1", "1"]"#, r#"["1", "-1"]"#);
        assert!(CharacterTable::from_json_str(&bad).is_err());
    }
}
