use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{enumerate_group, PermError, PermGroup};

/// `{"degree": d, "generators": [[images…], …]}` with 0-based images.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorFile {
    #[serde(default)]
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl GeneratorFile {
    pub fn from_json_str(s: &str) -> Result<Self, PermError> {
        serde_json::from_str(s).map_err(|e| PermError::Format(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, PermError> {
        let s = std::fs::read_to_string(path).map_err(|e| PermError::Io(format!("{}: {e}", path.display())))?;
        let mut f = Self::from_json_str(&s)?;
        if f.name.is_none() {
            f.name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
        }
        Ok(f)
    }

    pub fn group(&self) -> Result<PermGroup, PermError> {
        let g = enumerate_group(self.degree, self.generators.clone())?;
        if let Some(n) = self.order {
            if n != g.order() as u64 {
                return Err(PermError::Format(format!(
                    "declared order {n}, closure has {}",
                    g.order()
                )));
            }
        }
        Ok(g)
    }
}
