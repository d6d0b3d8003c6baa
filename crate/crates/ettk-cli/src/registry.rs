//! Named fixtures: character tables, fusions, generators and data files,
//! indexed by `manifest.json` in the fixture directory.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use ettk::chartab::{validate_table, CharacterTable, FusionJson, FusionMap};
use ettk::perm::GeneratorFile;
use ettk::rank::Gl2Fixture;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const ENV_VAR: &str = "ETTK_FIXTURES";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Entry {
    pub path: String,
    pub provenance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Manifest {
    #[serde(default)]
    pub tables: BTreeMap<String, Entry>,
    #[serde(default)]
    pub fusions: BTreeMap<String, Entry>,
    #[serde(default)]
    pub perm_generators: BTreeMap<String, Entry>,
    #[serde(default)]
    pub gl2_generators: BTreeMap<String, Entry>,
    #[serde(default)]
    pub data: BTreeMap<String, Entry>,
    /// Per table, names such as `1_7` for irreducible ids.
    #[serde(default)]
    pub labels: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Clone, Debug)]
pub struct FixtureRegistry {
    pub root: PathBuf,
    pub manifest: Manifest,
}

/// One row of the cyclic Sylow data file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CyclicRow {
    pub group: String,
    pub p: u64,
    pub x_h: Vec<u64>,
    pub e: u64,
    #[serde(default)]
    pub t: Option<Vec<u64>>,
    #[serde(default)]
    pub t_same_as: Option<String>,
}

#[derive(Deserialize)]
struct CyclicFile {
    rows: Vec<CyclicRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureCheck {
    pub kind: &'static str,
    pub name: String,
    pub provenance: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl FixtureRegistry {
    /// `$ETTK_FIXTURES` if set, else the fixtures shipped with the source tree.
    pub fn default_root() -> PathBuf {
        match std::env::var_os(ENV_VAR) {
            Some(p) if !p.is_empty() => PathBuf::from(p),
            _ => PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"),
        }
    }

    /// Reads the manifest and checks that every entry exists and has a provenance.
    pub fn open(root: &Path) -> Result<Self, CliError> {
        let path = root.join("manifest.json");
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Fixture(format!("{}: {e}", path.display())))?;
        let manifest: Manifest = serde_json::from_str(&text)
            .map_err(|e| CliError::Fixture(format!("{}: {e}", path.display())))?;
        let reg = FixtureRegistry {
            root: root.to_path_buf(),
            manifest,
        };
        for (kind, name, entry) in reg.entries() {
            if entry.provenance.trim().is_empty() {
                return Err(CliError::Fixture(format!("{kind} {name}: empty provenance")));
            }
            if !reg.root.join(&entry.path).is_file() {
                return Err(CliError::Fixture(format!("{kind} {name}: missing {}", entry.path)));
            }
        }
        Ok(reg)
    }

    pub fn open_default() -> Result<Self, CliError> {
        Self::open(&Self::default_root())
    }

    fn entries(&self) -> Vec<(&'static str, &String, &Entry)> {
        let m = &self.manifest;
        let groups = [
            ("table", &m.tables),
            ("fusion", &m.fusions),
            ("perm generators", &m.perm_generators),
            ("gl2 generators", &m.gl2_generators),
            ("data", &m.data),
        ];
        groups
            .into_iter()
            .flat_map(|(kind, map)| map.iter().map(move |(n, e)| (kind, n, e)))
            .collect()
    }

    fn resolve(&self, map: &BTreeMap<String, Entry>, kind: &str, key: &str) -> Result<PathBuf, CliError> {
        if let Some(e) = map.get(key) {
            return Ok(self.root.join(&e.path));
        }
        let p = PathBuf::from(key);
        if p.is_file() {
            return Ok(p);
        }
        Err(CliError::Usage(format!("unknown {kind} {key:?} (not in manifest, not a file)")))
    }

    pub fn table_path(&self, key: &str) -> Result<PathBuf, CliError> {
        self.resolve(&self.manifest.tables, "table", key)
    }

    pub fn table(&self, key: &str) -> Result<Arc<CharacterTable>, CliError> {
        Ok(Arc::new(CharacterTable::load(&self.table_path(key)?)?))
    }

    /// Fusion `name` (default `SUB_BIG`) bound to the two tables.
    pub fn fusion(&self, sub: &str, big: &str, name: Option<&str>) -> Result<FusionMap, CliError> {
        let key = name.map_or_else(|| format!("{sub}_{big}"), str::to_string);
        let path = self.resolve(&self.manifest.fusions, "fusion", &key)?;
        let f = FusionJson::load(&path)?;
        Ok(f.bind(self.table(sub)?, self.table(big)?)?)
    }

    pub fn perm_generators(&self, key: &str) -> Result<GeneratorFile, CliError> {
        let path = self.resolve(&self.manifest.perm_generators, "generator file", key)?;
        Ok(GeneratorFile::load(&path)?)
    }

    pub fn gl2(&self, key: &str) -> Result<Gl2Fixture, CliError> {
        let path = self.resolve(&self.manifest.gl2_generators, "gl2 fixture", key)?;
        Gl2Fixture::load(&path).map_err(|e| CliError::Fixture(e.to_string()))
    }

    pub fn cyclic_rows(&self) -> Result<Vec<CyclicRow>, CliError> {
        let path = self.resolve(&self.manifest.data, "data file", "cyclic_sylow")?;
        let text = std::fs::read_to_string(&path).map_err(|e| CliError::Fixture(e.to_string()))?;
        let file: CyclicFile = serde_json::from_str(&text).map_err(|e| CliError::Fixture(e.to_string()))?;
        Ok(file.rows)
    }

    /// Maps a manifest label like `1_7` to the table's irreducible id.
    pub fn character_id<'a>(&'a self, table: &str, key: &'a str) -> &'a str {
        self.manifest
            .labels
            .get(table)
            .and_then(|m| m.get(key))
            .map_or(key, String::as_str)
    }

    pub fn provenance(&self, kind: &str, name: &str) -> Option<&str> {
        let m = &self.manifest;
        let map = match kind {
            "table" => &m.tables,
            "fusion" => &m.fusions,
            "perm" => &m.perm_generators,
            "gl2" => &m.gl2_generators,
            _ => &m.data,
        };
        map.get(name).map(|e| e.provenance.as_str())
    }

    /// Loads and validates every fixture in the manifest.
    pub fn check_all(&self) -> Vec<FixtureCheck> {
        let m = &self.manifest;
        let mut out = Vec::new();
        let mut push = |kind, name: &String, entry: &Entry, r: Result<(), String>| {
            out.push(FixtureCheck {
                kind,
                name: name.clone(),
                provenance: entry.provenance.clone(),
                ok: r.is_ok(),
                error: r.err(),
            })
        };
        for (name, e) in &m.tables {
            let r = self.table(name).map_err(|e| e.to_string()).and_then(|t| {
                let rep = validate_table(&t);
                if rep.is_valid() {
                    Ok(())
                } else {
                    Err(format!("{} violations", rep.violations.len()))
                }
            });
            push("table", name, e, r);
        }
        for (name, e) in &m.fusions {
            let r = FusionJson::load(&self.root.join(&e.path))
                .map_err(|e| e.to_string())
                .and_then(|f| {
                    let fm = self.fusion(&f.sub, &f.big, Some(name)).map_err(|e| e.to_string())?;
                    let problems = fm.validate();
                    if problems.is_empty() {
                        Ok(())
                    } else {
                        Err(problems.join("; "))
                    }
                });
            push("fusion", name, e, r);
        }
        for (name, e) in &m.perm_generators {
            let r = self
                .perm_generators(name)
                .and_then(|g| Ok(g.group()?))
                .map(|_| ())
                .map_err(|e| e.to_string());
            push("perm generators", name, e, r);
        }
        for (name, e) in &m.gl2_generators {
            let r = self
                .gl2(name)
                .map_err(|e| e.to_string())
                .and_then(|f| f.verify().map_err(|e| e.to_string()));
            push("gl2 generators", name, e, r);
        }
        for (name, e) in &m.data {
            let r = self.cyclic_rows().map(|_| ()).map_err(|e| e.to_string());
            push("data", name, e, r);
        }
        out
    }
}
