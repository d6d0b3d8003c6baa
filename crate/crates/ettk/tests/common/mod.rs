#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use ettk::chartab::{CharacterTable, FusionJson, FusionMap};

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn table(name: &str) -> Arc<CharacterTable> {
    let path = fixtures().join("tables").join(format!("{name}.json"));
    Arc::new(CharacterTable::load(&path).unwrap_or_else(|e| panic!("{name}: {e}")))
}

pub fn fusion(sub: &str, big: &str) -> FusionMap {
    let path = fixtures().join("fusions").join(format!("{sub}_{big}.json"));
    FusionJson::load(&path)
        .unwrap()
        .bind(table(sub), table(big))
        .unwrap()
}

pub fn table_names() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(fixtures().join("tables"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .map(|p| p.file_stem().unwrap().to_string_lossy().into_owned())
        .collect();
    names.sort();
    names
}

pub fn fusion_pairs() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = std::fs::read_dir(fixtures().join("fusions"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .map(|p| {
            let f = FusionJson::load(&p).unwrap();
            (f.sub, f.big)
        })
        .collect();
    out.sort();
    out
}
