use std::path::{Path, PathBuf};
use std::process::Command;

use ettk::chartab::CharacterTable;
use serde_json::Value;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn ettk(args: &[&str]) -> (i32, String, String) {
    ettk_in(&fixtures(), args)
}

fn ettk_in(root: &Path, args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ettk"))
        .args(args)
        .env("ETTK_FIXTURES", root)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = ettk(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn cyclic_tg_m11() {
    let v = json(&["cyclic-tg", "--x", "4", "--e", "4"]);
    assert_eq!(v["t"], "Z/8");
    assert_eq!(v["rule"], "omega_generates");
    assert_eq!(v["omega_order"], 8);
    let (_, prose, _) = ettk(&["cyclic-tg", "--x", "2,2", "--e", "2", "--pretty"]);
    assert!(prose.contains("T(G) = Z/2 + Z/4"), "{prose}");
}

#[test]
fn orbits_j2() {
    let v = json(&["orbits", "-p", "3", "--gens", "1,1;2,1"]);
    assert_eq!(v["orbit_count"], 1);
    let v = json(&["orbits", "-p", "5", "--gens", "1,0;0,1", "--merge", "0~5"]);
    assert_eq!(v["orbit_count"], 5);
    let v = json(&["orbits", "--fixture", "M12_p3"]);
    assert_eq!(v["orbit_count"], 3);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["orbits", "-p", "3", "--gens", "1,1"],
        vec!["orbits", "-p", "3", "--gens", "1,1;2,1", "--merge", "0-1"],
        vec!["cyclic-tg", "--x", "a", "--e", "2"],
        vec!["validate", "NoSuchTable"],
        vec!["reproduce", "nowhere"],
        vec!["frobnicate"],
        vec!["candidates", "--sub", "J2N3", "--big", "J2", "-p", "3"],
    ] {
        let (code, _, err) = ettk(&args);
        assert_eq!(code, 2, "{args:?}: {err}");
    }
}

#[test]
fn computational_errors_exit_1_with_module_name() {
    let (code, _, err) = ettk(&["orbits", "-p", "5", "--gens", "1,2;2,4"]);
    assert_eq!(code, 1);
    assert!(err.contains("rank::SingularGenerator"), "{err}");
    let (code, _, err) = ettk(&["candidates", "--sub", "J2N3", "--big", "J2", "--char", "chi_10", "-p", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("etcheck::"), "{err}");
}

#[test]
fn validate_good_and_corrupted() {
    let v = json(&["validate", "M11"]);
    assert_eq!(v["valid"], true);

    let dir = tempfile::tempdir().unwrap();
    let mut raw: Value =
        serde_json::from_str(&std::fs::read_to_string(fixtures().join("tables/M11.json")).unwrap()).unwrap();
    raw["irreducibles"][1]["values"][1] = Value::String("5".into());
    let bad = dir.path().join("M11_bad.json");
    std::fs::write(&bad, serde_json::to_string(&raw).unwrap()).unwrap();
    let (code, out, _) = ettk(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["valid"], false);
    let kinds: Vec<&str> = v["violations"].as_array().unwrap().iter().map(|x| x["kind"].as_str().unwrap()).collect();
    assert!(kinds.contains(&"row_orthogonality"), "{kinds:?}");
}

#[test]
fn induce_and_candidates() {
    let v = json(&["induce", "--sub", "J2N3", "--big", "J2", "--char", "1_7", "-p", "3", "--block", "principal"]);
    assert_eq!(v["filtered"], "chi_4+chi_5+chi_12+2*chi_13+chi_16+chi_17+chi_20+2*chi_21");
    let v = json(&["induce", "--sub", "M12.2", "--big", "M24", "--char", "1_a"]);
    assert_eq!(v["induced"], "chi_2+chi_17");
    assert_eq!(v["filtered"], Value::Null);
    let v = json(&["candidates", "--sub", "HSN5", "--big", "HS", "--char", "1_5", "-p", "5"]);
    let chars: Vec<&str> = v["candidates"].as_array().unwrap().iter().map(|c| c["character"].as_str().unwrap()).collect();
    assert_eq!(chars, ["chi_8+chi_10", "chi_8+chi_22"]);
    let v = json(&["candidates", "--sub", "J2N3", "--big", "J2", "-p", "3", "--all-linear"]);
    assert_eq!(v.as_array().unwrap().len(), 8);
}

#[test]
fn xgroup_blocks_dixon() {
    let v = json(&["xgroup", "-p", "3", "M11N3"]);
    assert_eq!(v["order"], 4);
    assert_eq!(v["invariant_factors"], serde_json::json!([2, 2]));
    let v = json(&["blocks", "-p", "3", "M11"]);
    assert_eq!(v["principal"], "B0");
    let v = json(&["dixon", "S4"]);
    assert_eq!(v["valid"], true);
    // The emitted table parses back.
    let t = CharacterTable::from_json_str(&v["table"].to_string()).unwrap();
    assert_eq!(t.class_count(), 5);
}

#[test]
fn obstruction_3m22() {
    let v = json(&["obstruction", "-p", "2", "--center", "3", "3.M22"]);
    assert_eq!(v["witness"]["class_name"], "6c");
    assert_eq!(v["witness"]["modulus"], 2);
}

#[test]
fn fixtures_all_load_and_validate() {
    let v = json(&["fixtures"]);
    assert_eq!(v["ok"], true, "{v:#}");
}

#[test]
fn reproduce_is_deterministic() {
    let a = ettk(&["reproduce", "all"]);
    let b = ettk(&["reproduce", "all"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn env_var_selects_fixture_dir() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir(dir.path().join("tables")).unwrap();
    std::fs::copy(fixtures().join("tables/M11.json"), dir.path().join("tables/Only.json")).unwrap();
    std::fs::write(
        dir.path().join("manifest.json"),
        r#"{"tables": {"Only": {"path": "tables/Only.json", "provenance": "atlas-derived"}}}"#,
    )
    .unwrap();
    let (code, out, err) = ettk_in(dir.path(), &["validate", "Only"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("\"valid\": true"));
    let (code, _, _) = ettk_in(dir.path(), &["validate", "J2"]);
    assert_eq!(code, 2);

    std::fs::write(
        dir.path().join("manifest.json"),
        r#"{"tables": {"Only": {"path": "tables/Only.json", "provenance": ""}}}"#,
    )
    .unwrap();
    let (code, _, err) = ettk_in(dir.path(), &["validate", "Only"]);
    assert_eq!(code, 1);
    assert!(err.contains("provenance"), "{err}");
}
