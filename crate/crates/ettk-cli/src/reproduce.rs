//! Scripted pipelines that recompute the worked examples from fixtures.

use std::fmt::Write as _;

use ettk::abelian::AbelianGroup;
use ettk::blocks::{block_partition, faithful_et_obstructions, filter_decomposition};
use ettk::chartab::{decompose, induce, linear_p_prime_group, validate_table};
use ettk::etcheck::{cyclic_tg, green_candidates, CandidateOptions, CyclicRule};
use ettk::perm::dixon_table;
use serde::Serialize;
use serde_json::{json, Value};

use crate::commands::{render_candidates, render_orbits};
use crate::registry::{CyclicRow, FixtureRegistry};
use crate::{CliError, Report};

pub const SECTIONS: &[(&str, &str)] = &[
    ("j2", "J2 at p = 3: principal-block inductions and candidates for 1_7 and 1_4"),
    ("hs", "HS at p = 5: principal-block induction and candidates for 1_5"),
    ("m24", "M24 at p = 3: induction from M12:2 and candidates for 1_a"),
    ("m11", "Sylow 3-normaliser of M11: Dixon table and X(N)"),
    ("cyclic", "cyclic Sylow table: T(G) from X(H) and e, row by row"),
    ("orbits", "GL2(p) fixtures: orbit counts on the projective line"),
    ("faithful", "faithful obstructions for 3.M22 (p = 2) and 2.M12 (p = 3)"),
];

pub fn run(reg: &FixtureRegistry, section: &str) -> Result<Report, CliError> {
    match section {
        "list" => Ok(Report::new(
            json!(SECTIONS.iter().map(|(k, d)| json!({"section": k, "description": d})).collect::<Vec<_>>()),
            SECTIONS.iter().map(|(k, d)| format!("{k:<9} {d}")).collect::<Vec<_>>().join("\n"),
        )),
        "all" => {
            let mut json = serde_json::Map::new();
            let mut prose = Vec::new();
            let mut ok = true;
            for (k, _) in SECTIONS {
                let r = run(reg, k)?;
                ok &= r.ok;
                json.insert(k.to_string(), r.json);
                prose.push(format!("== {k} ==\n{}", r.prose));
            }
            Ok(Report {
                json: Value::Object(json),
                prose: prose.join("\n\n"),
                ok,
            })
        }
        "j2" => local(reg, "J2N3", "J2", 3, &["1_7", "1_4"], true),
        "hs" => local(reg, "HSN5", "HS", 5, &["1_5"], true),
        "m24" => local(reg, "M12.2", "M24", 3, &["1_a"], false),
        "m11" => m11(reg),
        "cyclic" => cyclic(reg),
        "orbits" => orbits(reg),
        "faithful" => faithful(reg),
        other => Err(CliError::Usage(format!(
            "unknown section {other:?}; expected one of all, list, {}",
            SECTIONS.iter().map(|(k, _)| *k).collect::<Vec<_>>().join(", ")
        ))),
    }
}

fn local(
    reg: &FixtureRegistry,
    sub: &str,
    big: &str,
    p: u64,
    labels: &[&str],
    principal: bool,
) -> Result<Report, CliError> {
    let fm = reg.fusion(sub, big, None)?;
    let bp = block_partition(&fm.big, p)?;
    let mut out = Vec::new();
    let mut prose = String::new();
    for label in labels {
        let lam = fm.sub.resolve_irreducible(reg.character_id(sub, label))?;
        let full = decompose(&induce(&fm.sub.character(lam), &fm)?).map_err(|e| CliError::compute("chartab", e))?;
        let part = if principal {
            filter_decomposition(&full, &bp, &bp.principal)?
        } else {
            full.clone()
        };
        let set = green_candidates(&fm, lam, p, &CandidateOptions::default())?;
        let _ = writeln!(
            prose,
            "{label} ({}): {} = {}",
            fm.sub.irreducibles[lam].id,
            if principal { "e0·Ind" } else { "Ind" },
            part
        );
        let _ = writeln!(prose, "{}", render_candidates(&set));
        out.push(json!({
            "label": label,
            "lambda": fm.sub.irreducibles[lam].id,
            "induced": full.to_string(),
            "principal_part": principal.then(|| part.to_string()),
            "candidates": set.characters(),
            "endotrivial": set.candidates.iter().filter(|c| c.verdict.endotrivial()).map(|c| &c.character).collect::<Vec<_>>(),
        }));
    }
    Ok(Report::new(
        json!({"sub": fm.sub.name, "big": fm.big.name, "p": p, "results": out}),
        prose.trim_end().to_string(),
    ))
}

fn m11(reg: &FixtureRegistry) -> Result<Report, CliError> {
    let g = reg.perm_generators("M11N3")?.group()?;
    let t = dixon_table(&g, "M11N3")?;
    let valid = validate_table(&t).is_valid();
    let x = linear_p_prime_group(&t, 3);
    let degrees: Vec<String> = (0..t.irreducibles.len()).map(|i| t.degree(i).to_string()).collect();
    let prose = format!(
        "N has order {}, {} classes, degrees {}. The table {}. X(N) has {} elements and is {}.",
        t.order,
        t.class_count(),
        degrees.join(","),
        if valid { "validates" } else { "does not validate" },
        x.elements.len(),
        x.invariant_factors
    );
    Ok(Report {
        json: json!({
            "order": t.order.to_string(),
            "classes": t.class_count(),
            "degrees": degrees,
            "valid": valid,
            "x_order": x.elements.len(),
            "x_invariant_factors": x.invariant_factors,
        }),
        prose,
        ok: valid,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CyclicCheck {
    pub group: String,
    pub p: u64,
    pub x: AbelianGroup,
    pub e: u64,
    pub rule: CyclicRule,
    pub expected: Option<AbelianGroup>,
    pub computed: Vec<AbelianGroup>,
    pub determined: bool,
    pub agrees: bool,
}

/// Recomputes every row of the cyclic Sylow data file.
pub fn cyclic_checks(rows: &[CyclicRow]) -> Vec<CyclicCheck> {
    rows.iter()
        .map(|r| {
            let expected = match (&r.t, &r.t_same_as) {
                (Some(t), _) => Some(t.clone()),
                (None, Some(other)) => rows
                    .iter()
                    .find(|s| &s.group == other && s.p == r.p)
                    .and_then(|s| s.t.clone()),
                _ => None,
            }
            .map(|t| AbelianGroup::from_cyclic_orders(&t));
            let x = AbelianGroup::from_cyclic_orders(&r.x_h);
            let rep = cyclic_tg(&x, r.e);
            let agrees = rep.determined && expected.as_ref() == rep.group();
            CyclicCheck {
                group: r.group.clone(),
                p: r.p,
                x,
                e: r.e,
                rule: rep.rule,
                expected,
                computed: rep.tt_candidates,
                determined: rep.determined,
                agrees,
            }
        })
        .collect()
}

fn cyclic(reg: &FixtureRegistry) -> Result<Report, CliError> {
    let checks = cyclic_checks(&reg.cyclic_rows()?);
    let mut prose = String::new();
    let mut summary = serde_json::Map::new();
    for rule in [CyclicRule::OddInertialIndex, CyclicRule::OmegaGenerates, CyclicRule::Enumeration] {
        let rows: Vec<&CyclicCheck> = checks.iter().filter(|c| c.rule == rule).collect();
        let agree = rows.iter().filter(|c| c.agrees).count();
        let determined = rows.iter().filter(|c| c.determined).count();
        let key = serde_json::to_value(rule).expect("serialisable");
        let key = key.as_str().expect("unit variant").to_string();
        let _ = writeln!(
            prose,
            "{key}: {} rows, {determined} determined, {agree} agree with the table",
            rows.len()
        );
        summary.insert(key, json!({"rows": rows.len(), "determined": determined, "agree": agree}));
    }
    for c in checks.iter().filter(|c| c.rule == CyclicRule::Enumeration && c.determined) {
        let _ = writeln!(
            prose,
            "  {} p={}: X(H) = {}, e = {} gives T(G) = {}",
            c.group, c.p, c.x, c.e, c.computed[0]
        );
    }
    Ok(Report::new(
        json!({"summary": summary, "rows": checks}),
        prose.trim_end().to_string(),
    ))
}

fn orbits(reg: &FixtureRegistry) -> Result<Report, CliError> {
    let mut out = Vec::new();
    let mut prose = String::new();
    let mut ok = true;
    for name in reg.manifest.gl2_generators.keys() {
        let f = reg.gl2(name)?;
        let verified = f.verify().map_err(|e| e.to_string());
        ok &= verified.is_ok();
        let r = f.orbits()?;
        let _ = writeln!(prose, "{name} ({}, {}): {}", f.structure, f.provenance.as_deref().unwrap_or("?"), render_orbits(&r));
        out.push(json!({
            "fixture": name,
            "structure": f.structure,
            "p": f.p,
            "verified": verified.is_ok(),
            "verify_error": verified.err(),
            "orbit_count": r.orbit_count,
            "orbits": r.labels,
        }));
    }
    Ok(Report {
        json: json!(out),
        prose: prose.trim_end().to_string(),
        ok,
    })
}

fn faithful(reg: &FixtureRegistry) -> Result<Report, CliError> {
    let mut out = Vec::new();
    let mut prose = String::new();
    for (name, p, z) in [("3.M22", 2u64, 3u32), ("2.M12", 3, 2)] {
        let t = reg.table(name)?;
        let ws = faithful_et_obstructions(&t, p, z)?;
        let list: Vec<String> = ws.iter().map(|w| format!("{} (m = {})", w.class_name, w.modulus)).collect();
        let _ = writeln!(prose, "{name}, p = {p}: witnesses {}", if list.is_empty() { "none".into() } else { list.join(", ") });
        out.push(json!({"table": name, "p": p, "center_order": z, "witnesses": ws}));
    }
    Ok(Report::new(json!(out), prose.trim_end().to_string()))
}
