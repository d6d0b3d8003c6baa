use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ettk::abelian::AbelianGroup;
use ettk::blocks::{block_partition, faithful_et_obstructions, filter_decomposition};
use ettk::chartab::{decompose, induce, linear_p_prime_group, validate_table, CharacterTable};
use ettk::etcheck::{cyclic_tg, green_candidates, BlockScope, CandidateOptions, CandidateSet};
use ettk::perm::dixon_table;
use ettk::rank::{proj_line_orbits, Mat2, Merge, ProjOrbitReport};
use serde_json::{json, Value};

use crate::registry::FixtureRegistry;
use crate::{reproduce, CliError, Report};

#[derive(Parser, Debug)]
#[command(name = "ettk", version, about = "Endotrivial module toolkit")]
pub struct Cli {
    /// Render prose instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Fixture directory (overrides $ETTK_FIXTURES).
    #[arg(long, global = true, value_name = "DIR")]
    pub fixtures: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BlockArg {
    Principal,
    All,
}

impl From<BlockArg> for BlockScope {
    fn from(b: BlockArg) -> Self {
        match b {
            BlockArg::Principal => BlockScope::Principal,
            BlockArg::All => BlockScope::All,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check orthogonality, class sums and power maps of a table.
    Validate { table: String },
    /// Character table of a permutation group by Dixon–Schneider.
    Dixon {
        gens: String,
        #[arg(long)]
        name: Option<String>,
    },
    /// Linear characters of p′-order and their invariant factors.
    Xgroup {
        #[arg(short)]
        p: u64,
        table: String,
    },
    /// p-block partition.
    Blocks {
        #[arg(short)]
        p: u64,
        table: String,
    },
    /// Decompose Ind_N^G(λ), optionally cut to a block.
    Induce {
        #[arg(long)]
        sub: String,
        #[arg(long)]
        big: String,
        #[arg(long)]
        fusion: Option<String>,
        #[arg(long = "char")]
        character: String,
        #[arg(short)]
        p: Option<u64>,
        #[arg(long, value_enum, requires = "p")]
        block: Option<BlockArg>,
    },
    /// Possible characters of the Green correspondent of λ.
    Candidates {
        #[arg(long)]
        sub: String,
        #[arg(long)]
        big: String,
        #[arg(long)]
        fusion: Option<String>,
        #[arg(long = "char", required_unless_present = "all_linear")]
        character: Option<String>,
        #[arg(short)]
        p: u64,
        /// Run for every linear character of p′-order of the subgroup.
        #[arg(long, conflicts_with = "character")]
        all_linear: bool,
        #[arg(long, value_enum, default_value = "principal")]
        block: BlockArg,
        #[arg(long, default_value_t = 20)]
        cap: usize,
    },
    /// Orbits of a subgroup of GL₂(p) on the projective line.
    Orbits {
        #[arg(short)]
        p: Option<u64>,
        /// Matrix "a,b;c,d"; repeat for several generators.
        #[arg(long)]
        gens: Vec<String>,
        /// Identify two points, "i~j".
        #[arg(long = "merge")]
        merges: Vec<String>,
        /// Named generator fixture; -p, --gens and --merge add to it.
        #[arg(long)]
        fixture: Option<String>,
    },
    /// T(G) from X(H) and the inertial index for a cyclic Sylow subgroup.
    CyclicTg {
        /// Cyclic orders of X(H), comma separated ("1" for trivial).
        #[arg(long)]
        x: String,
        #[arg(long)]
        e: u64,
    },
    /// Faithful-character obstruction for a central extension.
    Obstruction {
        #[arg(short)]
        p: u64,
        /// Order of the central subgroup.
        #[arg(long)]
        center: u32,
        table: String,
    },
    /// Load and validate every fixture in the manifest.
    Fixtures,
    /// Run a scripted pipeline; `list` shows the sections.
    Reproduce { section: String },
}

pub fn execute(cli: Cli) -> Result<Report, CliError> {
    let root = cli.fixtures.unwrap_or_else(FixtureRegistry::default_root);
    let reg = FixtureRegistry::open(&root)?;
    match cli.command {
        Command::Validate { table } => validate(&reg, &table),
        Command::Dixon { gens, name } => dixon(&reg, &gens, name),
        Command::Xgroup { p, table } => xgroup(&reg, p, &table),
        Command::Blocks { p, table } => blocks(&reg, p, &table),
        Command::Induce {
            sub,
            big,
            fusion,
            character,
            p,
            block,
        } => {
            let scope = p.map(|_| block.unwrap_or(BlockArg::Principal));
            induce_cmd(&reg, &sub, &big, fusion.as_deref(), &character, p, scope)
        }
        Command::Candidates {
            sub,
            big,
            fusion,
            character,
            p,
            all_linear,
            block,
            cap,
        } => {
            let opts = CandidateOptions {
                block: block.into(),
                cap,
                ..CandidateOptions::default()
            };
            candidates(&reg, &sub, &big, fusion.as_deref(), character.as_deref(), p, all_linear, &opts)
        }
        Command::Orbits { p, gens, merges, fixture } => orbits(&reg, p, &gens, &merges, fixture.as_deref()),
        Command::CyclicTg { x, e } => cyclic(&x, e),
        Command::Obstruction { p, center, table } => obstruction(&reg, p, center, &table),
        Command::Fixtures => fixtures(&reg),
        Command::Reproduce { section } => reproduce::run(&reg, &section),
    }
}

fn validate(reg: &FixtureRegistry, key: &str) -> Result<Report, CliError> {
    let path = reg.table_path(key)?;
    let t = match CharacterTable::load(&path) {
        Ok(t) => t,
        Err(e) => {
            return Ok(Report {
                json: json!({"table": key, "valid": false, "load_error": e.to_string()}),
                prose: format!("{key} does not load: {e}"),
                ok: false,
            })
        }
    };
    let rep = validate_table(&t);
    let mut prose = if rep.is_valid() {
        format!(
            "{}: {} classes, order {}; all table invariants hold.",
            t.name,
            t.class_count(),
            t.order
        )
    } else {
        format!("{}: {} violations.", t.name, rep.violations.len())
    };
    for v in &rep.violations {
        let _ = write!(prose, "\n  {}", serde_json::to_string(v).expect("serialisable"));
    }
    Ok(Report {
        json: json!({
            "table": t.name,
            "valid": rep.is_valid(),
            "classes": t.class_count(),
            "order": t.order.to_string(),
            "violations": rep.violations,
        }),
        prose,
        ok: rep.is_valid(),
    })
}

fn dixon(reg: &FixtureRegistry, key: &str, name: Option<String>) -> Result<Report, CliError> {
    let file = reg.perm_generators(key)?;
    let name = name.or(file.name.clone()).unwrap_or_else(|| "G".to_string());
    let g = file.group()?;
    let t = dixon_table(&g, &name)?;
    let rep = validate_table(&t);
    let table: Value = serde_json::from_str(&t.to_json_string()).expect("table JSON");
    let degrees: Vec<String> = (0..t.irreducibles.len()).map(|i| t.degree(i).to_string()).collect();
    let prose = format!(
        "{name}: order {}, {} classes ({}), degrees {}; table {}.",
        t.order,
        t.class_count(),
        t.classes.iter().map(|c| c.name.as_str()).collect::<Vec<_>>().join(" "),
        degrees.join(", "),
        if rep.is_valid() { "validates" } else { "FAILS validation" }
    );
    Ok(Report {
        json: json!({
            "group": name,
            "order": g.order(),
            "valid": rep.is_valid(),
            "violations": rep.violations,
            "table": table,
        }),
        prose,
        ok: rep.is_valid(),
    })
}

fn xgroup(reg: &FixtureRegistry, p: u64, key: &str) -> Result<Report, CliError> {
    let t = reg.table(key)?;
    let x = linear_p_prime_group(&t, p);
    let ids: Vec<&str> = x.elements.iter().map(|&i| t.irreducibles[i].id.as_str()).collect();
    let prose = format!(
        "X({}) at p = {p} has order {} and is {}; it consists of {}.",
        t.name,
        x.elements.len(),
        x.invariant_factors,
        ids.join(", ")
    );
    Ok(Report::new(
        json!({
            "table": t.name,
            "p": p,
            "order": x.elements.len(),
            "invariant_factors": x.invariant_factors,
            "characters": ids,
            "element_orders": x.orders,
            "note": x.note,
        }),
        prose,
    ))
}

fn blocks(reg: &FixtureRegistry, p: u64, key: &str) -> Result<Report, CliError> {
    let t = reg.table(key)?;
    let bp = block_partition(&t, p)?;
    let mut prose = format!("{} has {} {p}-blocks.", t.name, bp.blocks.len());
    let blocks: Vec<Value> = bp
        .blocks
        .iter()
        .map(|b| {
            let ids: Vec<&str> = b.members.iter().map(|&i| t.irreducibles[i].id.as_str()).collect();
            let _ = write!(prose, "\n  {} (defect {}): {}", b.id, b.defect, ids.join(" "));
            json!({"id": b.id, "defect": b.defect, "members": ids})
        })
        .collect();
    Ok(Report::new(
        json!({"table": t.name, "p": p, "principal": bp.principal, "blocks": blocks}),
        prose,
    ))
}

fn induce_cmd(
    reg: &FixtureRegistry,
    sub: &str,
    big: &str,
    fusion: Option<&str>,
    character: &str,
    p: Option<u64>,
    scope: Option<BlockArg>,
) -> Result<Report, CliError> {
    let fm = reg.fusion(sub, big, fusion)?;
    let lam = fm.sub.resolve_irreducible(reg.character_id(sub, character))?;
    let ind = induce(&fm.sub.character(lam), &fm)?;
    let full = decompose(&ind).map_err(|e| CliError::compute("chartab", e))?;
    let filtered = match (p, scope) {
        (Some(p), Some(BlockArg::Principal)) => {
            let bp = block_partition(&fm.big, p)?;
            Some(filter_decomposition(&full, &bp, &bp.principal)?)
        }
        _ => None,
    };
    let lambda_id = &fm.sub.irreducibles[lam].id;
    let mut prose = format!(
        "Ind from {} to {} of {lambda_id} = {} (degree {}).",
        fm.sub.name,
        fm.big.name,
        full,
        full.degree()
    );
    if let Some(f) = &filtered {
        let _ = write!(prose, "\nIts principal block part is {} (degree {}).", f, f.degree());
    }
    Ok(Report::new(
        json!({
            "sub": fm.sub.name,
            "big": fm.big.name,
            "lambda": lambda_id,
            "induced": full.to_string(),
            "degree": full.degree().to_string(),
            "p": p,
            "block": filtered.as_ref().map(|_| "principal"),
            "filtered": filtered.as_ref().map(|f| f.to_string()),
            "filtered_degree": filtered.as_ref().map(|f| f.degree().to_string()),
        }),
        prose,
    ))
}

#[allow(clippy::too_many_arguments)]
fn candidates(
    reg: &FixtureRegistry,
    sub: &str,
    big: &str,
    fusion: Option<&str>,
    character: Option<&str>,
    p: u64,
    all_linear: bool,
    opts: &CandidateOptions,
) -> Result<Report, CliError> {
    let fm = reg.fusion(sub, big, fusion)?;
    let lambdas = if all_linear {
        linear_p_prime_group(&fm.sub, p).elements
    } else {
        let key = character.expect("clap requires --char without --all-linear");
        vec![fm.sub.resolve_irreducible(reg.character_id(sub, key))?]
    };
    let mut sets = Vec::new();
    for lam in lambdas {
        sets.push(green_candidates(&fm, lam, p, opts)?);
    }
    let prose = sets.iter().map(render_candidates).collect::<Vec<_>>().join("\n");
    let json = if all_linear {
        serde_json::to_value(&sets)
    } else {
        serde_json::to_value(&sets[0])
    }
    .expect("serialisable");
    Ok(Report::new(json, prose))
}

pub fn render_candidates(s: &CandidateSet) -> String {
    let mut out = format!(
        "For λ = {} at p = {}, the part of the induced character searched is {}.",
        s.lambda, s.p, s.filtered
    );
    if s.candidates.is_empty() {
        out.push_str("\nNo sub-character passes, so no endotrivial candidate arises.");
    }
    for c in &s.candidates {
        let _ = write!(
            out,
            "\n  {} (degree {}): {}",
            c.character,
            c.degree,
            if c.verdict.endotrivial() {
                "passes the endotrivial value test"
            } else {
                "fails the endotrivial value test"
            }
        );
    }
    out
}

fn orbits(
    reg: &FixtureRegistry,
    p: Option<u64>,
    gens: &[String],
    merges: &[String],
    fixture: Option<&str>,
) -> Result<Report, CliError> {
    let (mut p_val, mut mats, mut pairs) = (p, Vec::new(), Vec::new());
    if let Some(name) = fixture {
        let f = reg.gl2(name)?;
        if p.is_some_and(|q| q != f.p) {
            return Err(CliError::Usage(format!("-p conflicts with fixture {name} (p = {})", f.p)));
        }
        p_val = Some(f.p);
        mats = f.matrices()?;
        pairs = f.merge_pairs()?;
    }
    let p = p_val.ok_or_else(|| CliError::Usage("-p or --fixture is required".into()))?;
    for g in gens {
        mats.push(Mat2::parse(p, g)?);
    }
    for m in merges {
        pairs.push(m.parse::<Merge>()?);
    }
    let r = proj_line_orbits(p, &mats, &pairs)?;
    Ok(Report::new(serde_json::to_value(&r).expect("serialisable"), render_orbits(&r)))
}

pub fn render_orbits(r: &ProjOrbitReport) -> String {
    let parts: Vec<String> = r.labels.iter().map(|o| format!("{{{}}}", o.join(", "))).collect();
    format!(
        "The {} points of the projective line over F_{} fall into {} orbit{}: {}.",
        r.p + 1,
        r.p,
        r.orbit_count,
        if r.orbit_count == 1 { "" } else { "s" },
        parts.join(", ")
    )
}

pub fn parse_abelian(s: &str) -> Result<AbelianGroup, CliError> {
    let orders = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .ok()
                .filter(|&d| d >= 1)
                .ok_or_else(|| CliError::Usage(format!("--x: {t:?} is not a positive integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AbelianGroup::from_cyclic_orders(&orders))
}

fn cyclic(x: &str, e: u64) -> Result<Report, CliError> {
    if e == 0 {
        return Err(CliError::Usage("--e must be positive".into()));
    }
    let xg = parse_abelian(x)?;
    let r = cyclic_tg(&xg, e);
    let prose = match r.group() {
        Some(t) => format!("With X(H) = {xg} and e = {e}, T(G) = {t}."),
        None => format!(
            "With X(H) = {xg} and e = {e}, T(G) is one of: {}.",
            r.tt_candidates.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        ),
    };
    let mut json = serde_json::to_value(&r).expect("serialisable");
    json["x"] = serde_json::to_value(&xg).expect("serialisable");
    json["e"] = json!(e);
    json["t"] = json!(r.group().map(ToString::to_string));
    Ok(Report::new(json, prose))
}

fn obstruction(reg: &FixtureRegistry, p: u64, center: u32, key: &str) -> Result<Report, CliError> {
    let t = reg.table(key)?;
    let ws = faithful_et_obstructions(&t, p, center)?;
    let prose = match ws.first() {
        Some(w) => format!(
            "Every faithful irreducible of {} takes a value in {}Z at {}, so no faithful endotrivial module has a character there.",
            t.name, w.modulus, w.class_name
        ),
        None => format!("No faithful obstruction for {} at p = {p}.", t.name),
    };
    Ok(Report::new(
        json!({"table": t.name, "p": p, "center_order": center, "witness": ws.first(), "witnesses": ws}),
        prose,
    ))
}

fn fixtures(reg: &FixtureRegistry) -> Result<Report, CliError> {
    let checks = reg.check_all();
    let ok = checks.iter().all(|c| c.ok);
    let mut prose = format!("{} fixtures under {}.", checks.len(), reg.root.display());
    for c in &checks {
        let _ = write!(
            prose,
            "\n  {:<16} {:<12} {:<14} {}",
            c.kind,
            c.name,
            c.provenance,
            c.error.as_deref().unwrap_or("ok")
        );
    }
    Ok(Report {
        json: json!({"root": reg.root, "ok": ok, "fixtures": checks}),
        prose,
        ok,
    })
}
