//! The `matroid` binary: file and catalog analysis, theorem verification,
//! and census runs. Exit status is 0 only when no violation and no error
//! occurred; violations exit 1, errors exit 2.

mod file;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use matroid_core::census::{self, CensusRun, Verdict};
use matroid_core::verify::{self, VACUOUS};
use matroid_core::{catalog, LinearMatroid, Outcome, VerificationReport};

#[derive(Parser)]
#[command(
    name = "matroid",
    version,
    about = "connectivity analysis, structure verification, and censuses for small matroids"
)]
struct Cli {
    /// emit JSON (sorted keys) instead of text
    #[arg(long, global = true)]
    json: bool,

    /// bound worker parallelism for census commands
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// census commands: append records to this store; other commands:
    /// write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// list the built-in matroids or print one as a matroid file
    Catalog {
        #[command(subcommand)]
        sub: CatalogCmd,
    },
    /// print rank, structure counts, connectivity, and the small-cocircuit
    /// witness of a matroid
    Analyze {
        /// matroid file to read
        path: Option<PathBuf>,
        /// use a catalog matroid instead of a file
        #[arg(long, conflicts_with = "path")]
        catalog: Option<String>,
        /// refuse inputs with more than this many elements
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// run a structure verifier and report every instance
    Verify {
        /// which statement to check
        id: TheoremId,
        /// matroid file to read
        #[arg(long)]
        file: Option<PathBuf>,
        /// use a catalog matroid instead of a file
        #[arg(long)]
        catalog: Option<String>,
        /// run over the exhaustive binary rank-4 point-subset sweep
        #[arg(long)]
        sweep_rank4: bool,
        /// run over seeded ternary samples, as rank,n,count
        #[arg(long, value_name = "RANK,N,COUNT")]
        sample: Option<String>,
        /// seed for sampled runs (required with --sample)
        #[arg(long)]
        seed: Option<u64>,
        /// extra separations per deletion fed to the separation
        /// interaction scan
        #[arg(long, default_value_t = 3)]
        alts: usize,
        /// refuse inputs with more than this many elements
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// exhaustive or sampled point-subset censuses
    Census {
        #[command(subcommand)]
        sub: CensusCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// one line per built-in matroid
    List,
    /// print a catalog matroid in the matroid file format
    Show { name: String },
}

#[derive(Subcommand)]
enum CensusCmd {
    /// classify all 2^15 point subsets of the binary rank-4 projective
    /// space and verify the small-cocircuit statements on every minimally
    /// vertically 4-connected one
    SweepRank4,
    /// classify seeded pseudo-random point subsets of a ternary projective
    /// space and run every applicable verifier
    Sample {
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        /// explicit stream seed; identical parameters reproduce the run
        /// byte for byte
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TheoremId {
    /// minimally vertically 4-connected matroids have small cocircuits
    Minimal,
    /// the binary strengthening: a 4-cocircuit always exists
    Binary,
    /// the triangle-relative small-cocircuit statement
    #[value(name = "minimal-triangle")]
    MinimalTriangle,
    /// the dichotomy for vertically 4-connected matroids whose triangle
    /// deletions all break vertical 4-connectivity
    Main,
    /// deleting a 4-point-line element preserves vertical 4-connectivity
    #[value(name = "lemma-4pt")]
    Lemma4pt,
    /// the exact-3-separation interaction statement
    #[value(name = "lemma-technical")]
    LemmaTechnical,
    /// wheel-style triads around a triangle of a 3-connected matroid
    #[value(name = "tutte-triangle")]
    TutteTriangle,
    /// the property suite of the nine-element rank-4 exception
    #[value(name = "n9-suite")]
    N9Suite,
}

struct Rendered {
    text: String,
    json: Value,
    violations: usize,
    /// --out was already consumed as a census store path
    out_consumed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        // a second initialization in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(&cli) {
        Ok(rendered) => {
            let body = if cli.json {
                let mut s = serde_json::to_string_pretty(&rendered.json)
                    .expect("json rendering cannot fail");
                s.push('\n');
                s
            } else {
                rendered.text.clone()
            };
            match &cli.out {
                Some(path) if !rendered.out_consumed => {
                    if let Err(e) = std::fs::write(path, body) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                _ => print!("{body}"),
            }
            if rendered.violations > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Rendered, String> {
    match &cli.cmd {
        Cmd::Catalog { sub } => catalog_cmd(sub),
        Cmd::Analyze { path, catalog, max_size } => {
            let m = load_matroid(path.as_deref(), catalog.as_deref(), *max_size)?;
            Ok(Rendered {
                text: report::analyze_text(&m),
                json: report::analyze_json(&m),
                violations: 0,
                out_consumed: false,
            })
        }
        Cmd::Verify {
            id,
            file,
            catalog,
            sweep_rank4,
            sample,
            seed,
            alts,
            max_size,
        } => verify_cmd(
            *id,
            file.as_deref(),
            catalog.as_deref(),
            *sweep_rank4,
            sample.as_deref(),
            *seed,
            *alts,
            *max_size,
        ),
        Cmd::Census { sub } => census_cmd(sub, cli.out.as_deref()),
    }
}

fn catalog_cmd(sub: &CatalogCmd) -> Result<Rendered, String> {
    match sub {
        CatalogCmd::List => {
            let mut text = format!(
                "{:<8} {:>5} {:>4} {:>3} {:>6} {:>5} {:>5} {:>6}\n",
                "name", "field", "rank", "n", "simple", "vconn", "tconn", "min_v4"
            );
            let mut rows = Vec::new();
            for entry in catalog::entries() {
                let e = &entry.expected;
                text.push_str(&format!(
                    "{:<8} {:>5} {:>4} {:>3} {:>6} {:>5} {:>5} {:>6}\n",
                    entry.name,
                    e.field,
                    e.rank,
                    e.n,
                    if e.simple { "yes" } else { "no" },
                    e.vertical.to_string(),
                    e.tutte.to_string(),
                    if e.minimally_vertical_4 { "yes" } else { "no" },
                ));
                rows.push(json!({
                    "name": entry.name,
                    "field": e.field,
                    "rank": e.rank,
                    "elements": e.n,
                    "simple": e.simple,
                    "vertical_connectivity": e.vertical.to_string(),
                    "tutte_connectivity": e.tutte.to_string(),
                    "minimally_vertically_4_connected": e.minimally_vertical_4,
                }));
            }
            Ok(Rendered { text, json: json!(rows), violations: 0, out_consumed: false })
        }
        CatalogCmd::Show { name } => {
            let m = catalog::by_name(name)
                .ok_or_else(|| format!("unknown catalog matroid '{name}'; see catalog list"))?;
            let matrix: Vec<Vec<u8>> = {
                let reduced = m.matrix().row_reduce();
                (0..m.full_rank() as usize)
                    .map(|i| (0..m.n()).map(|j| reduced.entry(i, j)).collect())
                    .collect()
            };
            Ok(Rendered {
                text: file::serialize_matroid(&m),
                json: json!({
                    "name": m.name(),
                    "field": m.field(),
                    "rank": m.full_rank(),
                    "elements": m.n(),
                    "labels": m.labels(),
                    "matrix": matrix,
                }),
                violations: 0,
                out_consumed: false,
            })
        }
    }
}

fn load_matroid(
    path: Option<&std::path::Path>,
    catalog_name: Option<&str>,
    max_size: Option<usize>,
) -> Result<LinearMatroid, String> {
    let m = match (path, catalog_name) {
        (Some(p), None) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            let name = p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "matroid".to_string());
            file::parse_matroid_file(&text, &name)
                .map_err(|e| format!("{}: {e}", p.display()))?
        }
        (None, Some(name)) => catalog::by_name(name)
            .ok_or_else(|| format!("unknown catalog matroid '{name}'; see catalog list"))?,
        (None, None) => return Err("give a matroid file or --catalog <name>".to_string()),
        (Some(_), Some(_)) => {
            return Err("give either a file or --catalog, not both".to_string())
        }
    };
    if let Some(cap) = max_size {
        if m.n() > cap {
            return Err(format!(
                "{} has {} elements, over the --max-size cap {cap}",
                m.name(),
                m.n()
            ));
        }
    }
    Ok(m)
}

fn vacuous_report(theorem: &'static str, m: &LinearMatroid) -> VerificationReport {
    VerificationReport {
        theorem,
        matroid: m.name().to_string(),
        outcome: Outcome::Satisfied {
            clause: VACUOUS.to_string(),
            witnesses: Vec::new(),
            instances: 0,
        },
        elapsed: Duration::ZERO,
    }
}

#[allow(clippy::too_many_arguments)]
fn verify_cmd(
    id: TheoremId,
    file: Option<&std::path::Path>,
    catalog_name: Option<&str>,
    sweep: bool,
    sample: Option<&str>,
    seed: Option<u64>,
    alts: usize,
    max_size: Option<usize>,
) -> Result<Rendered, String> {
    let target_count = usize::from(file.is_some() || catalog_name.is_some())
        + usize::from(sweep)
        + usize::from(sample.is_some());
    if id == TheoremId::N9Suite {
        if target_count > 0 {
            return Err("n9-suite takes no target; it checks the built-in matroid".to_string());
        }
        return n9_suite();
    }
    if target_count != 1 {
        return Err(
            "give exactly one target: a file/--catalog matroid, --sweep-rank4, or --sample"
                .to_string(),
        );
    }
    if sweep {
        return verify_sweep(id);
    }
    if let Some(shape) = sample {
        let Some(seed) = seed else {
            return Err("--sample requires an explicit --seed".to_string());
        };
        return verify_sample(id, shape, seed);
    }

    let m = load_matroid(file, catalog_name, max_size)?;
    let reports = single_matroid_reports(id, &m, alts)?;
    let mut text = String::new();
    let mut items = Vec::new();
    let mut violations = 0;
    for r in &reports {
        text.push_str(&report::report_text(&m, r));
        text.push('\n');
        items.push(report::report_json(&m, r));
        violations += usize::from(r.is_violation());
    }
    text.push_str(&format!(
        "{} instance(s), {violations} violation(s)\n",
        reports.len()
    ));
    Ok(Rendered {
        text,
        json: json!({
            "matroid": m.name(),
            "reports": items,
            "violations": violations,
        }),
        violations,
        out_consumed: false,
    })
}

fn single_matroid_reports(
    id: TheoremId,
    m: &LinearMatroid,
    alts: usize,
) -> Result<Vec<VerificationReport>, String> {
    let reports = match id {
        TheoremId::Minimal => vec![verify::verify_theorem_minimal(m)],
        TheoremId::Binary => vec![verify::verify_theorem_binary(m).map_err(|e| e.to_string())?],
        TheoremId::MinimalTriangle => {
            let triangles = m.triangles();
            if triangles.is_empty() {
                vec![vacuous_report("minimal-triangle", m)]
            } else {
                triangles
                    .iter()
                    .map(|&t| {
                        verify::verify_theorem_minimal_triangle(m, t)
                            .expect("triangles come from the matroid")
                    })
                    .collect()
            }
        }
        TheoremId::Main => {
            let triangles = m.triangles();
            if triangles.is_empty() {
                vec![vacuous_report("main", m)]
            } else {
                triangles
                    .iter()
                    .map(|&t| verify::verify_theorem_main(m, t))
                    .collect()
            }
        }
        TheoremId::Lemma4pt => vec![verify::verify_lemma_4pt_line(m)],
        TheoremId::LemmaTechnical => {
            let reports = verify::scan_lemma_technical_instances(m, alts);
            if reports.is_empty() {
                vec![vacuous_report("lemma-technical", m)]
            } else {
                reports
            }
        }
        TheoremId::TutteTriangle => {
            let mut reports = Vec::new();
            for t in m.triangles() {
                let e: Vec<usize> = t.elements().collect();
                for (a, b, c) in [
                    (e[0], e[1], e[2]),
                    (e[0], e[2], e[1]),
                    (e[1], e[0], e[2]),
                    (e[1], e[2], e[0]),
                    (e[2], e[0], e[1]),
                    (e[2], e[1], e[0]),
                ] {
                    reports.push(verify::verify_tutte_triangle(m, a, b, c));
                }
            }
            if reports.is_empty() {
                vec![vacuous_report("tutte-triangle", m)]
            } else {
                reports
            }
        }
        TheoremId::N9Suite => unreachable!("handled above"),
    };
    Ok(reports)
}

fn n9_suite() -> Result<Rendered, String> {
    let checks = verify::n9_property_suite();
    let mut text = String::new();
    let mut failed = 0;
    for c in &checks {
        text.push_str(&format!(
            "{:<44} {}\n",
            c.name,
            if c.pass { "pass" } else { "FAIL" }
        ));
        failed += usize::from(!c.pass);
    }
    text.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
    let items: Vec<Value> = checks
        .iter()
        .map(|c| json!({"name": c.name, "pass": c.pass}))
        .collect();
    Ok(Rendered {
        text,
        json: json!({"checks": items, "all_pass": failed == 0}),
        violations: failed,
        out_consumed: false,
    })
}

fn verdict_key(id: TheoremId) -> Result<&'static str, String> {
    match id {
        TheoremId::Minimal => Ok("minimal"),
        TheoremId::Binary => Ok("binary"),
        TheoremId::MinimalTriangle => Ok("mintri"),
        TheoremId::Main => Ok("main"),
        TheoremId::Lemma4pt => Ok("l4pt"),
        TheoremId::LemmaTechnical => Ok("ltech"),
        _ => Err("that statement has no census verdict".to_string()),
    }
}

fn run_overview(run: &CensusRun, focus: Option<&str>) -> (String, Value, usize) {
    let mut text = run.summary();
    let violations = run.violations();
    for (key, theorem) in &violations {
        text.push_str(&format!("VIOLATION key={key:x} theorem={theorem}\n"));
    }
    text.push_str(&format!("{} violation(s)\n", violations.len()));

    let mut theorems: Vec<&str> = Vec::new();
    for r in &run.records {
        for &(t, _) in &r.verdicts {
            if !theorems.contains(&t) {
                theorems.push(t);
            }
        }
    }
    let mut tallies = serde_json::Map::new();
    for t in theorems {
        if focus.is_some_and(|f| f != t) {
            continue;
        }
        tallies.insert(
            t.to_string(),
            json!({
                "pass": run.count(t, Verdict::Pass),
                "vacuous": run.count(t, Verdict::Vacuous),
                "hypo": run.count(t, Verdict::Hypo),
                "viol": run.count(t, Verdict::Viol),
            }),
        );
    }
    let json = json!({
        "header": run.header.line(),
        "records": run.records.len(),
        "skipped_small": run.skipped_small,
        "skipped_nonspanning": run.skipped_nonspanning,
        "min_v4": run.min_v4_count(),
        "tallies": Value::Object(tallies),
        "violations": violations
            .iter()
            .map(|(k, t)| json!({"key": format!("{k:x}"), "theorem": t}))
            .collect::<Vec<_>>(),
    });
    (text, json, violations.len())
}

fn verify_sweep(id: TheoremId) -> Result<Rendered, String> {
    let key = verdict_key(id)?;
    if !matches!(id, TheoremId::Minimal | TheoremId::Binary) {
        return Err(format!(
            "the exhaustive binary sweep carries verdicts for minimal and binary, not {key}"
        ));
    }
    let run = census::sweep_binary_rank4();
    let (text, json, violations) = run_overview(&run, Some(key));
    Ok(Rendered { text, json, violations, out_consumed: false })
}

fn verify_sample(id: TheoremId, shape: &str, seed: u64) -> Result<Rendered, String> {
    let key = verdict_key(id)?;
    if id == TheoremId::Binary {
        return Err("the binary statement is not part of ternary sampling".to_string());
    }
    let parts: Vec<&str> = shape.split(',').collect();
    let [rank, n, count] = parts.as_slice() else {
        return Err(format!("--sample takes rank,n,count, got '{shape}'"));
    };
    let rank: u32 = rank.trim().parse().map_err(|_| format!("bad rank '{rank}'"))?;
    let n: usize = n.trim().parse().map_err(|_| format!("bad n '{n}'"))?;
    let count: usize = count.trim().parse().map_err(|_| format!("bad count '{count}'"))?;
    let run = census::sample_ternary(rank, n, count, seed).map_err(|e| e.to_string())?;
    let (text, json, violations) = run_overview(&run, Some(key));
    Ok(Rendered { text, json, violations, out_consumed: false })
}

fn census_cmd(sub: &CensusCmd, out: Option<&std::path::Path>) -> Result<Rendered, String> {
    let run = match sub {
        CensusCmd::SweepRank4 => census::sweep_binary_rank4(),
        CensusCmd::Sample { rank, n, count, seed } => {
            census::sample_ternary(*rank, *n, *count, *seed).map_err(|e| e.to_string())?
        }
    };
    let (mut text, mut json, violations) = run_overview(&run, None);
    let mut out_consumed = false;
    if let Some(path) = out {
        let appended = run
            .save(path)
            .map_err(|e| format!("cannot save census to {}: {e}", path.display()))?;
        text.push_str(&format!("appended {appended} record(s) to {}\n", path.display()));
        if let Value::Object(map) = &mut json {
            map.insert("appended".to_string(), json!(appended));
            map.insert("store".to_string(), json!(path.display().to_string()));
        }
        out_consumed = true;
    }
    Ok(Rendered { text, json, violations, out_consumed })
}
