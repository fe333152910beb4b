use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use ws_core::construction::{step1, step2, step3};
use ws_core::invariants::DEFAULT_DET_BOUND;
use ws_core::report::{verify_composition, Options, Report, SCHEMA};
use ws_core::{render, Composition, LabelMode, LineSet, Section, Tableau};

/// Largest `n` an exhaustive sweep accepts.
const SWEEP_LIMIT: usize = 12;

#[derive(Parser, Debug)]
#[command(
    name = "ws",
    version,
    about = "Construct and verify Weierstrass sections for parabolic nilradicals in type A"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Draw the tableau and its lines after a given step.
    Construct(ConstructArgs),
    /// Run every check for one composition.
    Verify(VerifyArgs),
    /// Verify every composition of every n up to a bound.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Ascii,
    Json,
    Tikz,
    Svg,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Ascii => "txt",
            Format::Json => "json",
            Format::Tikz => "tex",
            Format::Svg => "svg",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Leftmost,
    Rightmost,
}

impl From<Mode> for LabelMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Leftmost => LabelMode::Leftmost,
            Mode::Rightmost => LabelMode::Rightmost,
        }
    }
}

#[derive(Args, Debug)]
struct Common {
    /// Output directory for persisted results.
    #[arg(short = 'o', long = "out-dir")]
    out_dir: Option<PathBuf>,

    /// Largest minor whose generic determinant is expanded.
    #[arg(long = "det-size-bound", env = "WS_DET_BOUND", default_value_t = DEFAULT_DET_BOUND)]
    det_size_bound: usize,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// Composition as comma-separated parts, e.g. 2,1,1,2.
    #[arg(short, long)]
    composition: Composition,

    #[arg(long, value_enum, default_value_t = Mode::Rightmost)]
    mode: Mode,

    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
    stage: u8,

    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,

    #[arg(short = 'o', long = "out-dir")]
    out_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(short, long)]
    composition: Composition,

    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long = "n-max", value_parser = clap::value_parser!(u64).range(1..=SWEEP_LIMIT as u64))]
    n_max: u64,

    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,

    #[command(flatten)]
    common: Common,
}

/// Failures that are the caller's fault exit with 2, failed checks with 1.
enum Failure {
    Usage(String),
    Io(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct(args) => construct(&args),
        Command::Verify(args) => verify(&args),
        Command::Sweep(args) => sweep(&args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn slug(c: &Composition) -> String {
    c.parts()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("-")
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialise");
    s.push('\n');
    s
}

fn persist(dir: Option<&Path>, name: &str, body: &str) -> Result<(), Failure> {
    let Some(dir) = dir else { return Ok(()) };
    fs::create_dir_all(dir)
        .map_err(|e| Failure::Io(format!("cannot create {}: {e}", dir.display())))?;
    let path = dir.join(name);
    fs::write(&path, body).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

fn construction_json(ls: &LineSet) -> Value {
    let mut doc = ls.to_json();
    doc["schema"] = json!(SCHEMA);
    if ls.is_complete() {
        doc["section"] = json!(Section::from_lines(ls));
    }
    doc
}

fn construct(args: &ConstructArgs) -> Result<bool, Failure> {
    let t = Tableau::new(args.composition.clone());
    let mode = LabelMode::from(args.mode);
    let horizontal = step1(&t);
    let ls = match args.stage {
        1 => horizontal,
        2 => step2(&horizontal, mode).map_err(|e| Failure::Usage(e.to_string()))?,
        _ => {
            if mode == LabelMode::Leftmost {
                return Err(Failure::Usage(
                    "stage 3 builds on the rightmost labelling; drop --mode leftmost".into(),
                ));
            }
            let labelled = step2(&horizontal, mode).map_err(|e| Failure::Usage(e.to_string()))?;
            // a failure here is a construction defect, not a usage error
            match step3(&labelled) {
                Ok(ls) => ls,
                Err(e) => {
                    eprintln!("step 3 failed: {e}");
                    return Ok(false);
                }
            }
        }
    };
    let body = match args.format {
        Format::Ascii => render::ascii(&ls),
        Format::Json => pretty(&construction_json(&ls)),
        Format::Tikz => render::tikz(&ls),
        Format::Svg => render::svg(&ls),
    };
    print!("{body}");
    let name = format!(
        "construct-{}-stage{}.{}",
        slug(&args.composition),
        args.stage,
        args.format.extension()
    );
    persist(args.out_dir.as_deref(), &name, &body)?;
    Ok(true)
}

fn summary(r: &Report) -> String {
    let mut out = format!(
        "composition {}  n={} g={} dim m={} lines={}\n",
        r.composition
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(","),
        r.n,
        r.g,
        r.dim_m,
        r.lines
    );
    for p in &r.pairs {
        let restriction = match (p.restriction, p.sign) {
            (Some(u), Some(s)) => format!("{}{u}", if s < 0 { "-" } else { "+" }),
            _ => "undefined".into(),
        };
        let observed = p
            .degree_observed
            .map_or_else(|| "skipped".to_string(), |d| d.to_string());
        out.push_str(&format!(
            "  pair {}: size {} degree {} (observed {observed}) restricts to {restriction}\n",
            p.pair, p.size, p.degree_formula
        ));
    }
    for (name, status) in &r.checks {
        out.push_str(&format!("  {name:<24} {}\n", json!(status).as_str().unwrap_or("?")));
    }
    out.push_str(if r.passed() { "PASS\n" } else { "FAIL\n" });
    out
}

fn verify(args: &VerifyArgs) -> Result<bool, Failure> {
    let t = Tableau::new(args.composition.clone());
    let report = verify_composition(
        &t,
        &Options {
            det_bound: args.common.det_size_bound,
        },
    );
    let json_body = pretty(&report.to_json());
    match args.format {
        Format::Json => print!("{json_body}"),
        Format::Ascii => print!("{}", summary(&report)),
        Format::Tikz | Format::Svg => {
            return Err(Failure::Usage(
                "verify reports as ascii or json; use construct for figures".into(),
            ))
        }
    }
    for f in &report.failures {
        eprintln!("failed: {f}");
    }
    persist(
        args.common.out_dir.as_deref(),
        &format!("report-{}.json", slug(&args.composition)),
        &json_body,
    )?;
    Ok(report.passed())
}

fn sweep_row(r: &Report) -> Value {
    let failed: Vec<&str> = r
        .checks
        .iter()
        .filter(|(_, s)| json!(s) == json!("fail"))
        .map(|(k, _)| *k)
        .collect();
    json!({
        "composition": r.composition,
        "g": r.g,
        "lines": r.lines,
        "degrees": r.pairs.iter().map(|p| p.degree_formula).collect::<Vec<_>>(),
        "passed": r.passed(),
        "skipped": r.skipped(),
        "failed_checks": failed,
    })
}

fn sweep(args: &SweepArgs) -> Result<bool, Failure> {
    let n_max = args.n_max as usize;
    let opts = Options {
        det_bound: args.common.det_size_bound,
    };
    let compositions: Vec<Composition> = (1..=n_max).flat_map(Composition::all_of).collect();
    let reports: Vec<Report> = compositions
        .par_iter()
        .map(|c| verify_composition(&Tableau::new(c.clone()), &opts))
        .collect();

    let failed = reports.iter().filter(|r| !r.passed()).count();
    let with_skips = reports.iter().filter(|r| r.skipped() > 0).count();
    let doc = json!({
        "schema": SCHEMA,
        "n_max": n_max,
        "det_size_bound": opts.det_bound,
        "rows": reports.iter().map(sweep_row).collect::<Vec<_>>(),
        "summary": {
            "compositions": reports.len(),
            "passed": reports.len() - failed,
            "failed": failed,
            "with_skipped_checks": with_skips,
        },
    });
    let json_body = pretty(&doc);
    match args.format {
        Format::Json => print!("{json_body}"),
        Format::Ascii => {
            for r in &reports {
                let row = sweep_row(r);
                println!(
                    "{:<28} g={:<2} lines={:<3} degrees={:<20} {}{}",
                    row["composition"].to_string(),
                    r.g,
                    r.lines,
                    row["degrees"].to_string(),
                    if r.passed() { "pass" } else { "FAIL" },
                    if r.skipped() > 0 { " (skipped checks)" } else { "" }
                );
            }
            println!(
                "{} compositions, {} passed, {} failed, {} with skipped checks",
                reports.len(),
                reports.len() - failed,
                failed,
                with_skips
            );
        }
        Format::Tikz | Format::Svg => {
            return Err(Failure::Usage("sweep reports as ascii or json".into()))
        }
    }
    for r in reports.iter().filter(|r| !r.passed()) {
        for f in &r.failures {
            eprintln!("failed {:?}: {f}", r.composition);
        }
    }
    persist(args.common.out_dir.as_deref(), &format!("sweep-n{n_max}.json"), &json_body)?;
    Ok(failed == 0)
}
