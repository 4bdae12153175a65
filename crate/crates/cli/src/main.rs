//! `cospec`: generate the cospectral connectivity families, verify their
//! claimed properties, tabulate them, analyze graph6 input, and apply
//! switching plans.
//!
//! Exit codes: 0 when everything checked passes, 1 when a computed value
//! contradicts a claim, 2 for usage, parse and input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use cospec_core::families::{build, FamilyTag};
use cospec_core::graph6::{decode_graph6_stream, encode_graph6};
use cospec_core::spectra::{cospectral, MatrixKind};
use cospec_core::switching::{switch, validate_plan, SwitchingPlan};
use cospec_core::verify::{
    analyze_graph, parse_checks, render_summary, summarize, verify, VerifyOptions,
};
use cospec_core::Error;

#[derive(Parser)]
#[command(
    name = "cospec",
    version,
    about = "Cospectral regular graphs with different connectivity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArgs {
    /// vertex, edge, edge-variant4, line-of-edge (or line-of-<family>)
    #[arg(long)]
    family: String,
    /// Family parameter (edge-variant4 implies 4)
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Write the pair as two graph6 lines; with --out also write sidecar
    /// .plan.json and .meta.json files.
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the pair against its claimed properties.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Comma-separated subset of cospectral, kappa, kappa_prime, whitney,
        /// fiedler, linegraph; or all
        #[arg(long, default_value = "all")]
        checks: String,
        /// Seed for the random line-graph exploration
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Print the report as JSON on stdout (the table goes to stderr)
        #[arg(long)]
        json: bool,
    },
    /// One summary row per k in a range.
    Table {
        #[arg(long)]
        family: String,
        #[arg(long)]
        kmin: usize,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Report invariants of every graph in a graph6 file ("-" for stdin).
    Analyze {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Apply a switching plan to the first graph of a graph6 file.
    Switch {
        input: PathBuf,
        #[arg(long)]
        plan: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// An error with its exit status.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn usage(error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: 2,
        error: error.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        usage(e)
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate { family, out } => generate(&family, out.as_deref()),
        Command::Verify {
            family,
            checks,
            seed,
            json,
        } => verify_cmd(&family, &checks, seed, json),
        Command::Table {
            family,
            kmin,
            kmax,
            json,
        } => table(&family, kmin, kmax, json),
        Command::Analyze { input, json } => analyze(&input, json),
        Command::Switch { input, plan, out } => switch_cmd(&input, &plan, out.as_deref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn parse_family(name: &str) -> Result<FamilyTag, Failure> {
    Ok(name.parse::<FamilyTag>()?)
}

/// `pair.g6` gets sidecars `pair.plan.json` and `pair.meta.json`; any other
/// name gets the suffix appended.
fn sidecar(out: &Path, suffix: &str) -> PathBuf {
    let base = match out.extension() {
        Some(ext) if ext == "g6" => out.with_extension(""),
        _ => out.to_path_buf(),
    };
    let mut name = base.into_os_string();
    name.push(suffix);
    PathBuf::from(name)
}

fn generate(args: &FamilyArgs, out: Option<&Path>) -> Outcome {
    let tag = parse_family(&args.family)?;
    let fi = build(&tag, args.k)?;
    let lines = fi.graph6_lines();
    match out {
        None => io::stdout().write_all(lines.as_bytes())?,
        Some(path) => {
            fs::write(path, &lines)
                .with_context(|| format!("writing {}", path.display()))
                .map_err(usage)?;
            if let Some(plan) = fi.plan_json() {
                fs::write(sidecar(path, ".plan.json"), plan + "\n")?;
            }
            fs::write(sidecar(path, ".meta.json"), fi.meta_json() + "\n")?;
        }
    }
    Ok(true)
}

fn verify_cmd(args: &FamilyArgs, checks: &str, seed: u64, json: bool) -> Outcome {
    let tag = parse_family(&args.family)?;
    let checks = parse_checks(checks)?;
    let fi = build(&tag, args.k)?;
    let opts = VerifyOptions {
        checks,
        seed,
        ..Default::default()
    };
    let report = verify(&fi, &opts);
    if json {
        println!("{}", report.to_json());
        eprint!("{}", report.render_table());
    } else {
        print!("{}", report.render_table());
    }
    Ok(report.passed())
}

/// The ks in `kmin..=kmax` that the family accepts.
fn valid_ks(tag: &FamilyTag, kmin: usize, kmax: usize) -> Vec<usize> {
    (kmin..=kmax)
        .filter(|&k| match tag {
            FamilyTag::Vertex => k >= 2,
            FamilyTag::Edge => k >= 6 && k % 2 == 0,
            FamilyTag::EdgeVariant4 => k == 4,
            FamilyTag::LineOf(inner) => match inner.as_ref() {
                FamilyTag::Edge => k == 4 || (k >= 6 && k % 2 == 0),
                other => !valid_ks(other, k, k).is_empty(),
            },
        })
        .collect()
}

fn table(family: &str, kmin: usize, kmax: usize, json: bool) -> Outcome {
    let tag = parse_family(family)?;
    let ks = valid_ks(&tag, kmin, kmax);
    if ks.is_empty() {
        return Err(usage(anyhow!(
            "no valid k for family {tag} in {kmin}..={kmax}"
        )));
    }
    let mut rows = Vec::new();
    for k in ks {
        rows.push(summarize(&build(&tag, Some(k))?));
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&rows).expect("rows serialize")
        );
    } else {
        print!("{}", render_summary(&rows));
    }
    Ok(rows.iter().all(|r| r.matches_expected))
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            .map_err(usage)
    }
}

fn analyze(input: &Path, json: bool) -> Outcome {
    let graphs = decode_graph6_stream(&read_input(input)?)?;
    let results: Vec<_> = graphs.iter().map(analyze_graph).collect();
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&results).expect("analysis serializes")
        );
    } else {
        for (i, a) in results.iter().enumerate() {
            println!("{}", a.render(i + 1));
        }
    }
    Ok(results.iter().all(|a| a.consistent))
}

fn switch_cmd(input: &Path, plan_path: &Path, out: Option<&Path>) -> Outcome {
    let graphs = decode_graph6_stream(&read_input(input)?)?;
    let g = graphs
        .first()
        .ok_or_else(|| usage(anyhow!("no graph in {}", input.display())))?;
    let plan = SwitchingPlan::from_json(&read_input(plan_path)?)?;
    let report = validate_plan(g, &plan)?;
    if !report.valid {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
        return Err(usage(anyhow!(
            "switching plan is invalid ({} violations)",
            report.violations.len()
        )));
    }
    let h = switch(g, &plan)?;
    let line = encode_graph6(&h) + "\n";
    match out {
        None => io::stdout().write_all(line.as_bytes())?,
        Some(path) => fs::write(path, line)?,
    }
    eprintln!(
        "cospectral (adjacency, exact): {}",
        cospectral(g, &h, MatrixKind::Adjacency)
    );
    Ok(true)
}
