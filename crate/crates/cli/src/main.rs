mod literal;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use kappa_core::constructions::{construct_chordal_star_with_seed, extremal_candidate, DEFAULT_SEED};
use kappa_core::graph::{are_isomorphic, parse_graph6, write_graph6};
use kappa_core::harness::{
    analyze, classify_extremal, spectrum, verify_corpus, CorpusReport, CorpusSource, VerifyOptions,
};
use kappa_core::invariants::{kappa_bound, vertex_connectivity};
use kappa_core::stanley_reisner::{betti_table_hochster, Field};

use literal::parse_graph_literal;

/// Connectivity of chordal graphs: invariants, Betti numbers, constructions
/// and exhaustive verification.
#[derive(Parser)]
#[command(name = "kappa", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Coefficient field for homology and Betti numbers.
    #[arg(long, global = true, default_value = "gf2", value_parser = parse_field)]
    field: Field,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized construction fallbacks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CorpusArgs {
    /// Enumerate every graph on this many vertices (at most 9).
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    n: Option<usize>,
    /// Read graphs from a graph6 file, one per line.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a single graph.
    Analyze {
        /// graph6, edge list `u-v,...`, or `family:params`.
        graph: String,
        /// Include the full Betti table.
        #[arg(long)]
        betti: bool,
    },
    /// Betti table of S / I(G^c) by Hochster's formula.
    Betti { graph: String },
    /// A verified chordal* graph with the given connectivity.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        kappa: usize,
    },
    /// One verified chordal* graph per admissible connectivity.
    Spectrum {
        #[arg(long)]
        n: usize,
    },
    /// Check every statement over a corpus.
    VerifyCorpus {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Record wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Chordal* graphs attaining the connectivity bound.
    ClassifyExtremal {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    s.parse().map_err(|e: kappa_core::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let resource = e.downcast_ref::<kappa_core::Error>().is_some_and(|k| k.is_resource_limit());
            ExitCode::from(if resource { 3 } else { 2 })
        }
    }
}

/// Runs the command; `Ok(false)` means a check failed.
fn run(cli: Cli) -> Result<bool> {
    if let Some(jobs) = cli.common.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global()?;
    }
    let common = &cli.common;
    match cli.command {
        Command::Analyze { graph, betti } => {
            let g = parse_graph_literal(&graph)?;
            emit(common, &analyze(&g, betti, common.field)?)?;
            Ok(true)
        }
        Command::Betti { graph } => {
            let g = parse_graph_literal(&graph)?;
            emit(common, &betti_table_hochster(&g, common.field)?)?;
            Ok(true)
        }
        Command::Construct { n, kappa } => {
            let c = construct_chordal_star_with_seed(n, kappa, common.seed)?;
            emit(
                common,
                &serde_json::json!({
                    "n": n,
                    "kappa": vertex_connectivity(&c.graph)?,
                    "graph6": write_graph6(&c.graph),
                    "recipe": c.recipe,
                }),
            )?;
            Ok(true)
        }
        Command::Spectrum { n } => {
            eprintln!("constructing chordal* graphs for n = {n}");
            let report = spectrum(n)?;
            emit(common, &report)?;
            Ok(report.is_ok())
        }
        Command::VerifyCorpus { corpus, timing } => {
            let source = load_source(&corpus)?;
            let report = verify_corpus(&source, VerifyOptions { field: common.field, timing })?;
            eprintln!(
                "scanned {} graphs ({} chordal, {} chordal*)",
                report.totals.graphs, report.totals.chordal, report.totals.chordal_star
            );
            emit(common, &report)?;
            if let Some(out) = &common.out {
                let csv_path = out.with_extension("csv");
                write_csv(&report, &csv_path)?;
                eprintln!("wrote {} and {}", out.display(), csv_path.display());
            }
            let failing = report.failing_checks();
            if !failing.is_empty() {
                let ids: Vec<String> = failing.iter().map(ToString::to_string).collect();
                eprintln!("failing checks: {}", ids.join(", "));
            }
            Ok(failing.is_empty())
        }
        Command::ClassifyExtremal { corpus } => {
            let source = load_source(&corpus)?;
            let graphs = classify_extremal(&source)?;
            let n = match &source {
                CorpusSource::Builtin(n) => Some(*n),
                CorpusSource::Graph6File(_) => graphs.first().map(|g| parse_graph6(g).map(|g| g.n())).transpose()?,
            };
            let candidate = match n {
                Some(n) if graphs.len() == 1 && n >= 4 && n.isqrt().pow(2) == n => {
                    Some(are_isomorphic(&parse_graph6(&graphs[0])?, &extremal_candidate(n)?)?)
                }
                _ => None,
            };
            eprintln!("found {} extremal graph(s)", graphs.len());
            emit(
                common,
                &serde_json::json!({
                    "n": n,
                    "bound": n.map(kappa_bound),
                    "count": graphs.len(),
                    "graphs": graphs,
                    "isomorphic_to_candidate": candidate,
                }),
            )?;
            Ok(true)
        }
    }
}

fn load_source(args: &CorpusArgs) -> Result<CorpusSource> {
    match (&args.n, &args.input) {
        (Some(n), _) => {
            eprintln!("enumerating graphs on {n} vertices");
            Ok(CorpusSource::Builtin(*n))
        }
        (None, Some(path)) => {
            eprintln!("reading {}", path.display());
            Ok(CorpusSource::from_graph6_file(path)?)
        }
        (None, None) => unreachable!("clap requires --n or --input"),
    }
}

fn emit<T: Serialize>(common: &Common, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match &common.out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn write_csv(report: &CorpusReport, path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("cannot write {}", path.display()))?;
    w.write_record(["check", "description", "applicable", "passed", "skipped", "status", "counterexamples"])?;
    for c in &report.checks {
        w.write_record([
            c.id.to_string(),
            c.description.to_string(),
            c.applicable.to_string(),
            c.passed.to_string(),
            c.skipped.to_string(),
            serde_json::to_value(c.status)?.as_str().unwrap_or_default().to_string(),
            c.counterexamples.len().to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
