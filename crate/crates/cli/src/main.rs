use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use sssp_cli::{bench, pivot_table, to_csv, BenchConfig, BenchRow, CSV_HEADER};
use sssp_core::dimacs::write_dimacs_with_comment;
use sssp_core::{
    oracle_bellman_ford, parse_dimacs, run, verify_outcome, AlgoId, Family, GenSpec, Graph, Params, RunOptions,
    RunOutcome,
};

#[derive(Parser)]
#[command(name = "sssp", version, about = "Instrumented label-correcting shortest-path drivers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an instance in DIMACS format.
    Gen(GenArgs),
    /// Run one driver on a DIMACS file and print a CSV row.
    Run(RunArgs),
    /// Sweep a family over parameter sets, seeds and drivers.
    Bench(BenchArgs),
    /// Run drivers on a DIMACS file and check them against the oracle.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: Family,
    /// Comma-separated `key=value` list, e.g. `x=256,y=256`.
    #[arg(long, default_value = "")]
    params: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value = "zdo-bits")]
    algo: AlgoId,
    /// Seconds before the run is abandoned.
    #[arg(long, default_value_t = 100.0)]
    timeout: f64,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    family: Family,
    /// One parameter set per occurrence.
    #[arg(long = "params", required = true)]
    params: Vec<String>,
    /// First seed; seeds `seed .. seed + seeds` are used.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    seeds: u64,
    /// Comma-separated drivers.
    #[arg(long, value_delimiter = ',', default_value = "pal,gor,tar,zdo,zdo-bits")]
    algo: Vec<AlgoId>,
    #[arg(long, default_value_t = 100.0)]
    timeout: f64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the aux/main pivot table instead of CSV.
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "bfm,pape,pal,tar,gor,zdo,zdo-bits")]
    algo: Vec<AlgoId>,
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_dimacs(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn timeout(secs: f64) -> Result<Duration> {
    if !(secs > 0.0) {
        bail!("--timeout must be positive");
    }
    Ok(Duration::from_secs_f64(secs))
}

fn cmd_gen(a: GenArgs) -> Result<()> {
    let params: Params = a.params.parse()?;
    let spec = GenSpec::new(a.family, params, a.seed);
    let g = spec.generate()?;
    let comment = format!("{} {} seed={}", spec.family, spec.params, spec.seed);
    emit(a.out.as_deref(), &write_dimacs_with_comment(&g, &comment))
}

fn cmd_run(a: RunArgs) -> Result<ExitCode> {
    let g = read_graph(&a.graph)?;
    let opts = RunOptions {
        deadline: Some(Instant::now() + timeout(a.timeout)?),
        ..Default::default()
    };
    let r = run(&g, a.algo, &opts);
    let name = a.graph.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let row = BenchRow::from_report("file", &name, "-", &g, &r);
    println!("{CSV_HEADER}\n{}", row.to_csv());
    Ok(ExitCode::from(match r.outcome {
        RunOutcome::Tree(_) => 0,
        RunOutcome::NegativeCycle(_) => 2,
        RunOutcome::BudgetExhausted => 3,
        RunOutcome::TimedOut => 4,
    }))
}

fn cmd_bench(a: BenchArgs) -> Result<()> {
    if a.seeds == 0 {
        bail!("--seeds must be at least 1");
    }
    let specs = a
        .params
        .iter()
        .map(|p| Ok(GenSpec::new(a.family, p.parse()?, a.seed)))
        .collect::<Result<Vec<_>>>()?;
    let cfg = BenchConfig {
        specs,
        seeds: a.seeds,
        algos: a.algo,
        timeout: Some(timeout(a.timeout)?),
        jobs: a.jobs,
    };
    let rows = bench(&cfg)?;
    let text = if a.table { pivot_table(&rows) } else { to_csv(&rows) };
    emit(a.out.as_deref(), &text)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode> {
    let g = read_graph(&a.graph)?;
    let oracle = oracle_bellman_ford(&g);
    println!("oracle: {}", oracle.label());
    let mut ok = true;
    for algo in a.algo {
        let r = run(&g, algo, &RunOptions::default());
        let verdict = match (&oracle, &r.outcome) {
            (RunOutcome::Tree(want), RunOutcome::Tree(got)) if want.dist != got.dist => {
                Err("distances differ from the oracle".to_string())
            }
            (RunOutcome::Tree(_), RunOutcome::Tree(_)) | (RunOutcome::NegativeCycle(_), RunOutcome::NegativeCycle(_)) => {
                verify_outcome(&g, &r.outcome)
            }
            _ => Err(format!("oracle reports {}", oracle.label())),
        };
        match verdict {
            Ok(()) => println!("{algo}: ok ({})", r.outcome.label()),
            Err(e) => {
                ok = false;
                println!("{algo}: FAILED ({}): {e}", r.outcome.label());
            }
        }
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Gen(a) => cmd_gen(a).map(|()| ExitCode::SUCCESS),
        Cmd::Run(a) => cmd_run(a),
        Cmd::Bench(a) => cmd_bench(a).map(|()| ExitCode::SUCCESS),
        Cmd::Verify(a) => cmd_verify(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::FAILURE
    })
}
