//! The `metdim` command line: solve, verify, gen and bench.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::bench::{run_suite, to_csv, BenchSuite};
use crate::classify::{classify, GraphClass};
use crate::ditree::{metric_basis_ditree, weak_metric_basis_ditree};
use crate::generate::{random_instance, InstanceKind};
use crate::graph::{DiGraph, Vertex};
use crate::modwidth::metric_dimension_modwidth;
use crate::oracle::{min_resolving_set_with_cap, DEFAULT_CAP};
use crate::reduction::{build_gadget, builtin_instance, VcInstance};
use crate::resolve::{is_resolving, Basis, Mode, Resolution};
use crate::unicyclic::metric_basis_unicyclic;

/// Largest graph `auto` hands to the modular-width solver.
pub const MODWIDTH_CAP: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "metdim", version, about = "Strong and weak metric dimension of digraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a metric basis and print a JSON report.
    Solve(SolveArgs),
    /// Check whether a vertex set resolves a graph.
    Verify(VerifyArgs),
    /// Write a seeded random instance or a reduction gadget.
    Gen(GenArgs),
    /// Time the linear-time solvers and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Auto,
    Ditree,
    Unicyclic,
    Modwidth,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strong,
    Weak,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Strong => Mode::Strong,
            ModeArg::Weak => Mode::Weak,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Graph file; `-` or absent reads stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "auto")]
    pub algorithm: Algorithm,
    #[arg(long, value_enum, default_value = "strong")]
    pub mode: ModeArg,
    /// Vertex cap for the exhaustive solver.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Whitespace-separated vertex ids.
    #[arg(long)]
    pub basis: PathBuf,
    #[arg(long, value_enum, default_value = "strong")]
    pub mode: ModeArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenClass {
    Ditree,
    Unicyclic,
    Dag,
    Digraph,
    Reduction,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub class: GenClass,
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 0.3)]
    pub digon_prob: f64,
    #[arg(long, default_value_t = 0.3)]
    pub arc_prob: f64,
    /// Cycle length for `unicyclic`; defaults to `min(n, 5)`.
    #[arg(long)]
    pub cycle_len: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Built-in cubic instance for `reduction`: `k4` or `prism`.
    #[arg(long, default_value = "k4")]
    pub instance: String,
    /// Cubic instance file for `reduction`, overriding `--instance`.
    #[arg(long)]
    pub vc_input: Option<PathBuf>,
    /// Where to write the cubic instance alongside a gadget.
    #[arg(long)]
    pub vc_output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, default_value = "ditree")]
    pub suite: String,
    /// Comma-separated sizes; empty gives a header-only table.
    #[arg(long, value_parser = parse_sizes, default_value = "1000,10000,100000")]
    pub sizes: SizeList,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Verify every cell exactly, whatever its size.
    #[arg(long)]
    pub full_verify: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Comma-separated vertex counts. The empty string is an empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeList(pub Vec<usize>);

fn parse_sizes(s: &str) -> Result<SizeList, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("bad size {t:?}")))
        .collect::<Result<_, _>>()
        .map(SizeList)
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    CapExceeded(String),
    #[error("{0}")]
    ClassMismatch(String),
    #[error("emitted basis {0:?} does not resolve the graph")]
    Unverified(Vec<Vertex>),
    #[error("io: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::CapExceeded(_) | CliError::Io(_) => 2,
            CliError::ClassMismatch(_) | CliError::Unverified(_) => 3,
        }
    }
}

/// Fields are declared alphabetically so the JSON keys come out sorted.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub algorithm: Algorithm,
    pub basis: Vec<Vertex>,
    pub class: String,
    pub input: String,
    pub metric_dimension: usize,
    pub mode: Mode,
    pub verified: bool,
    pub wall_ms: f64,
}

fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn load_graph(args: &InputArgs) -> Result<(DiGraph, String), CliError> {
    let text = read_input(args.input.as_deref())?;
    let g = match args.format {
        Format::Edgelist => DiGraph::from_edge_list(&text),
        Format::Dot => DiGraph::from_dot(&text),
    }
    .map_err(|e| CliError::Input(e.to_string()))?;
    let name = args
        .input
        .as_ref()
        .map_or_else(|| "-".to_string(), |p| p.display().to_string());
    Ok((g, name))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn mismatch(alg: &str, class: &GraphClass) -> CliError {
    CliError::ClassMismatch(format!("{alg} solver needs a different class, input is {class}"))
}

fn run_exact(g: &DiGraph, mode: Mode, cap: usize) -> Result<Basis, CliError> {
    min_resolving_set_with_cap(g, mode, cap)
        .map(|r| r.witness)
        .map_err(|e| CliError::CapExceeded(e.to_string()))
}

fn run_modwidth(g: &DiGraph, mode: Mode) -> Result<Basis, CliError> {
    metric_dimension_modwidth(g, mode)
        .map(|r| r.basis)
        .map_err(|e| CliError::Input(e.to_string()))
}

/// Picks and runs a solver. Returns the algorithm actually used.
pub fn solve_graph(
    g: &DiGraph,
    algorithm: Algorithm,
    mode: Mode,
    cap: usize,
) -> Result<(Algorithm, GraphClass, Basis), CliError> {
    let class = classify(g);
    let chosen = match algorithm {
        Algorithm::Auto => match (&class, mode) {
            (GraphClass::DiTree, _) => Algorithm::Ditree,
            (GraphClass::OrientedUnicyclic { .. }, Mode::Strong) => Algorithm::Unicyclic,
            _ if g.n() <= MODWIDTH_CAP => Algorithm::Modwidth,
            _ if g.n() <= cap => Algorithm::Exact,
            _ => {
                return Err(CliError::CapExceeded(format!(
                    "no solver for a {class} graph with {} vertices (modwidth cap {MODWIDTH_CAP}, exact cap {cap})",
                    g.n()
                )))
            }
        },
        a => a,
    };
    let basis = match chosen {
        Algorithm::Ditree => {
            let r = match mode {
                Mode::Strong => metric_basis_ditree(g),
                Mode::Weak => weak_metric_basis_ditree(g),
            };
            r.map_err(|_| mismatch("ditree", &class))?
        }
        Algorithm::Unicyclic => {
            if mode == Mode::Weak {
                return Err(CliError::Input("the unicyclic solver has no weak mode".into()));
            }
            metric_basis_unicyclic(g).map_err(|_| mismatch("unicyclic", &class))?
        }
        Algorithm::Modwidth => run_modwidth(g, mode)?,
        Algorithm::Exact | Algorithm::Auto => run_exact(g, mode, cap)?,
    };
    Ok((chosen, class, basis))
}

pub fn cmd_solve(args: &SolveArgs) -> Result<SolveReport, CliError> {
    let (g, input) = load_graph(&args.input)?;
    let mode = Mode::from(args.mode);
    let start = Instant::now();
    let (algorithm, class, basis) = solve_graph(&g, args.algorithm, mode, args.cap)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let verified = is_resolving(&g, &basis.vertices, mode).is_resolved();
    let report = SolveReport {
        algorithm,
        metric_dimension: basis.len(),
        basis: basis.vertices.clone(),
        class: class.name().to_string(),
        input,
        mode,
        verified,
        wall_ms,
    };
    let json = serde_json::to_string(&report).expect("report serializes");
    emit(args.output.as_deref(), &format!("{json}\n"))?;
    if !verified {
        return Err(CliError::Unverified(basis.vertices));
    }
    Ok(report)
}

/// Returns the resolver verdict; the caller maps it to exit 0 or 1.
pub fn cmd_verify(args: &VerifyArgs) -> Result<Resolution, CliError> {
    let (g, _) = load_graph(&args.input)?;
    let text = fs::read_to_string(&args.basis)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", args.basis.display())))?;
    let mut basis = Vec::new();
    for tok in text.split_whitespace() {
        let v: Vertex = tok
            .parse()
            .map_err(|_| CliError::Input(format!("bad vertex id {tok:?}")))?;
        if v >= g.n() {
            return Err(CliError::Input(format!("vertex {v} out of range for n = {}", g.n())));
        }
        basis.push(v);
    }
    let res = is_resolving(&g, &basis, args.mode.into());
    let line = match res {
        Resolution::Resolved => "pass".to_string(),
        Resolution::Unresolved(u, v) => format!("fail: {u} and {v} have equal distance vectors"),
        Resolution::Unreachable(v) => format!("fail: {v} is unreachable from the set"),
    };
    println!("{line}");
    Ok(res)
}

pub fn cmd_gen(args: &GenArgs) -> Result<String, CliError> {
    let g = match args.class {
        GenClass::Reduction => {
            let inst = match &args.vc_input {
                Some(p) => VcInstance::parse(&read_input(Some(p))?)
                    .map_err(|e| CliError::Input(e.to_string()))?,
                None => builtin_instance(&args.instance).ok_or_else(|| {
                    CliError::Input(format!("unknown instance {:?} (k4 or prism)", args.instance))
                })?,
            };
            if let Some(p) = &args.vc_output {
                fs::write(p, inst.to_text())?;
            }
            build_gadget(&inst).0
        }
        class => {
            let kind = match class {
                GenClass::Ditree => InstanceKind::DiTree {
                    digon_prob: args.digon_prob,
                },
                GenClass::Unicyclic => InstanceKind::OrientedUnicyclic {
                    cycle_len: args.cycle_len.unwrap_or(args.n.min(5)),
                },
                GenClass::Dag => InstanceKind::Dag {
                    arc_prob: args.arc_prob,
                },
                _ => InstanceKind::Digraph {
                    arc_prob: args.arc_prob,
                },
            };
            random_instance(kind, args.n, args.seed).map_err(|e| CliError::Input(e.to_string()))?
        }
    };
    let text = match args.format {
        Format::Edgelist => g.to_edge_list(),
        Format::Dot => g.to_dot(),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(text)
}

pub fn cmd_bench(args: &BenchArgs) -> Result<String, CliError> {
    let suite: BenchSuite = args
        .suite
        .parse()
        .map_err(|e: crate::bench::BenchError| CliError::Input(e.to_string()))?;
    let rows = run_suite(suite, &args.sizes.0, args.seed, args.full_verify)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let csv = to_csv(&rows);
    emit(args.output.as_deref(), &csv)?;
    if rows.iter().any(|r| !r.verified) {
        return Err(CliError::Unverified(Vec::new()));
    }
    Ok(csv)
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = match &cli.command {
        Command::Solve(a) => cmd_solve(a).map(|_| 0),
        Command::Verify(a) => cmd_verify(a).map(|r| if r.is_resolved() { 0 } else { 1 }),
        Command::Gen(a) => cmd_gen(a).map(|_| 0),
        Command::Bench(a) => cmd_bench(a).map(|_| 0),
    };
    result.unwrap_or_else(|e| {
        eprintln!("metdim: {e}");
        e.exit_code()
    })
}
