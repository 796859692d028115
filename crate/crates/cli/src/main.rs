//! `forcelab` — zero forcing, PSD forcing, propagation time, and throttling
//! from the command line.
//!
//! Subcommands:
//!
//! * `compute` — forcing number, propagation time, or (weighted) throttling
//!   value for each input graph, as JSON or TSV records.
//! * `verify` — run a named claim suite (closed forms vs. exact search,
//!   census agreement, monotonicity samples) and report PASS/FAIL lines.
//! * `classify` — structural membership in the extreme throttling classes.
//! * `table` — tabulate a graph family: formula value next to a certified
//!   witness, optionally cross-checked against exact search.
//! * `gen` — emit graphs from the built-in generators.
//!
//! Exit codes: `0` success, `1` a verified claim or witness check failed,
//! `2` input or usage error. Output is deterministic byte-for-byte unless
//! `--timing` is given. Set `FORCELAB_THREADS` to pin the worker count
//! (results never depend on it).

mod classify;
mod compute;
mod gen;
mod input;
mod report;
mod table;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// A command failure, carrying the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed input, arguments, or IO trouble (exit 2).
    Input(String),
    /// A claim or witness failed verification (exit 1).
    Verification(String),
}

impl CliError {
    fn input(msg: impl Into<String>) -> CliError {
        CliError::Input(msg.into())
    }
}

pub type CliResult = Result<(), CliError>;

#[derive(Parser)]
#[command(
    name = "forcelab",
    version,
    about = "Zero forcing, PSD forcing, propagation time, and throttling on small graphs",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a forcing invariant for each input graph
    Compute(ComputeArgs),
    /// Run a claim suite and report PASS/FAIL per claim
    Verify(VerifyArgs),
    /// Decide membership in the extreme throttling classes
    Classify(ClassifyArgs),
    /// Tabulate a family: closed form next to a certified witness
    Table(TableArgs),
    /// Emit graphs from the built-in generators
    Gen(GenArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    /// Standard color change rule
    Std,
    /// Positive semidefinite color change rule
    Psd,
}

impl RuleArg {
    pub fn rule(self) -> forcelab_core::Rule {
        match self {
            RuleArg::Std => forcelab_core::Rule::Standard,
            RuleArg::Psd => forcelab_core::Rule::Psd,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RuleArg::Std => "std",
            RuleArg::Psd => "psd",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WhatArg {
    /// Propagation time (of --set, or of the best minimum forcing set)
    Pt,
    /// Zero forcing number Z or Z₊
    Z,
    /// Throttling value ω·|S| + pt(G; S), minimized or evaluated at --set
    Throttle,
}

impl WhatArg {
    pub fn name(self) -> &'static str {
        match self {
            WhatArg::Pt => "pt",
            WhatArg::Z => "z",
            WhatArg::Throttle => "throttle",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    /// Sniff: a leading digit means an edge list, anything else graph6
    Auto,
    /// One graph6 string per line
    Graph6,
    /// A single "n m" header plus "u v" lines
    Edgelist,
}

#[derive(Args)]
pub struct ComputeArgs {
    /// Input file (graph6 lines or an edge list), or '-' for stdin
    #[arg(default_value = "-")]
    pub input: String,
    /// Color change rule
    #[arg(long, value_enum, default_value_t = RuleArg::Psd)]
    pub rule: RuleArg,
    /// Quantity to compute
    #[arg(long, value_enum, default_value_t = WhatArg::Throttle)]
    pub what: WhatArg,
    /// Weight ω for the throttling objective, an integer or fraction "a/b"
    #[arg(long)]
    pub omega: Option<String>,
    /// Evaluate this start set (comma-separated vertices) instead of searching
    #[arg(long)]
    pub set: Option<String>,
    /// Input format
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    pub format: FormatArg,
    /// Largest graph order the exact search accepts
    #[arg(long, default_value_t = 20)]
    pub max_n: usize,
    /// Stop the search after examining this many candidate sets
    #[arg(long)]
    pub budget: Option<u64>,
    /// Emit tab-separated rows instead of JSON
    #[arg(long)]
    pub tsv: bool,
    /// Include wall-clock timings (sacrifices byte-for-byte determinism)
    #[arg(long)]
    pub timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    /// PSD path throttling: search to n = 20, certified witnesses to n = 60
    Paths,
    /// PSD cycle throttling: search to n = 18, certified witnesses to n = 60
    Cycles,
    /// Standard cycle throttling: search to n = 16 plus published spot rows
    Stdcycles,
    /// Binary and regular trees, plus subtree monotonicity on random trees
    Trees,
    /// Classifier verdicts vs. exact search on a connected-graph corpus
    Census,
    /// Weighted throttling lower bounds on paths, cycles, and a regular tree
    Weighted,
    /// Growth and distance inequalities on random (graph, set) pairs
    Lemma,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Which claim suite to run
    #[arg(long, value_enum)]
    pub suite: SuiteArg,
    /// graph6 corpus of every connected graph on 1..=7 vertices (census suite)
    #[arg(long, required_if_eq("suite", "census"))]
    pub corpus: Option<std::path::PathBuf>,
}

#[derive(Args)]
pub struct ClassifyArgs {
    /// Input file (graph6 lines or an edge list), or '-' for stdin
    #[arg(default_value = "-")]
    pub input: String,
    /// Input format
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    pub format: FormatArg,
    /// Emit tab-separated rows instead of JSON
    #[arg(long)]
    pub tsv: bool,
    /// Include wall-clock timings (sacrifices byte-for-byte determinism)
    #[arg(long)]
    pub timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// Paths Pₙ under the PSD rule
    Path,
    /// Cycles Cₙ under the PSD rule
    Cycle,
    /// Cycles Cₙ under the standard rule
    Stdcycle,
    /// Full binary trees of height h
    Binarytree,
    /// The regular tree T(Δ, h), parameterized by height h
    Tdh,
}

#[derive(Args)]
pub struct TableArgs {
    /// Family to tabulate
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Inclusive parameter range "a..b", or a single value "a"
    #[arg(long)]
    pub range: String,
    /// Degree Δ for the tdh family
    #[arg(long, default_value_t = 3)]
    pub delta: usize,
    /// Also run the exact search on rows with n at most this cap
    #[arg(long, default_value_t = 0)]
    pub check_upto: usize,
}

#[derive(Args)]
pub struct GenArgs {
    /// Family: path, cycle, complete, edgeless, star, complete-bipartite,
    /// binary-tree, tdh, grid, house, double-diamond, census-connected,
    /// census-all, trees
    pub family: String,
    /// Family parameters (see --help for arities)
    pub params: Vec<usize>,
    /// Emit edge lists instead of graph6
    #[arg(long)]
    pub edgelist: bool,
}

fn init_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("FORCELAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .parse()
        .map_err(|_| CliError::input(format!("FORCELAB_THREADS must be a number, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::input(format!("failed to build thread pool: {e}")))
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Compute(args) => compute::run(&args),
        Command::Verify(args) => verify::run(&args),
        Command::Classify(args) => classify::run(&args),
        Command::Table(args) => table::run(&args),
        Command::Gen(args) => gen::run(&args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = init_threads().and_then(|()| run(cli));
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verification(msg)) => {
            eprintln!("forcelab: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("forcelab: {msg}");
            ExitCode::from(2)
        }
    }
}
