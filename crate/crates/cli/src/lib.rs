//! Command-line front end: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 success, 1 verdict failure (a check or suite found a
//! counterexample), 2 usage error, 3 resource limit.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use graph_matroids::families::FamilySpec;
use graph_matroids::graph::io::parse_edge_list;
use graph_matroids::graph::Graph;
use graph_matroids::matroid::Oracle;
use graph_matroids::Error;

mod commands;
pub mod report;
pub mod suites;

pub use report::{Report, Table, Verdict};

#[derive(Parser, Debug)]
#[command(
    name = "gmf",
    version,
    about = "Graph matroid families: rank, rigidity, connectivity and reconstruction checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for parallel searches.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    /// Leave the wall time out of the report, so output is byte-identical
    /// across runs.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArg {
    /// Family spec, e.g. `graphic` or `count:k=2,l=3`.
    #[arg(long)]
    pub family: String,
}

#[derive(Args, Debug, Clone)]
pub struct GraphArgs {
    #[command(flatten)]
    pub family: FamilyArg,
    /// Edge-list file: one `u v` pair per line, `#` comments.
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rank of the graph's edge set and a greedy basis.
    Rank(GraphArgs),
    /// Whether the graph is rigid in the family.
    Rigid(GraphArgs),
    /// All circuits of the graph's matroid.
    Circuits {
        #[command(flatten)]
        target: GraphArgs,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Edges in no circuit.
    Bridges(GraphArgs),
    /// Closure of `--subset` inside the graph, or of the whole graph inside
    /// the complete graph on its vertices.
    Closure {
        #[command(flatten)]
        target: GraphArgs,
        #[arg(long)]
        subset: Option<PathBuf>,
    },
    /// Dimensionality, threshold and rank sequence from small complete graphs.
    Profile {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
    },
    /// Limit rank of a bounded family and its small degree-one circuit.
    BoundedRank(FamilyArg),
    /// Vertical connectivity of the graph's matroid.
    Vconn {
        #[command(flatten)]
        target: GraphArgs,
        /// Look for a separation with exactly this parameter instead.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Vertex connectivity of the graph.
    Gconn {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Independence in a union family, with a certifying partition.
    UnionCheck(GraphArgs),
    /// Whether every matroid isomorphism from the graph is induced by a graph
    /// isomorphism, over hosts with up to `--extra` more vertices.
    Reconstruct {
        #[command(flatten)]
        target: GraphArgs,
        #[arg(long, default_value_t = 2)]
        extra: usize,
    },
    /// Two non-isomorphic graphs reached by moving a bridge.
    BridgeWitness(GraphArgs),
    /// Matroid axioms on `K_nmax` and family axioms on random graphs.
    CheckAxioms {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a named experiment suite.
    Experiment(suites::SuiteArgs),
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Limit(String),
    Verdict(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Verdict(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Limit(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Limit(m) | Failure::Verdict(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::ResourceLimit(_) => Failure::Limit(e.to_string()),
            Error::Precondition(_) => Failure::Verdict(e.to_string()),
            Error::InvalidArgument(_) | Error::Parse { .. } => Failure::Usage(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn parse_family(text: &str) -> CliResult<(FamilySpec, Oracle)> {
    let spec: FamilySpec = text.trim().parse().map_err(|e: Error| Failure::Usage(format!("--family {text:?}: {e}")))?;
    let oracle = Oracle::from_spec(&spec)?;
    Ok((spec, oracle))
}

pub fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Parses `argv` (program name first), runs one subcommand and renders its
/// report.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let result = run(&cli);
    match result {
        Ok(report) => {
            let code = if report.verdict == Some(Verdict::Fail) { 1 } else { 0 };
            let stdout = if cli.json { report.to_json() } else { report.to_text() };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(f) => {
            let stdout = if cli.json {
                let body = serde_json::json!({
                    "tool": report::TOOL,
                    "version": report::VERSION,
                    "error": f.message(),
                    "exit_code": f.code(),
                });
                format!("{}\n", serde_json::to_string_pretty(&body).expect("errors serialize"))
            } else {
                String::new()
            };
            Outcome { code: f.code(), stdout, stderr: format!("error: {}\n", f.message()) }
        }
    }
}

fn run(cli: &Cli) -> CliResult<Report> {
    if cli.jobs == 0 {
        return Err(Failure::Usage("--jobs must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| Failure::Usage(format!("cannot start {} worker threads: {e}", cli.jobs)))?;
    let start = Instant::now();
    let mut report = pool.install(|| commands::dispatch(&cli.command))?;
    if !cli.no_timing {
        report.wall_time_s = Some((start.elapsed().as_secs_f64() * 1000.0).round() / 1000.0);
    }
    Ok(report)
}
