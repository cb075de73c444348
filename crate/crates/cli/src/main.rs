//! `wlpairs`: generate, audit and score graph-pair benchmarks.
//!
//! Exit codes: 0 success, 2 bad input, 3 resource limit or short source
//! pool, 1 internal fault. `WLPAIRS_WORKERS` sets the worker count.

mod error;
mod evaluate;
mod generate;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser)]
#[command(name = "wlpairs", version, about = "Graph-pair benchmark toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build graphs or audited pair files.
    #[command(subcommand)]
    Generate(GenerateCmd),
    /// Check graph families or pair audits.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Run a non-neural method over a pair file.
    Distinguish(DistinguishArgs),
    /// Score an embedding file with the paired T² test.
    Rpc(RpcArgs),
    /// Best-of-seeds reduction over rpc verdict files.
    ReduceSeeds(ReduceArgs),
    /// Node, edge and diameter histograms of a pair file.
    Stats(StatsArgs),
}

#[derive(Subcommand)]
pub enum GenerateCmd {
    /// One circulant skip-link graph.
    Csl {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One CFI graph over a graph6 backbone.
    Cfi {
        #[arg(long)]
        backbone: String,
        #[arg(long)]
        twist: bool,
        /// Backbone edge carrying the twist.
        #[arg(long, default_value_t = 0)]
        twist_edge: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// All graphs on `n` nodes up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Audited pairs of one category (or `all`), written to
    /// `<out>.g6` and `<out>.json`.
    Category(CategoryArgs),
}

#[derive(Args)]
pub struct CategoryArgs {
    /// basic, regular-simple, srg, 4vc, drg, extension, cfi or all.
    pub category: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    #[arg(long, default_value_t = 9)]
    pub regular_max_n: usize,
    #[arg(long, default_value_t = 7)]
    pub cfi_max_backbone: usize,
    /// Output path prefix.
    #[arg(long)]
    pub out: PathBuf,
    /// Extra graph6 graphs for the SRG, 4VC and DRG pools.
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    #[arg(long)]
    pub no_builtin_catalog: bool,
    /// graph6 stream replacing the internal enumeration for collision search.
    #[arg(long)]
    pub collision_source: Option<PathBuf>,
    #[arg(long)]
    pub allow_shortfall: bool,
    /// Also write `<out>.perm.csv` for an external model runner.
    #[arg(long)]
    pub emit_permutations: bool,
    #[arg(long, default_value_t = 32)]
    pub copies: usize,
    #[arg(long, default_value_t = 0)]
    pub groups: usize,
}

#[derive(Subcommand)]
pub enum VerifyCmd {
    /// Regularity certificate of every graph in a graph6 file.
    Graphs {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute every pair's audit and compare with the sidecar.
    Pairs {
        file: PathBuf,
        #[arg(long)]
        sidecar: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
pub struct DistinguishArgs {
    /// 1wl, kwl:<k>, kfwl:<k>, s3, s4, n1, n2 or m1.
    #[arg(long)]
    pub method: String,
    #[arg(long)]
    pub pairs: PathBuf,
    #[arg(long)]
    pub sidecar: Option<PathBuf>,
    #[arg(long)]
    pub max_iterations: Option<usize>,
    /// Per-pair verdict CSV.
    #[arg(long)]
    pub verdicts: Option<PathBuf>,
    /// Aggregated report CSV.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum RpcMode {
    Rpc,
    Rapc,
}

#[derive(Args)]
pub struct RpcArgs {
    #[arg(long)]
    pub embeddings: PathBuf,
    #[arg(long, default_value_t = 32)]
    pub q: usize,
    #[arg(long, default_value_t = 0.95)]
    pub alpha: f64,
    /// Fixed threshold instead of the F-quantile one.
    #[arg(long)]
    pub threshold: Option<f64>,
    #[arg(long, value_enum, default_value_t = RpcMode::Rpc)]
    pub mode: RpcMode,
    /// Null groups per graph (rapc).
    #[arg(long, default_value_t = 1)]
    pub p: usize,
    /// Verdict CSV; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct ReduceArgs {
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    #[arg(long)]
    pub sidecar: Option<PathBuf>,
    /// Label for the report's method column.
    #[arg(long, default_value = "model")]
    pub method: String,
    #[arg(long)]
    pub verdicts: Option<PathBuf>,
    /// Report CSV; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct StatsArgs {
    pub pairs: PathBuf,
    #[arg(long)]
    pub sidecar: Option<PathBuf>,
    /// Histogram CSV; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn init_workers() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("WLPAIRS_WORKERS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Input(format!("WLPAIRS_WORKERS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::Internal(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    init_workers()?;
    match cli.command {
        Command::Generate(cmd) => generate::run(cmd),
        Command::Verify(cmd) => generate::verify(cmd),
        Command::Distinguish(args) => evaluate::distinguish(args),
        Command::Rpc(args) => evaluate::rpc(args),
        Command::ReduceSeeds(args) => evaluate::reduce_seeds(args),
        Command::Stats(args) => evaluate::stats(args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
