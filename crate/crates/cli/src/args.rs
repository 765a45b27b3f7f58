use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "mems", version, about = "Multiple entropy measures of multipartite quantum states")]
pub struct Cli {
    /// Worker threads for subset evaluation.
    #[arg(long, global = true, env = "MEMS_THREADS")]
    pub threads: Option<usize>,

    /// Fail with exit code 3 instead of warning about expensive sizes.
    #[arg(long, global = true)]
    pub strict: bool,

    /// Site count above which a workload warning is raised.
    #[arg(long, global = true, default_value_t = mems_core::mems::DEFAULT_SITE_CAP)]
    pub site_cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// MEMS vector of one state.
    Compute(ComputeArgs),
    /// S_i over a state family, as CSV.
    Sweep(SweepArgs),
    /// Check both transformation directions between two states.
    Compare(CompareArgs),
    /// Weight-averaged MEMS of an ensemble file.
    Ensemble(EnsembleArgs),
    /// Hill-climb for a state maximizing one component.
    Search(SearchArgs),
    /// Compare the best S_i found with its Schmidt-rank ceiling.
    Saturate(SaturateArgs),
    /// Write a named state to a state file.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct StateArgs {
    /// Named state: ghz, w, cluster, phi4, bell-product, m4, product.
    #[arg(long, conflicts_with = "state_file", required_unless_present = "state_file")]
    pub state: Option<String>,

    /// Number of sites (qubits) for the named state.
    #[arg(long)]
    pub n: Option<usize>,

    /// Site dimensions for `product`, e.g. 2,3,4.
    #[arg(long, value_delimiter = ',')]
    pub dims: Option<Vec<usize>>,

    /// JSON state file.
    #[arg(long)]
    pub state_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub state: StateArgs,

    /// Also report S_E, the product of single-site entropies.
    #[arg(long)]
    pub entropy_product: bool,

    /// Print every subset entropy.
    #[arg(long)]
    pub detail: bool,

    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Family: w, ghz or cluster.
    #[arg(long)]
    pub state: String,

    /// Site count or inclusive range `lo:hi`.
    #[arg(long)]
    pub n: String,

    /// Components as a list `1,2,3` or range `1:10`; all by default.
    #[arg(long)]
    pub components: Option<String>,

    /// CSV destination; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Closed-form mismatches above this are reported on stderr.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// First state: `name:n`, `name` or a state file path.
    pub a: String,
    /// Second state, same forms.
    pub b: String,

    #[arg(long, default_value_t = mems_core::mems::DEFAULT_COMPARE_TOLERANCE)]
    pub tol: f64,

    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct EnsembleArgs {
    #[arg(long)]
    pub file: PathBuf,

    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Number of qubits; ignored when --dims is given.
    #[arg(long, required_unless_present = "dims")]
    pub n: Option<usize>,

    #[arg(long, value_delimiter = ',')]
    pub dims: Option<Vec<usize>>,

    #[arg(long)]
    pub component: usize,

    #[arg(long, default_value_t = 20)]
    pub restarts: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, default_value_t = 20_000)]
    pub max_iters: usize,

    #[arg(long, default_value_t = 0.2)]
    pub step_init: f64,

    #[arg(long, default_value_t = 1e-6)]
    pub step_min: f64,

    /// Write the best state here.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Write the winning restart's accepted moves as CSV.
    #[arg(long)]
    pub trace: Option<PathBuf>,

    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SaturateArgs {
    #[arg(long, required_unless_present = "dims")]
    pub n: Option<usize>,

    #[arg(long, value_delimiter = ',')]
    pub dims: Option<Vec<usize>>,

    #[arg(long)]
    pub component: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub state: StateArgs,

    /// Destination; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
