use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "probdom", version, about = "Compare uncertain values and run dominance experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare two uncertain values given as distribution specs or sample files.
    Compare(CompareArgs),
    /// Error of each operator against the oracle over repeated comparisons.
    ScenarioError(SweepArgs),
    /// Median initialization and comparison times per operator and size.
    Timing(TimingArgs),
    /// Repeated NSGA-II runs on a benchmark problem.
    Optimize(OptimizeArgs),
    /// Median quality indicators over saved runs.
    Metrics(MetricsArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    /// `key = value` file with `[section]` headers; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct OperatorArgs {
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub omega: Option<f64>,
    #[arg(long)]
    pub quantile_steps: Option<usize>,
    #[arg(long)]
    pub pairwise_samples: Option<usize>,
    #[arg(long)]
    pub mean_threshold: Option<f64>,
    #[arg(long)]
    pub spread_threshold: Option<f64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct CompareArgs {
    /// Distribution spec such as `uniform(0,1)` or a file with one sample per line.
    pub a: String,
    pub b: String,
    #[arg(long)]
    pub op: Option<String>,
    /// `min` or `max`.
    #[arg(long)]
    pub sense: Option<String>,
    #[command(flatten)]
    pub operator: OperatorArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct SweepArgs {
    /// Scenario file; the canonical set when omitted.
    #[arg(long)]
    pub scenarios: Option<PathBuf>,
    /// Comma-separated operator ids.
    #[arg(long)]
    pub ops: Option<String>,
    /// Comma-separated sample sizes.
    #[arg(long)]
    pub sizes: Option<String>,
    #[arg(long)]
    pub repetitions: Option<usize>,
    #[arg(long)]
    pub percentile: Option<f64>,
    /// `sampled` draws N samples per value; `closed` hands the operators
    /// the distributions themselves.
    #[arg(long)]
    pub mode: Option<String>,
    /// Oracle integration cells.
    #[arg(long)]
    pub resolution: Option<usize>,
    #[command(flatten)]
    pub operator: OperatorArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct TimingArgs {
    /// Comma-separated operator ids.
    #[arg(long)]
    pub ops: Option<String>,
    /// Comma-separated sample sizes.
    #[arg(long)]
    pub sizes: Option<String>,
    #[arg(long)]
    pub iterations: Option<usize>,
    #[arg(long)]
    pub warmup: Option<usize>,
    /// Canonical scenario supplying the sampled values.
    #[arg(long)]
    pub scenario: Option<String>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct OptimizeArgs {
    #[arg(long)]
    pub problem: Option<String>,
    /// Decision variables.
    #[arg(long)]
    pub n: Option<usize>,
    /// Objectives.
    #[arg(long)]
    pub m: Option<usize>,
    /// `default` or `off`.
    #[arg(long)]
    pub noise: Option<String>,
    #[arg(long)]
    pub op: Option<String>,
    #[arg(long)]
    pub pop: Option<usize>,
    #[arg(long)]
    pub gens: Option<usize>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub runs: Option<usize>,
    #[arg(long)]
    pub divisions: Option<usize>,
    #[arg(long)]
    pub crossover_prob: Option<f64>,
    #[arg(long)]
    pub crossover_eta: Option<f64>,
    #[arg(long)]
    pub mutation_prob: Option<f64>,
    #[arg(long)]
    pub mutation_eta: Option<f64>,
    #[command(flatten)]
    pub operator: OperatorArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Default, Args)]
pub struct MetricsArgs {
    /// Run CSV files written by `optimize`.
    pub runs: Vec<PathBuf>,
    /// Reference front CSV; built from the runs' final fronts when omitted.
    #[arg(long)]
    pub reference: Option<PathBuf>,
    #[arg(long)]
    pub divisions: Option<usize>,
    #[command(flatten)]
    pub common: CommonArgs,
}
