//! Experiment harness around the `probdom` library: ad-hoc comparisons,
//! error sweeps against an integration oracle, timing, and repeated
//! optimization runs with quality indicators.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod scenarios;

pub use error::{CliError, CliResult};

use args::Command;

/// Runs one subcommand, returning what it prints on stdout.
pub fn dispatch(command: &Command) -> CliResult<String> {
    let listing = |paths: Vec<std::path::PathBuf>| paths.iter().map(|p| format!("{}\n", p.display())).collect();
    match command {
        Command::Compare(a) => commands::compare::run(a),
        Command::ScenarioError(a) => commands::sweep::run(a).map(listing),
        Command::Timing(a) => commands::timing::run(a).map(listing),
        Command::Optimize(a) => commands::optimize::run(a).map(listing),
        Command::Metrics(a) => commands::metrics::run(a).map(|(csv, written)| match written {
            Some(path) => format!("{}\n", path.display()),
            None => csv,
        }),
    }
}
