use std::path::PathBuf;

use probdom::metrics::{
    build_reference_front, first_front, front_from_csv, median_metrics_csv, run_metrics, EpsilonKind, FrontPoint,
    GenerationMetrics, DEFAULT_DIVISIONS,
};
use probdom::optimizer::RunRecord;

use super::{keys, load_config, out_dir, read_file, write_file};
use crate::args::MetricsArgs;
use crate::config::pick;
use crate::error::{CliError, CliResult};

const SECTION: &str = "metrics";

/// Crisp non-dominated union of the final first fronts.
pub fn reference_from_runs(records: &[RunRecord]) -> CliResult<Vec<FrontPoint>> {
    let fronts: Vec<Vec<FrontPoint>> = records
        .iter()
        .map(|r| r.final_snapshot().map(first_front).ok_or_else(|| CliError::input("run has no generations")))
        .collect::<CliResult<_>>()?;
    Ok(build_reference_front(&fronts)?)
}

/// Multiplicative only when the reference and every first front are
/// strictly positive.
pub fn epsilon_kind(records: &[RunRecord], reference: &[FrontPoint]) -> EpsilonKind {
    let fronts = records.iter().flat_map(|r| &r.snapshots).flat_map(|s| s.first_front()).map(|e| e.mean.as_slice());
    EpsilonKind::for_points(reference.iter().map(|p| p.mean.as_slice()).chain(fronts))
}

pub struct Evaluation {
    pub kind: EpsilonKind,
    pub per_run: Vec<Vec<GenerationMetrics>>,
    /// Per-generation lower medians across runs.
    pub median_csv: String,
}

pub fn evaluate(records: &[RunRecord], reference: &[FrontPoint], divisions: usize) -> CliResult<Evaluation> {
    let first = records.first().ok_or_else(|| CliError::input("no run files given"))?;
    for r in records {
        if (r.n, r.m) != (first.n, first.m) || r.snapshots.len() != first.snapshots.len() {
            return Err(CliError::input("runs differ in dimensions or generation count"));
        }
    }
    if reference.iter().any(|p| p.mean.len() != first.m) {
        return Err(CliError::input(format!("reference front does not have {} objectives", first.m)));
    }
    let kind = epsilon_kind(records, reference);
    let per_run = records.iter().map(|r| run_metrics(r, reference, kind, divisions)).collect::<Result<Vec<_>, _>>()?;
    let median_csv = median_metrics_csv(kind, &per_run)?;
    Ok(Evaluation { kind, per_run, median_csv })
}

/// The median metrics CSV, and where it was written when an output
/// directory is configured.
pub fn run(args: &MetricsArgs) -> CliResult<(String, Option<PathBuf>)> {
    let cfg = load_config(&args.common)?;
    cfg.check_keys(SECTION, &keys(&["reference", "divisions"], false))?;
    if args.runs.is_empty() {
        return Err(CliError::input("no run files given"));
    }
    let records = args
        .runs
        .iter()
        .map(|p| RunRecord::from_csv(&read_file(p)?).map_err(|e| CliError::input(format!("{}: {e}", p.display()))))
        .collect::<CliResult<Vec<_>>>()?;
    let reference = match pick(args.reference.clone(), &cfg, SECTION, "reference")? {
        Some(p) => front_from_csv(&read_file(&p)?).map_err(|e| CliError::input(format!("{}: {e}", p.display())))?,
        None => reference_from_runs(&records)?,
    };
    let divisions = pick(args.divisions, &cfg, SECTION, "divisions")?.unwrap_or(DEFAULT_DIVISIONS);
    let eval = evaluate(&records, &reference, divisions)?;
    let written = match out_dir(&args.common, &cfg, SECTION)? {
        Some(dir) => Some(write_file(&dir, "metrics.csv", &eval.median_csv)?),
        None => None,
    };
    Ok((eval.median_csv, written))
}
