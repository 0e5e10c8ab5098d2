use std::path::PathBuf;

use probdom::benchmarks::{registry_lookup, NoiseSpec, UncertainProblem};
use probdom::metrics::{front_to_csv, metrics_csv, median_run_selection, FrontPoint, DEFAULT_DIVISIONS};
use probdom::optimizer::{run_nsga2, OptimizerConfig, RunRecord};
use rayon::prelude::*;

use super::metrics::{evaluate, reference_from_runs, Evaluation};
use super::{keys, load_config, operator_config, out_dir, parse_operator, seed, write_file};
use crate::args::OptimizeArgs;
use crate::config::pick;
use crate::error::{CliError, CliResult};

const SECTION: &str = "optimize";

#[derive(Debug, Clone)]
pub struct OptimizeSettings {
    pub problem: UncertainProblem,
    /// `seed` is that of the first run; run `k` uses `seed + k`.
    pub optimizer: OptimizerConfig,
    pub runs: usize,
    pub divisions: usize,
}

pub struct Outcome {
    pub records: Vec<RunRecord>,
    pub reference: Vec<FrontPoint>,
    pub metrics: Evaluation,
    /// Index of the median run by final-generation epsilon.
    pub median: usize,
}

pub fn execute(s: &OptimizeSettings) -> CliResult<Outcome> {
    if s.runs == 0 {
        return Err(CliError::input("need at least one run"));
    }
    s.optimizer.validate()?;
    let records = (0..s.runs)
        .into_par_iter()
        .map(|k| {
            let cfg = OptimizerConfig { seed: s.optimizer.seed.wrapping_add(k as u64), ..s.optimizer };
            run_nsga2(&s.problem, &cfg)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let reference = reference_from_runs(&records)?;
    let metrics = evaluate(&records, &reference, s.divisions)?;
    let median = median_run_selection(&records, &reference, metrics.kind)?;
    Ok(Outcome { records, reference, metrics, median })
}

/// Writes every artifact of `outcome` into `dir`.
pub fn write(outcome: &Outcome, first_seed: u64, dir: &std::path::Path) -> CliResult<Vec<PathBuf>> {
    let mut paths = Vec::new();
    for (k, (record, rows)) in outcome.records.iter().zip(&outcome.metrics.per_run).enumerate() {
        paths.push(write_file(dir, &format!("run_{k}.csv"), &record.to_csv())?);
        paths.push(write_file(dir, &format!("metrics_run_{k}.csv"), &metrics_csv(outcome.metrics.kind, rows))?);
    }
    paths.push(write_file(dir, "reference.csv", &front_to_csv(&outcome.reference))?);
    paths.push(write_file(dir, "metrics.csv", &outcome.metrics.median_csv)?);
    let k = outcome.median;
    let eps = outcome.metrics.per_run[k].last().map_or(f64::NAN, |g| g.eps);
    let marker = format!("run,seed,{}\n{k},{},{eps}\n", outcome.metrics.kind.column(), first_seed.wrapping_add(k as u64));
    paths.push(write_file(dir, "median_run.csv", &marker)?);
    Ok(paths)
}

pub fn settings(args: &OptimizeArgs) -> CliResult<(OptimizeSettings, PathBuf)> {
    let cfg = load_config(&args.common)?;
    let own = [
        "problem", "n", "m", "noise", "op", "pop", "gens", "samples", "runs", "divisions", "crossover_prob",
        "crossover_eta", "mutation_prob", "mutation_eta",
    ];
    cfg.check_keys(SECTION, &keys(&own, true))?;

    let name = pick(args.problem.clone(), &cfg, SECTION, "problem")?.unwrap_or_else(|| "udtlz2".into());
    let mut problem = registry_lookup(&name)?;
    let n = pick(args.n, &cfg, SECTION, "n")?;
    let m = pick(args.m, &cfg, SECTION, "m")?;
    if n.is_some() || m.is_some() {
        problem = problem.clone().with_dims(n.unwrap_or(problem.n()), m.unwrap_or(problem.m()))?;
    }
    match pick(args.noise.clone(), &cfg, SECTION, "noise")?.as_deref() {
        None | Some("default") => {}
        Some("off") => problem = problem.with_noise(NoiseSpec::off())?,
        Some(other) => return Err(CliError::input(format!("noise must be `default` or `off`, got `{other}`"))),
    }

    let d = OptimizerConfig::default();
    let op = match pick(args.op.clone(), &cfg, SECTION, "op")? {
        Some(id) => parse_operator(&id)?,
        None => d.operator,
    };
    let optimizer = OptimizerConfig {
        pop_size: pick(args.pop, &cfg, SECTION, "pop")?.unwrap_or(d.pop_size),
        generations: pick(args.gens, &cfg, SECTION, "gens")?.unwrap_or(d.generations),
        samples: pick(args.samples, &cfg, SECTION, "samples")?.unwrap_or(d.samples),
        operator: op,
        operator_config: operator_config(&args.operator, &cfg, SECTION)?,
        crossover_prob: pick(args.crossover_prob, &cfg, SECTION, "crossover_prob")?.unwrap_or(d.crossover_prob),
        crossover_eta: pick(args.crossover_eta, &cfg, SECTION, "crossover_eta")?.unwrap_or(d.crossover_eta),
        mutation_prob: pick(args.mutation_prob, &cfg, SECTION, "mutation_prob")?.or(d.mutation_prob),
        mutation_eta: pick(args.mutation_eta, &cfg, SECTION, "mutation_eta")?.unwrap_or(d.mutation_eta),
        seed: seed(&args.common, &cfg, SECTION)?,
    };
    optimizer.validate()?;
    let s = OptimizeSettings {
        problem,
        optimizer,
        runs: pick(args.runs, &cfg, SECTION, "runs")?.unwrap_or(10),
        divisions: pick(args.divisions, &cfg, SECTION, "divisions")?.unwrap_or(DEFAULT_DIVISIONS),
    };
    if s.runs == 0 || s.divisions == 0 {
        return Err(CliError::input("runs and divisions must be at least 1"));
    }
    let dir = out_dir(&args.common, &cfg, SECTION)?.unwrap_or_else(|| PathBuf::from("."));
    Ok((s, dir))
}

pub fn run(args: &OptimizeArgs) -> CliResult<Vec<PathBuf>> {
    let (s, dir) = settings(args)?;
    let outcome = execute(&s)?;
    write(&outcome, s.optimizer.seed, &dir)
}
