//! Absolute error of the operators against the oracle, per scenario and
//! sample size, summarized by a high percentile over repetitions.

use std::path::PathBuf;

use probdom::compare::{Comparator, Operator, OperatorConfig, Sense, DEFAULT_RESOLUTION};
use probdom::uncertain::UncertainValue;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{keys, load_config, operator_config, out_dir, parse_operator, seed, write_file};
use crate::args::SweepArgs;
use crate::config::{pick, pick_list};
use crate::error::{CliError, CliResult};
use crate::scenarios::{Scenario, ScenarioSet};

const SECTION: &str = "scenario-error";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Operators see `N` fresh draws per value.
    Sampled,
    /// Operators see the distributions; `N` sets the quantile points and
    /// the pairwise draws.
    Closed,
}

impl std::str::FromStr for Mode {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s.trim() {
            "sampled" => Ok(Mode::Sampled),
            "closed" => Ok(Mode::Closed),
            other => Err(CliError::input(format!("mode must be `sampled` or `closed`, got `{other}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepSettings {
    pub scenarios: ScenarioSet,
    pub ops: Vec<Operator>,
    pub sizes: Vec<usize>,
    pub repetitions: usize,
    pub percentile: f64,
    pub mode: Mode,
    pub operator_config: OperatorConfig,
    pub seed: u64,
}

impl SweepSettings {
    pub fn validate(&self) -> CliResult<()> {
        if self.repetitions == 0 {
            return Err(CliError::input("repetitions must be at least 1"));
        }
        if !(self.percentile > 0.0 && self.percentile < 1.0) {
            return Err(CliError::input(format!("percentile must lie in (0, 1), got {}", self.percentile)));
        }
        if self.sizes.contains(&0) {
            return Err(CliError::input("sample sizes must be positive"));
        }
        if let Some(op) = self.ops.iter().find(|op| !op.is_probabilistic()) {
            return Err(CliError::Mismatch(format!("`{op}` yields no probability to measure an error on")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRow {
    pub scenario: String,
    pub op: Operator,
    pub n: usize,
    pub err: f64,
}

/// Nearest-rank percentile.
pub fn percentile(values: &[f64], p: f64) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let rank = ((p * v.len() as f64).ceil() as usize).clamp(1, v.len());
    v[rank - 1]
}

fn comparator(op: Operator, cfg: OperatorConfig, mode: Mode, n: usize) -> CliResult<Comparator> {
    let cfg = match mode {
        Mode::Sampled => cfg,
        Mode::Closed => OperatorConfig { quantile_steps: n, pairwise_samples: n, ..cfg },
    };
    Ok(Comparator::new(op, cfg)?)
}

/// One repetition: absolute error of every operator on shared inputs.
fn repetition(s: &Scenario, comparators: &[Option<Comparator>], n: usize, mode: Mode, rng: &mut ChaCha8Rng) -> CliResult<Vec<f64>> {
    let (a, b) = match mode {
        Mode::Sampled => (
            UncertainValue::from_draws(s.x1.sample_n(n, rng))?,
            UncertainValue::from_draws(s.x2.sample_n(n, rng))?,
        ),
        Mode::Closed => (UncertainValue::closed_form(s.x1), UncertainValue::closed_form(s.x2)),
    };
    comparators
        .iter()
        .map(|c| match c {
            Some(c) => {
                let p = c.compare_with_rng(&a, &b, Sense::Maximize, rng)?.p_greater.expect("probabilistic operator");
                Ok((p - s.oracle).abs())
            }
            None => Ok(f64::NAN),
        })
        .collect()
}

/// Operators that cannot handle a scenario's closed forms (for example
/// `uni1` on a Gaussian) are skipped, and their names returned.
pub fn error_rows(settings: &SweepSettings) -> CliResult<(Vec<ErrorRow>, Vec<String>)> {
    settings.validate()?;
    let mut skipped = Vec::new();
    let mut plans = Vec::new();
    for (si, s) in settings.scenarios.scenarios.iter().enumerate() {
        for (ni, &n) in settings.sizes.iter().enumerate() {
            let mut comps = Vec::with_capacity(settings.ops.len());
            for &op in &settings.ops {
                let c = comparator(op, settings.operator_config, settings.mode, n)?;
                let usable = settings.mode == Mode::Sampled || {
                    let (a, b) = (UncertainValue::closed_form(s.x1), UncertainValue::closed_form(s.x2));
                    let mut probe = ChaCha8Rng::seed_from_u64(0);
                    match c.compare_with_rng(&a, &b, Sense::Maximize, &mut probe) {
                        Ok(_) => true,
                        Err(e) if CliError::from(e.clone()).exit_code() == 3 => false,
                        Err(e) => return Err(e.into()),
                    }
                };
                if !usable && ni == 0 {
                    skipped.push(format!("{}/{op}", s.name));
                }
                comps.push(usable.then_some(c));
            }
            plans.push((si, ni, comps));
        }
    }

    let reps = settings.repetitions;
    let tasks: Vec<(usize, usize)> = (0..plans.len()).flat_map(|p| (0..reps).map(move |r| (p, r))).collect();
    let errors: Vec<Vec<f64>> = tasks
        .par_iter()
        .map(|&(p, r)| {
            let (si, ni, comps) = &plans[p];
            let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
            rng.set_stream((p * reps + r) as u64);
            repetition(&settings.scenarios.scenarios[*si], comps, settings.sizes[*ni], settings.mode, &mut rng)
        })
        .collect::<CliResult<_>>()?;

    let mut rows = Vec::new();
    for (p, (si, ni, comps)) in plans.iter().enumerate() {
        for (k, &op) in settings.ops.iter().enumerate() {
            if comps[k].is_none() {
                continue;
            }
            let errs: Vec<f64> = errors[p * reps..(p + 1) * reps].iter().map(|e| e[k]).collect();
            rows.push(ErrorRow {
                scenario: settings.scenarios.scenarios[*si].name.clone(),
                op,
                n: settings.sizes[*ni],
                err: percentile(&errs, settings.percentile),
            });
        }
    }
    Ok((rows, skipped))
}

/// Column name for the percentile, e.g. `err_p99`.
pub fn error_column(p: f64) -> String {
    format!("err_p{}", (p * 100.0 * 1e6).round() / 1e6)
}

pub fn to_csv(rows: &[ErrorRow], p: f64) -> String {
    let mut out = format!("scenario,op,N,{}\n", error_column(p));
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.scenario, r.op, r.n, r.err));
    }
    out
}

pub fn settings(args: &SweepArgs) -> CliResult<(SweepSettings, PathBuf)> {
    let cfg = load_config(&args.common)?;
    cfg.check_keys(SECTION, &keys(&["scenarios", "ops", "sizes", "repetitions", "percentile", "mode", "resolution"], true))?;
    let resolution = pick(args.resolution, &cfg, SECTION, "resolution")?.unwrap_or(DEFAULT_RESOLUTION);
    let scenarios = match pick(args.scenarios.clone(), &cfg, SECTION, "scenarios")? {
        Some(path) => ScenarioSet::load(&path, resolution)?,
        None => ScenarioSet::canonical(resolution)?,
    };
    let default_ops = || ["pw", "uni1", "uni2", "gauss", "hist", "emp", "reduce"].map(String::from).to_vec();
    let ops = pick_list(args.ops.as_deref(), &cfg, SECTION, "ops")?
        .unwrap_or_else(default_ops)
        .iter()
        .map(|s| parse_operator(s))
        .collect::<CliResult<_>>()?;
    let s = SweepSettings {
        scenarios,
        ops,
        sizes: pick_list(args.sizes.as_deref(), &cfg, SECTION, "sizes")?.unwrap_or_else(|| vec![100, 1_000, 10_000]),
        repetitions: pick(args.repetitions, &cfg, SECTION, "repetitions")?.unwrap_or(200),
        percentile: pick(args.percentile, &cfg, SECTION, "percentile")?.unwrap_or(0.99),
        mode: pick(args.mode.clone(), &cfg, SECTION, "mode")?.map(|m| m.parse()).transpose()?.unwrap_or(Mode::Sampled),
        operator_config: operator_config(&args.operator, &cfg, SECTION)?,
        seed: seed(&args.common, &cfg, SECTION)?,
    };
    s.validate()?;
    let dir = out_dir(&args.common, &cfg, SECTION)?.unwrap_or_else(|| PathBuf::from("."));
    Ok((s, dir))
}

/// Writes `error_sweep.csv` and `scenarios.csv`; returns the written paths.
pub fn run(args: &SweepArgs) -> CliResult<Vec<PathBuf>> {
    let (s, dir) = settings(args)?;
    let (rows, skipped) = error_rows(&s)?;
    for name in skipped {
        eprintln!("skipped {name}: operator does not accept this distribution");
    }
    Ok(vec![
        write_file(&dir, "error_sweep.csv", &to_csv(&rows, s.percentile))?,
        write_file(&dir, "scenarios.csv", &s.scenarios.to_csv())?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearest_rank() {
        let v: Vec<f64> = (1..=200).map(f64::from).collect();
        assert_eq!(percentile(&v, 0.99), 198.0);
        assert_eq!(percentile(&v, 0.5), 100.0);
        assert_eq!(percentile(&[3.0], 0.99), 3.0);
    }

    #[test]
    fn column_names() {
        assert_eq!(error_column(0.99), "err_p99");
        assert_eq!(error_column(0.995), "err_p99.5");
        assert_eq!(error_column(0.5), "err_p50");
    }
}
