//! Median initialization and comparison times.
//!
//! Runs on the calling thread only. Each timed sample covers a batch of
//! calls long enough to dwarf the clock resolution; the reported figure is
//! the median per-call time over all samples.

use std::hint::black_box;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use probdom::compare::{Comparator, Operator, OperatorConfig, Sense, DEFAULT_RESOLUTION};
use probdom::uncertain::{DistributionSpec, UncertainValue};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{keys, load_config, out_dir, parse_operator, seed, write_file};
use crate::args::TimingArgs;
use crate::config::{pick, pick_list};
use crate::error::{CliError, CliResult};
use crate::scenarios::ScenarioSet;

const SECTION: &str = "timing";
const BATCH_TARGET: Duration = Duration::from_micros(20);

#[derive(Debug, Clone)]
pub struct TimingSettings {
    pub ops: Vec<Operator>,
    pub sizes: Vec<usize>,
    pub iterations: usize,
    pub warmup: usize,
    pub x1: DistributionSpec,
    pub x2: DistributionSpec,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimingRow {
    pub op: Operator,
    pub n: usize,
    pub init_us: f64,
    pub cmp_us: f64,
}

/// Median microseconds per call of `f`.
pub fn median_per_call<T>(iterations: usize, warmup: usize, mut f: impl FnMut() -> T) -> f64 {
    let mut batch = 1usize;
    loop {
        let start = Instant::now();
        for _ in 0..batch {
            black_box(f());
        }
        if start.elapsed() >= BATCH_TARGET || batch >= 1 << 20 {
            break;
        }
        batch *= 2;
    }
    for _ in 0..warmup {
        for _ in 0..batch {
            black_box(f());
        }
    }
    let mut per_call: Vec<f64> = (0..iterations.max(1))
        .map(|_| {
            let start = Instant::now();
            for _ in 0..batch {
                black_box(f());
            }
            start.elapsed().as_secs_f64() * 1e6 / batch as f64
        })
        .collect();
    per_call.sort_by(f64::total_cmp);
    per_call[(per_call.len() - 1) / 2]
}

pub fn measure(s: &TimingSettings) -> CliResult<Vec<TimingRow>> {
    if s.sizes.contains(&0) {
        return Err(CliError::input("sample sizes must be positive"));
    }
    let mut rows = Vec::new();
    for &op in &s.ops {
        let comparator = Comparator::new(op, OperatorConfig::default())?;
        for &n in &s.sizes {
            let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
            let raw_a = s.x1.sample_n(n, &mut rng);
            let raw_b = s.x2.sample_n(n, &mut rng);
            let pa = comparator.prepare(&UncertainValue::from_draws(raw_a.clone())?)?;
            let pb = comparator.prepare(&UncertainValue::from_draws(raw_b)?)?;
            comparator.report(&pa, &pb, Sense::Minimize)?;

            let init_us = median_per_call(s.iterations, s.warmup, || {
                let v = UncertainValue::from_draws(black_box(&raw_a).clone()).expect("valid draws");
                comparator.prepare(&v).expect("prepared once already")
            });
            let cmp_us = median_per_call(s.iterations, s.warmup, || {
                comparator.report(black_box(&pa), black_box(&pb), Sense::Minimize).expect("compared once already")
            });
            rows.push(TimingRow { op, n, init_us, cmp_us });
        }
    }
    Ok(rows)
}

pub fn to_csv(rows: &[TimingRow]) -> String {
    let mut out = String::from("op,N,init_us,cmp_us\n");
    for r in rows {
        out.push_str(&format!("{},{},{:.6},{:.6}\n", r.op, r.n, r.init_us, r.cmp_us));
    }
    out
}

fn cpu_model() -> String {
    std::fs::read_to_string("/proc/cpuinfo")
        .ok()
        .and_then(|info| {
            info.lines()
                .find(|l| l.starts_with("model name"))
                .and_then(|l| l.split_once(':'))
                .map(|(_, v)| v.trim().to_string())
        })
        .unwrap_or_else(|| "unknown".into())
}

/// Sidecar describing where and how the timings were taken.
pub fn machine_info(s: &TimingSettings) -> String {
    let cpus = std::thread::available_parallelism().map_or(0, |n| n.get());
    let profile = if cfg!(debug_assertions) { "debug" } else { "release" };
    format!(
        "os = {}\narch = {}\ncpu = {}\nlogical_cpus = {cpus}\nthreads_used = 1\nbuild = {profile}\niterations = {}\nwarmup = {}\nbatch_target_us = {}\nx1 = {}\nx2 = {}\n",
        std::env::consts::OS,
        std::env::consts::ARCH,
        cpu_model(),
        s.iterations,
        s.warmup,
        BATCH_TARGET.as_micros(),
        s.x1,
        s.x2,
    )
}

pub fn settings(args: &TimingArgs) -> CliResult<(TimingSettings, PathBuf)> {
    let cfg = load_config(&args.common)?;
    cfg.check_keys(SECTION, &keys(&["ops", "sizes", "iterations", "warmup", "scenario"], false))?;
    let ops = pick_list(args.ops.as_deref(), &cfg, SECTION, "ops")?
        .unwrap_or_else(|| Operator::ALL_IDS.map(String::from).to_vec())
        .iter()
        .map(|s| parse_operator(s))
        .collect::<CliResult<_>>()?;
    let name = pick(args.scenario.clone(), &cfg, SECTION, "scenario")?.unwrap_or_else(|| "uniform-uniform".into());
    let set = ScenarioSet::canonical(DEFAULT_RESOLUTION / 100)?;
    let scenario = set.get(&name).ok_or_else(|| CliError::input(format!("unknown scenario `{name}`")))?;
    let s = TimingSettings {
        ops,
        sizes: pick_list(args.sizes.as_deref(), &cfg, SECTION, "sizes")?.unwrap_or_else(|| vec![10, 100, 1_000]),
        iterations: pick(args.iterations, &cfg, SECTION, "iterations")?.unwrap_or(1_000),
        warmup: pick(args.warmup, &cfg, SECTION, "warmup")?.unwrap_or(100),
        x1: scenario.x1,
        x2: scenario.x2,
        seed: seed(&args.common, &cfg, SECTION)?,
    };
    let dir = out_dir(&args.common, &cfg, SECTION)?.unwrap_or_else(|| PathBuf::from("."));
    Ok((s, dir))
}

/// Writes `timing.csv` and `timing_machine.txt`.
pub fn run(args: &TimingArgs) -> CliResult<Vec<PathBuf>> {
    let (s, dir) = settings(args)?;
    let rows = measure(&s)?;
    Ok(vec![write_file(&dir, "timing.csv", &to_csv(&rows))?, write_file(&dir, "timing_machine.txt", &machine_info(&s))?])
}
