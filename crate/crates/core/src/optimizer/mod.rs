//! NSGA-II with an uncertainty-aware dominance relation.
//!
//! Every individual is evaluated `samples` times when it is created. Ranking
//! uses the configured comparison operator; crowding and the recorded
//! objective points use sample means.

mod record;
mod sorting;
mod variation;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use record::{RunRecord, Snapshot, SnapshotEntry};
pub use sorting::{crowding_distance, fast_nondominated_sort, peel_fronts};
pub use variation::{polynomial_mutation, sbx_crossover};

use crate::benchmarks::UncertainProblem;
use crate::compare::{Comparator, Operator, OperatorConfig, Prepared};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizerConfig {
    pub pop_size: usize,
    pub generations: usize,
    /// Samples per objective and individual.
    pub samples: usize,
    pub operator: Operator,
    pub operator_config: OperatorConfig,
    pub crossover_prob: f64,
    pub crossover_eta: f64,
    /// `None` means `1 / n`.
    pub mutation_prob: Option<f64>,
    pub mutation_eta: f64,
    pub seed: u64,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            pop_size: 25,
            generations: 400,
            samples: 100,
            operator: Operator::Reduced,
            operator_config: OperatorConfig::default(),
            crossover_prob: 0.9,
            crossover_eta: 15.0,
            mutation_prob: None,
            mutation_eta: 20.0,
            seed: 0,
        }
    }
}

impl OptimizerConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::ConfigError(msg.to_string()));
        if self.pop_size < 2 {
            return fail("population size must be at least 2");
        }
        if self.generations == 0 {
            return fail("need at least one generation");
        }
        if self.samples == 0 {
            return fail("need at least one sample per objective");
        }
        let prob = |p: f64| (0.0..=1.0).contains(&p);
        if !prob(self.crossover_prob) || !self.mutation_prob.is_none_or(prob) {
            return fail("variation probabilities must lie in [0, 1]");
        }
        if !(self.crossover_eta >= 0.0 && self.mutation_eta >= 0.0) {
            return fail("distribution indices must be non-negative");
        }
        self.operator_config.validate()
    }

    fn mutation_prob_for(&self, n: usize) -> f64 {
        self.mutation_prob.unwrap_or(1.0 / n as f64)
    }
}

/// Random stream for the evaluation with serial number `serial`.
///
/// Every evaluation has its own stream, so results do not depend on the
/// order in which evaluations run.
pub fn evaluation_rng(seed: u64, serial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(serial + 1);
    rng
}

/// Random stream driving initialization and variation.
pub fn variation_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

struct Member {
    x: Vec<f64>,
    prepared: Vec<Prepared>,
    mean: Vec<f64>,
    min: Vec<f64>,
    max: Vec<f64>,
    rank: usize,
    crowding: f64,
}

struct Run<'a> {
    problem: &'a UncertainProblem,
    cfg: &'a OptimizerConfig,
    comparator: Comparator,
    serial: u64,
    evaluations: u64,
}

impl Run<'_> {
    fn evaluate(&mut self, x: Vec<f64>) -> Result<Member> {
        let mut rng = evaluation_rng(self.cfg.seed, self.serial);
        self.serial += 1;
        let values = self.problem.evaluate_population(&x, self.cfg.samples, &mut rng)?;
        self.evaluations += self.cfg.samples as u64;
        let mut member = Member {
            x,
            prepared: Vec::with_capacity(values.len()),
            mean: Vec::with_capacity(values.len()),
            min: Vec::with_capacity(values.len()),
            max: Vec::with_capacity(values.len()),
            rank: 0,
            crowding: 0.0,
        };
        for v in &values {
            member.prepared.push(self.comparator.prepare(v)?);
            member.mean.push(v.mean());
            let (lo, hi) = v.bounds()?;
            member.min.push(lo);
            member.max.push(hi);
        }
        Ok(member)
    }

    /// Keeps the best `keep` members by (front, crowding), assigning both.
    fn select(&self, mut pool: Vec<Member>, keep: usize) -> Result<Vec<Member>> {
        let prepared: Vec<Vec<Prepared>> = pool.iter_mut().map(|m| std::mem::take(&mut m.prepared)).collect();
        let fronts = fast_nondominated_sort(&prepared, &self.comparator, &self.problem.senses())?;
        for (member, p) in pool.iter_mut().zip(prepared) {
            member.prepared = p;
        }

        let mut chosen = Vec::with_capacity(keep);
        for (rank, front) in fronts.into_iter().enumerate() {
            if chosen.len() == keep {
                break;
            }
            let means: Vec<Vec<f64>> = front.iter().map(|&i| pool[i].mean.clone()).collect();
            let crowding = crowding_distance(&means);
            let mut order: Vec<usize> = (0..front.len()).collect();
            if chosen.len() + front.len() > keep {
                order.sort_by(|&a, &b| crowding[b].total_cmp(&crowding[a]));
                order.truncate(keep - chosen.len());
            }
            for k in order {
                let i = front[k];
                pool[i].rank = rank;
                pool[i].crowding = crowding[k];
                chosen.push(i);
            }
        }

        let mut slots: Vec<Option<Member>> = pool.into_iter().map(Some).collect();
        Ok(chosen.into_iter().map(|i| slots[i].take().expect("selected once")).collect())
    }
}

/// Binary tournament on (rank, crowding).
fn tournament<R: Rng + ?Sized>(pop: &[Member], rng: &mut R) -> usize {
    let i = rng.random_range(0..pop.len());
    let j = rng.random_range(0..pop.len());
    let (a, b) = (&pop[i], &pop[j]);
    if b.rank < a.rank || (b.rank == a.rank && b.crowding > a.crowding) {
        j
    } else {
        i
    }
}

fn snapshot(gen: usize, pop: &[Member]) -> Snapshot {
    let entries = pop
        .iter()
        .enumerate()
        .map(|(id, m)| SnapshotEntry {
            id,
            x: m.x.clone(),
            mean: m.mean.clone(),
            min: m.min.clone(),
            max: m.max.clone(),
            rank: m.rank,
            crowding: m.crowding,
        })
        .collect();
    Snapshot { gen, entries }
}

/// Runs NSGA-II on `problem`, recording the population after every
/// generation. The initial population is not recorded.
pub fn run_nsga2(problem: &UncertainProblem, cfg: &OptimizerConfig) -> Result<RunRecord> {
    cfg.validate()?;
    let comparator = Comparator::new(cfg.operator, cfg.operator_config)?;
    let mut run = Run { problem, cfg, comparator, serial: 0, evaluations: 0 };
    let mut rng = variation_rng(cfg.seed);
    let n = problem.n();
    let p_mut = cfg.mutation_prob_for(n);

    let mut initial = Vec::with_capacity(cfg.pop_size);
    for _ in 0..cfg.pop_size {
        let x: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
        initial.push(run.evaluate(x)?);
    }
    let mut pop = run.select(initial, cfg.pop_size)?;

    let mut snapshots = Vec::with_capacity(cfg.generations);
    let mut generation_secs = Vec::with_capacity(cfg.generations);
    for gen in 1..=cfg.generations {
        let started = Instant::now();
        let mut children = Vec::with_capacity(cfg.pop_size);
        while children.len() < cfg.pop_size {
            let a = tournament(&pop, &mut rng);
            let b = tournament(&pop, &mut rng);
            let (c1, c2) = sbx_crossover(&pop[a].x, &pop[b].x, cfg.crossover_prob, cfg.crossover_eta, &mut rng);
            children.push(polynomial_mutation(&c1, p_mut, cfg.mutation_eta, &mut rng));
            // With an odd population the last pair contributes one child.
            if children.len() < cfg.pop_size {
                children.push(polynomial_mutation(&c2, p_mut, cfg.mutation_eta, &mut rng));
            }
        }
        for x in children {
            let child = run.evaluate(x)?;
            pop.push(child);
        }
        pop = run.select(pop, cfg.pop_size)?;
        snapshots.push(snapshot(gen, &pop));
        generation_secs.push(started.elapsed().as_secs_f64());
    }

    Ok(RunRecord {
        n,
        m: problem.m(),
        seed: Some(cfg.seed),
        snapshots,
        evaluations: run.evaluations,
        generation_secs,
    })
}
