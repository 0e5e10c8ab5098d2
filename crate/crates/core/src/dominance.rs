//! Pareto dominance between solutions with uncertain objectives.

use crate::compare::{Comparator, Decision, Prepared, Sense};
use crate::error::{Error, Result};
use crate::uncertain::UncertainValue;

/// A candidate solution: decision vector, one uncertain value per
/// objective, and NSGA-II bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub x: Vec<f64>,
    pub objectives: Vec<UncertainValue>,
    pub rank: usize,
    pub crowding: f64,
}

impl Individual {
    /// Rejects decision variables outside `[0, 1]`.
    pub fn new(x: Vec<f64>, objectives: Vec<UncertainValue>) -> Result<Self> {
        if let Some(bad) = x.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(Error::InvalidDecisionVector(format!("component {bad} outside [0, 1]")));
        }
        Ok(Self { x, objectives, rank: 0, crowding: 0.0 })
    }

    /// Sample (or analytic) mean of every objective.
    pub fn means(&self) -> Vec<f64> {
        self.objectives.iter().map(UncertainValue::mean).collect()
    }
}

fn check_dims(a: usize, b: usize, senses: usize) -> Result<()> {
    if a != b || a != senses {
        return Err(Error::IncompatibleIndividuals(format!(
            "{a} and {b} objectives compared under {senses} senses"
        )));
    }
    Ok(())
}

/// Prepares every objective of `ind` for `comparator`.
pub fn prepare_all(comparator: &Comparator, ind: &Individual) -> Result<Vec<Prepared>> {
    ind.objectives.iter().map(|v| comparator.prepare(v)).collect()
}

/// `A` dominates `B` when no objective is Worse and at least one is Better.
pub fn dominates_prepared(a: &[Prepared], b: &[Prepared], comparator: &Comparator, senses: &[Sense]) -> Result<bool> {
    check_dims(a.len(), b.len(), senses.len())?;
    let mut strict = false;
    for ((pa, pb), &sense) in a.iter().zip(b).zip(senses) {
        match comparator.decision(pa, pb, sense)? {
            Decision::Worse => return Ok(false),
            Decision::Better => strict = true,
            Decision::Indifferent => {}
        }
    }
    Ok(strict)
}

pub fn dominates(a: &Individual, b: &Individual, comparator: &Comparator, senses: &[Sense]) -> Result<bool> {
    check_dims(a.objectives.len(), b.objectives.len(), senses.len())?;
    dominates_prepared(&prepare_all(comparator, a)?, &prepare_all(comparator, b)?, comparator, senses)
}

/// Product over objectives of the probability that `A` is the preferred
/// side. Only meaningful for independent objectives.
pub fn dominance_probability_independent(
    a: &Individual,
    b: &Individual,
    comparator: &Comparator,
    senses: &[Sense],
) -> Result<f64> {
    check_dims(a.objectives.len(), b.objectives.len(), senses.len())?;
    let mut product = 1.0;
    for ((va, vb), &sense) in a.objectives.iter().zip(&b.objectives).zip(senses) {
        let (pa, pb) = (comparator.prepare(va)?, comparator.prepare(vb)?);
        product *= match sense {
            Sense::Maximize => comparator.probability(&pa, &pb)?,
            Sense::Minimize => comparator.probability(&pb, &pa)?,
        };
    }
    Ok(product)
}

/// `m[i][j]` is true when individual `i` dominates individual `j`.
pub fn dominance_matrix(prepared: &[Vec<Prepared>], comparator: &Comparator, senses: &[Sense]) -> Result<Vec<Vec<bool>>> {
    let n = prepared.len();
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m[i][j] = dominates_prepared(&prepared[i], &prepared[j], comparator, senses)?;
            }
        }
    }
    Ok(m)
}

/// Indices among `candidates` that no other candidate dominates.
pub fn non_dominated_among(matrix: &[Vec<bool>], candidates: &[usize]) -> Vec<usize> {
    candidates
        .iter()
        .copied()
        .filter(|&j| !candidates.iter().any(|&i| matrix[i][j]))
        .collect()
}

/// The individuals no other individual dominates, in input order.
pub fn non_dominated_filter(pop: &[Individual], comparator: &Comparator, senses: &[Sense]) -> Result<Vec<Individual>> {
    let prepared = pop.iter().map(|ind| prepare_all(comparator, ind)).collect::<Result<Vec<_>>>()?;
    let matrix = dominance_matrix(&prepared, comparator, senses)?;
    let all: Vec<usize> = (0..pop.len()).collect();
    Ok(non_dominated_among(&matrix, &all).into_iter().map(|i| pop[i].clone()).collect())
}
