use std::sync::{Arc, OnceLock};

use super::population::SamplePopulation;
use super::spec::DistributionSpec;
use crate::error::{Error, Result};

/// Where an uncertain value's distribution comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    ClosedForm(DistributionSpec),
    Empirical(SamplePopulation),
}

/// Mean, unbiased variance and standard deviation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SummaryStats {
    pub mean: f64,
    pub variance: f64,
    pub std: f64,
}

#[derive(Debug, Clone, Copy)]
struct Moments {
    mean: f64,
    variance: Option<f64>,
}

/// One uncertain objective value.
///
/// Statistics are computed on first use and cached; the cache is
/// thread-safe so values can be shared freely.
#[derive(Debug, Clone)]
pub struct UncertainValue {
    source: Source,
    draws: Option<Arc<[f64]>>,
    moments: OnceLock<Moments>,
}

impl PartialEq for UncertainValue {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.draws == other.draws
    }
}

impl UncertainValue {
    /// Builds an empirical value. The original order is not retained.
    pub fn from_samples(raw: Vec<f64>) -> Result<Self> {
        Ok(Self::from_population(SamplePopulation::from_unsorted(raw)?))
    }

    /// Like [`from_samples`](Self::from_samples) but also keeps the draw
    /// order, which index-paired comparison needs.
    pub fn from_draws(raw: Vec<f64>) -> Result<Self> {
        let draws: Arc<[f64]> = raw.clone().into();
        let mut value = Self::from_samples(raw)?;
        value.draws = Some(draws);
        Ok(value)
    }

    pub fn from_population(population: SamplePopulation) -> Self {
        Self { source: Source::Empirical(population), draws: None, moments: OnceLock::new() }
    }

    pub fn closed_form(spec: DistributionSpec) -> Self {
        Self { source: Source::ClosedForm(spec), draws: None, moments: OnceLock::new() }
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn population(&self) -> Option<&SamplePopulation> {
        match &self.source {
            Source::Empirical(p) => Some(p),
            Source::ClosedForm(_) => None,
        }
    }

    pub fn spec(&self) -> Option<&DistributionSpec> {
        match &self.source {
            Source::ClosedForm(s) => Some(s),
            Source::Empirical(_) => None,
        }
    }

    /// Samples in draw order, when the value was built with
    /// [`from_draws`](Self::from_draws).
    pub fn draws(&self) -> Option<&[f64]> {
        self.draws.as_deref()
    }

    fn moments(&self) -> Moments {
        *self.moments.get_or_init(|| match &self.source {
            Source::ClosedForm(spec) => Moments { mean: spec.mean(), variance: Some(spec.variance()) },
            Source::Empirical(pop) => {
                let s = pop.as_slice();
                let n = s.len() as f64;
                let mean = s.iter().sum::<f64>() / n;
                let variance = (s.len() > 1).then(|| s.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0));
                Moments { mean, variance }
            }
        })
    }

    /// Sample mean, or the analytic mean for closed forms.
    pub fn mean(&self) -> f64 {
        self.moments().mean
    }

    /// Mean, unbiased variance and standard deviation. Fails for a single
    /// sample, where the `N - 1` divisor vanishes.
    pub fn summary(&self) -> Result<SummaryStats> {
        let m = self.moments();
        let variance = m.variance.ok_or(Error::DegenerateVariance)?;
        Ok(SummaryStats { mean: m.mean, variance, std: variance.sqrt() })
    }

    pub fn empirical_cdf(&self, y: f64) -> Result<f64> {
        self.population().map(|p| p.cdf(y)).ok_or(Error::WrongRepresentation { expected: "empirical" })
    }

    pub fn empirical_quantile(&self, p: f64) -> Result<f64> {
        self.population()
            .ok_or(Error::WrongRepresentation { expected: "empirical" })?
            .quantile(p)
    }

    /// Lower and upper bound: sample extremes, or the analytic support.
    pub fn bounds(&self) -> Result<(f64, f64)> {
        match &self.source {
            Source::Empirical(p) => Ok((p.min(), p.max())),
            Source::ClosedForm(spec) => spec.support(),
        }
    }
}

/// The `n` analytic quantiles at probabilities `(2i - 1) / (2n)`.
///
/// The step CDF of the result is within `1 / (2n)` of the analytic CDF.
pub fn equiprobable_points(spec: &DistributionSpec, n: usize) -> Result<SamplePopulation> {
    if n == 0 {
        return Err(Error::InvalidPopulation("need at least one quantile point".into()));
    }
    let points = (1..=n)
        .map(|i| spec.quantile((2 * i - 1) as f64 / (2 * n) as f64))
        .collect::<Result<Vec<_>>>()?;
    // Bisection-based inverses can wobble by an ulp; keep the order exact.
    SamplePopulation::from_unsorted(points)
}
