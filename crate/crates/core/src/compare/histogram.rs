//! Fixed-width, origin-aligned histograms.

use crate::error::{Error, Result};
use crate::uncertain::{Source, UncertainValue};

/// Upper bound on bins per histogram; wider ranges are rejected.
pub const MAX_BINS: usize = 1 << 24;

/// Probability masses on bins `[k * omega, (k + 1) * omega)`.
///
/// Bins are aligned to integer multiples of `omega`, so two histograms of
/// equal width either share a bin exactly or are disjoint on it.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    omega: f64,
    first: i64,
    masses: Vec<f64>,
    /// `below[i]` is the mass of all bins before bin `first + i`.
    below: Vec<f64>,
}

impl Histogram {
    /// Bins `value`: sample proportions for populations, exact bin
    /// probabilities for closed forms with finite support.
    pub fn build(value: &UncertainValue, omega: f64) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::ConfigError(format!("histogram width must be positive, got {omega}")));
        }
        let (lo, hi) = value.bounds()?;
        let first = (lo / omega).floor();
        let last = (hi / omega).ceil();
        let count = last - first + 1.0;
        if !(count.is_finite() && count <= MAX_BINS as f64) {
            return Err(Error::ConfigError(format!("histogram of width {omega} over [{lo}, {hi}] has too many bins")));
        }
        let first = first as i64;
        let count = count as usize;
        let mut masses = vec![0.0; count];

        match value.source() {
            Source::Empirical(pop) => {
                let w = 1.0 / pop.len() as f64;
                for &s in pop.as_slice() {
                    let k = (s / omega).floor() as i64;
                    let idx = (k - first).clamp(0, count as i64 - 1) as usize;
                    masses[idx] += w;
                }
            }
            Source::ClosedForm(spec) => {
                let mut prev = spec.cdf(first as f64 * omega);
                for (i, m) in masses.iter_mut().enumerate() {
                    let next = spec.cdf((first + i as i64 + 1) as f64 * omega);
                    *m = next - prev;
                    prev = next;
                }
            }
        }
        Ok(Self::from_masses(omega, first, masses))
    }

    fn from_masses(omega: f64, first: i64, masses: Vec<f64>) -> Self {
        let mut below = Vec::with_capacity(masses.len());
        let mut acc = 0.0;
        for m in &masses {
            below.push(acc);
            acc += m;
        }
        Self { omega, first, masses, below }
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Index of the first bin.
    pub fn first_bin(&self) -> i64 {
        self.first
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    /// Mass of bin `k`.
    pub fn mass(&self, k: i64) -> f64 {
        let i = k - self.first;
        if i < 0 || i >= self.masses.len() as i64 {
            0.0
        } else {
            self.masses[i as usize]
        }
    }

    /// Mass strictly below `k * omega`.
    pub fn mass_below(&self, k: i64) -> f64 {
        let i = k - self.first;
        if i <= 0 {
            0.0
        } else if i >= self.masses.len() as i64 {
            1.0
        } else {
            self.below[i as usize]
        }
    }

    fn bins(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.masses.iter().enumerate().map(move |(i, &m)| (self.first + i as i64, m))
    }

    fn check_width(&self, other: &Histogram) -> Result<()> {
        if self.omega != other.omega {
            return Err(Error::IncompatibleHistograms(self.omega, other.omega));
        }
        Ok(())
    }

    /// `P(A > B)` assuming uniform mass within each bin: shared bins
    /// contribute half their joint mass.
    pub fn prob_greater(&self, other: &Histogram) -> Result<f64> {
        self.check_width(other)?;
        Ok(self
            .bins()
            .map(|(k, pa)| pa * (0.5 * other.mass(k) + other.mass_below(k)))
            .sum())
    }

    /// Worst-case error of [`prob_greater`](Self::prob_greater): half the
    /// joint mass of shared bins.
    pub fn error_bound(&self, other: &Histogram) -> Result<f64> {
        self.check_width(other)?;
        Ok(0.5 * self.bins().map(|(k, pa)| pa * other.mass(k)).sum::<f64>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uncertain::DistributionSpec;

    fn hist(masses: Vec<f64>, first: i64) -> Histogram {
        Histogram::from_masses(1.0, first, masses)
    }

    #[test]
    fn bins_samples() {
        let v = UncertainValue::from_samples(vec![0.05, 0.15, 0.15, 0.95]).unwrap();
        let h = Histogram::build(&v, 0.1).unwrap();
        assert_eq!(h.mass(0), 0.25);
        assert_eq!(h.mass(1), 0.5);
        assert_eq!(h.mass(9), 0.25);
        assert!((h.masses().iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn single_sample_and_boundary() {
        let v = UncertainValue::from_samples(vec![0.37]).unwrap();
        let h = Histogram::build(&v, 0.05).unwrap();
        assert_eq!(h.masses().iter().filter(|&&m| m > 0.0).count(), 1);
        // 0.75 = 3 * 0.25 exactly; half-open bins put it in bin 3.
        let v = UncertainValue::from_samples(vec![0.75]).unwrap();
        let h = Histogram::build(&v, 0.25).unwrap();
        assert_eq!(h.mass(3), 1.0);
        assert_eq!(h.mass(2), 0.0);
    }

    #[test]
    fn closed_form_masses() {
        let v = UncertainValue::closed_form(DistributionSpec::uniform(0.0, 1.0).unwrap());
        let h = Histogram::build(&v, 0.25).unwrap();
        for k in 0..4 {
            assert!((h.mass(k) - 0.25).abs() < 1e-15);
        }
        assert!((h.masses().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        let g = UncertainValue::closed_form(DistributionSpec::gaussian(0.0, 1.0).unwrap());
        assert_eq!(Histogram::build(&g, 0.1), Err(Error::UnboundedSupport));
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(hist(vec![1.0], 0).prob_greater(&hist(vec![1.0], 0)).unwrap(), 0.5);
        assert_eq!(hist(vec![1.0], 1).prob_greater(&hist(vec![1.0], 0)).unwrap(), 1.0);
        assert_eq!(hist(vec![0.5, 0.5], 0).prob_greater(&hist(vec![1.0], 0)).unwrap(), 0.75);
        assert_eq!(hist(vec![1.0], 0).prob_greater(&hist(vec![1.0], 5)).unwrap(), 0.0);
    }

    #[test]
    fn width_mismatch() {
        let a = Histogram::from_masses(0.1, 0, vec![1.0]);
        let b = Histogram::from_masses(0.2, 0, vec![1.0]);
        assert_eq!(a.prob_greater(&b), Err(Error::IncompatibleHistograms(0.1, 0.2)));
    }
}
