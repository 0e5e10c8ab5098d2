//! The uncertain DTLZ problems UDTLZ1 to UDTLZ6.
//!
//! Each problem is a DTLZ skeleton plus three independent sources of
//! uncertainty, switched through [`NoiseSpec`]: perturbation of the
//! decision variables (UDTLZ1, UDTLZ6), additive Gaussian noise on every
//! objective, and truncated Maclaurin series in place of `sin`/`cos`
//! (UDTLZ2 to UDTLZ5). All objectives are minimized.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::ops::RangeInclusive;

use rand::Rng;
use rand_distr::{Beta, Distribution, Normal};

use crate::compare::Sense;
use crate::error::{Error, Result};
use crate::uncertain::UncertainValue;

/// First `terms` terms of the Maclaurin series of `sin`.
pub fn truncated_sin(theta: f64, terms: usize) -> f64 {
    let mut term = theta;
    let mut sum = 0.0;
    let t2 = theta * theta;
    for j in 0..terms {
        sum += term;
        let k = (2 * j + 2) as f64;
        term *= -t2 / (k * (k + 1.0));
    }
    sum
}

/// First `terms` terms of the Maclaurin series of `cos`.
pub fn truncated_cos(theta: f64, terms: usize) -> f64 {
    let mut term = 1.0;
    let mut sum = 0.0;
    let t2 = theta * theta;
    for j in 0..terms {
        sum += term;
        let k = (2 * j + 1) as f64;
        term *= -t2 / (k * (k + 1.0));
    }
    sum
}

/// How the second parameter of the UDTLZ6 perturbation is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Spread {
    #[default]
    Variance,
    StdDev,
}

/// Decision-variable perturbation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Perturbation {
    None,
    /// `min(x_i + 0.001 * u_i, 1)` with `u_i ~ Beta(10 + i, 2 + i)`.
    Beta,
    /// `clamp(x_i + u_i, 0, 1)` with `u_i ~ N(0, (10 + i) / 1000)`.
    Gaussian(Spread),
}

/// The uncertainty switched on for one problem.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseSpec {
    pub perturbation: Perturbation,
    /// Standard deviation of the additive objective noise; 0 disables it.
    pub function_noise_sd: f64,
    /// Range of the per-evaluation series term count; `None` uses exact
    /// trigonometry.
    pub series_terms: Option<RangeInclusive<usize>>,
}

impl NoiseSpec {
    /// Everything disabled: the deterministic DTLZ skeleton.
    pub fn off() -> Self {
        Self { perturbation: Perturbation::None, function_noise_sd: 0.0, series_terms: None }
    }

    pub fn is_off(&self) -> bool {
        *self == Self::off()
    }

    fn validate(&self) -> Result<()> {
        if !(self.function_noise_sd >= 0.0 && self.function_noise_sd.is_finite()) {
            return Err(Error::ConfigError(format!("noise sd must be non-negative, got {}", self.function_noise_sd)));
        }
        if let Some(r) = &self.series_terms {
            if *r.start() == 0 || r.start() > r.end() {
                return Err(Error::ConfigError(format!("series term range {r:?} is empty or includes 0")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    Udtlz1,
    Udtlz2,
    Udtlz3,
    Udtlz4,
    Udtlz5,
    Udtlz6,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 6] = [
        ProblemKind::Udtlz1,
        ProblemKind::Udtlz2,
        ProblemKind::Udtlz3,
        ProblemKind::Udtlz4,
        ProblemKind::Udtlz5,
        ProblemKind::Udtlz6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Udtlz1 => "udtlz1",
            ProblemKind::Udtlz2 => "udtlz2",
            ProblemKind::Udtlz3 => "udtlz3",
            ProblemKind::Udtlz4 => "udtlz4",
            ProblemKind::Udtlz5 => "udtlz5",
            ProblemKind::Udtlz6 => "udtlz6",
        }
    }

    /// The uncertainty each problem ships with.
    pub fn default_noise(self) -> NoiseSpec {
        let trig = |terms: RangeInclusive<usize>| NoiseSpec {
            perturbation: Perturbation::None,
            function_noise_sd: 0.005,
            series_terms: Some(terms),
        };
        match self {
            ProblemKind::Udtlz1 => NoiseSpec { perturbation: Perturbation::Beta, ..NoiseSpec::off() },
            ProblemKind::Udtlz2 | ProblemKind::Udtlz4 | ProblemKind::Udtlz5 => trig(3..=12),
            ProblemKind::Udtlz3 => trig(12..=19),
            ProblemKind::Udtlz6 => NoiseSpec { perturbation: Perturbation::Gaussian(Spread::Variance), ..NoiseSpec::off() },
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A configured benchmark problem.
#[derive(Debug, Clone, PartialEq)]
pub struct UncertainProblem {
    kind: ProblemKind,
    n: usize,
    m: usize,
    noise: NoiseSpec,
}

/// Default problem by name, with 7 variables and 3 objectives.
pub fn registry_lookup(name: &str) -> Result<UncertainProblem> {
    let kind = ProblemKind::ALL
        .into_iter()
        .find(|k| k.name() == name.trim().to_ascii_lowercase())
        .ok_or_else(|| Error::UnknownProblem(name.to_string()))?;
    UncertainProblem::new(kind, 7, 3)
}

/// Sine and cosine, exact or truncated to a fixed number of terms.
#[derive(Debug, Clone, Copy)]
struct Trig(Option<usize>);

impl Trig {
    fn sin(self, t: f64) -> f64 {
        self.0.map_or_else(|| t.sin(), |k| truncated_sin(t, k))
    }

    fn cos(self, t: f64) -> f64 {
        self.0.map_or_else(|| t.cos(), |k| truncated_cos(t, k))
    }
}

impl UncertainProblem {
    pub fn new(kind: ProblemKind, n: usize, m: usize) -> Result<Self> {
        if m < 2 || n < m {
            return Err(Error::ConfigError(format!("{kind} needs n >= m >= 2, got n={n}, m={m}")));
        }
        Ok(Self { kind, n, m, noise: kind.default_noise() })
    }

    /// Same problem with different dimensions.
    pub fn with_dims(self, n: usize, m: usize) -> Result<Self> {
        Ok(Self { noise: self.noise, ..Self::new(self.kind, n, m)? })
    }

    pub fn with_noise(self, noise: NoiseSpec) -> Result<Self> {
        noise.validate()?;
        Ok(Self { noise, ..self })
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of position variables, `n - m + 1`.
    pub fn k(&self) -> usize {
        self.n - self.m + 1
    }

    pub fn noise(&self) -> &NoiseSpec {
        &self.noise
    }

    pub fn senses(&self) -> Vec<Sense> {
        vec![Sense::Minimize; self.m]
    }

    fn check(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::InvalidDecisionVector(format!("expected {} variables, got {}", self.n, x.len())));
        }
        if let Some(bad) = x.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(Error::InvalidDecisionVector(format!("component {bad} outside [0, 1]")));
        }
        Ok(())
    }

    /// Applies the decision-variable perturbation.
    pub fn perturb<R: Rng + ?Sized>(&self, x: &[f64], rng: &mut R) -> Vec<f64> {
        match self.noise.perturbation {
            Perturbation::None => x.to_vec(),
            Perturbation::Beta => x
                .iter()
                .enumerate()
                .map(|(i, &xi)| {
                    let i = (i + 1) as f64;
                    let u = Beta::new(10.0 + i, 2.0 + i).expect("positive shapes").sample(rng);
                    (xi + 0.001 * u).min(1.0)
                })
                .collect(),
            Perturbation::Gaussian(spread) => x
                .iter()
                .enumerate()
                .map(|(i, &xi)| {
                    let p = (10.0 + (i + 1) as f64) / 1000.0;
                    let sd = match spread {
                        Spread::Variance => p.sqrt(),
                        Spread::StdDev => p,
                    };
                    let u = Normal::new(0.0, sd).expect("positive sd").sample(rng);
                    (xi + u).clamp(0.0, 1.0)
                })
                .collect(),
        }
    }

    /// One stochastic draw of all objectives at `x`.
    pub fn evaluate_once<R: Rng + ?Sized>(&self, x: &[f64], rng: &mut R) -> Result<Vec<f64>> {
        self.check(x)?;
        let terms = self.noise.series_terms.clone().map(|r| rng.random_range(r));
        let trig = Trig(terms);
        let xp = self.perturb(x, rng);

        let mut f = match self.kind {
            ProblemKind::Udtlz1 => self.udtlz1(x, &xp),
            ProblemKind::Udtlz2 | ProblemKind::Udtlz3 | ProblemKind::Udtlz4 | ProblemKind::Udtlz5 => self.spherical(&xp, trig),
            ProblemKind::Udtlz6 => self.udtlz6(&xp),
        };

        if self.noise.function_noise_sd > 0.0 {
            let noise = Normal::new(0.0, self.noise.function_noise_sd).expect("validated sd");
            for fi in &mut f {
                *fi += noise.sample(rng);
            }
        }
        Ok(f)
    }

    /// `samples` independent draws at `x`, one value per objective, in
    /// draw order.
    pub fn evaluate_population<R: Rng + ?Sized>(&self, x: &[f64], samples: usize, rng: &mut R) -> Result<Vec<UncertainValue>> {
        if samples == 0 {
            return Err(Error::ConfigError("need at least one sample per objective".into()));
        }
        let mut columns = vec![Vec::with_capacity(samples); self.m];
        for _ in 0..samples {
            for (col, v) in columns.iter_mut().zip(self.evaluate_once(x, rng)?) {
                col.push(v);
            }
        }
        columns.into_iter().map(UncertainValue::from_draws).collect()
    }

    /// Linear front; `g` sees the perturbed position variables, the
    /// products the nominal ones.
    fn udtlz1(&self, x: &[f64], xp: &[f64]) -> Vec<f64> {
        let m = self.m;
        let k = self.k() as f64;
        let g = 100.0 * (k + xp[m - 1..].iter().map(|&v| (v - 0.5).powi(2) - (20.0 * PI * (v - 0.5)).cos()).sum::<f64>());
        (1..=m)
            .map(|i| {
                let prod: f64 = x[..m - i].iter().product();
                let last = if i == 1 { 1.0 } else { 1.0 - x[m - i] };
                0.5 * prod * last * (1.0 + g)
            })
            .collect()
    }

    /// UDTLZ2 to UDTLZ5: spherical front with problem-specific `g` and
    /// angle mapping.
    fn spherical(&self, x: &[f64], trig: Trig) -> Vec<f64> {
        let m = self.m;
        let tail = &x[m - 1..];
        let g = match self.kind {
            ProblemKind::Udtlz3 => {
                let k = self.k() as f64;
                100.0 * (k + tail.iter().map(|&v| (v - 0.5).powi(2) - trig.cos(20.0 * PI * (v - 0.5))).sum::<f64>())
            }
            ProblemKind::Udtlz5 => tail.iter().map(|v| v.powf(0.1)).sum(),
            _ => tail.iter().map(|v| (v - 0.5).powi(2)).sum(),
        };
        let theta: Vec<f64> = (0..m - 1)
            .map(|i| match self.kind {
                ProblemKind::Udtlz4 => FRAC_PI_2 * x[i].powi(100),
                ProblemKind::Udtlz5 if i > 0 => PI * (1.0 + 2.0 * g * x[i]) / (4.0 * (1.0 + g)),
                _ => FRAC_PI_2 * x[i],
            })
            .collect();
        (1..=m)
            .map(|i| {
                let prod: f64 = theta[..m - i].iter().map(|&t| trig.cos(t)).product();
                let last = if i == 1 { 1.0 } else { trig.sin(theta[m - i]) };
                (1.0 + g) * prod * last
            })
            .collect()
    }

    /// Disconnected front.
    fn udtlz6(&self, x: &[f64]) -> Vec<f64> {
        let m = self.m;
        let g = 1.0 + 9.0 / self.k() as f64 * x[m - 1..].iter().sum::<f64>();
        let mut f: Vec<f64> = x[..m - 1].to_vec();
        let h = m as f64 - f.iter().map(|&fi| fi / (1.0 + g) * (1.0 + (3.0 * PI * fi).sin())).sum::<f64>();
        f.push((1.0 + g) * h);
        f
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn series_examples() {
        for k in 1..6 {
            assert_eq!(truncated_sin(0.0, k), 0.0);
            assert_eq!(truncated_cos(0.0, k), 1.0);
        }
        assert_eq!(truncated_sin(FRAC_PI_2, 1), FRAC_PI_2);
        assert!((truncated_sin(FRAC_PI_2, 5) - 1.000_003_543).abs() < 1e-8);
        assert!((truncated_cos(PI, 2) - (1.0 - PI * PI / 2.0)).abs() < 1e-15);
        assert!((truncated_cos(PI / 3.0, 12) - 0.5).abs() < 1e-9);
    }

    #[test]
    fn registry() {
        let p = registry_lookup("udtlz2").unwrap();
        assert_eq!((p.n(), p.m()), (7, 3));
        assert_eq!(p.senses(), vec![Sense::Minimize; 3]);
        assert_eq!(registry_lookup("udtlz9"), Err(Error::UnknownProblem("udtlz9".into())));
        let p = registry_lookup("udtlz1").unwrap().with_dims(12, 3).unwrap();
        assert_eq!(p.k(), 10);
        assert!(registry_lookup("udtlz1").unwrap().with_dims(2, 3).is_err());
    }

    #[test]
    fn noiseless_udtlz2_corner() {
        let p = registry_lookup("udtlz2").unwrap().with_noise(NoiseSpec::off()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let f = p.evaluate_once(&[0.0, 0.0, 0.5, 0.5, 0.5, 0.5, 0.5], &mut rng).unwrap();
        assert_eq!(f, vec![1.0, 0.0, 0.0]);
    }

    #[test]
    fn rejects_bad_vectors() {
        let p = registry_lookup("udtlz2").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(p.evaluate_once(&[0.5; 6], &mut rng), Err(Error::InvalidDecisionVector(_))));
        assert!(matches!(p.evaluate_once(&[1.1; 7], &mut rng), Err(Error::InvalidDecisionVector(_))));
    }

    #[test]
    fn udtlz1_clamps_at_one() {
        let p = registry_lookup("udtlz1").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let xp = p.perturb(&[1.0; 7], &mut rng);
            assert!(xp.iter().all(|&v| v == 1.0));
        }
    }

    #[test]
    fn population_shapes() {
        let p = registry_lookup("udtlz6").unwrap();
        let x = [0.3; 7];
        let a = p.evaluate_population(&x, 100, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b = p.evaluate_population(&x, 100, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        assert!(a.iter().all(|v| v.population().unwrap().len() == 100));

        let single = p.evaluate_population(&x, 1, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        assert!(single.iter().all(|v| v.population().unwrap().len() == 1));

        let quiet = registry_lookup("udtlz2").unwrap().with_noise(NoiseSpec::off()).unwrap();
        for v in quiet.evaluate_population(&x, 10, &mut ChaCha8Rng::seed_from_u64(1)).unwrap() {
            let s = v.population().unwrap();
            assert_eq!(s.min(), s.max());
        }
    }

    #[test]
    fn noise_spec_validation() {
        let p = registry_lookup("udtlz2").unwrap();
        let bad = NoiseSpec { series_terms: Some(0..=3), ..NoiseSpec::off() };
        assert!(p.clone().with_noise(bad).is_err());
        let bad = NoiseSpec { function_noise_sd: -1.0, ..NoiseSpec::off() };
        assert!(p.with_noise(bad).is_err());
    }
}
