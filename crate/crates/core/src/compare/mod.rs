//! Operators that compare two uncertain values.
//!
//! Every operator works in two steps. [`Comparator::prepare`] turns an
//! [`UncertainValue`] into the representation the operator needs (sorted
//! samples, a histogram, two moments, ...), which is the expensive part and
//! is done once per value. [`Comparator::report`] then compares two prepared
//! values and applies the threshold rule.

mod baseline;
mod empirical;
mod gauss;
mod histogram;
pub mod oracle;
mod pairwise;
mod uniform;

use std::fmt;
use std::str::FromStr;

use rand::Rng;

pub use baseline::{compare_mean, compare_three_stage, Profile};
pub use empirical::{compare_empirical, compare_reduced, compare_sorted, count_greater_pairs};
pub use gauss::prob_greater_gauss;
pub use histogram::{Histogram, MAX_BINS};
pub use oracle::{oracle_dominance, DEFAULT_RESOLUTION};
pub use pairwise::compare_pairwise;
pub use uniform::{interval_from_moments, prob_greater_uniform};

use crate::error::{Error, Result};
use crate::uncertain::{equiprobable_points, SamplePopulation, Source, UncertainValue};

/// Whether larger or smaller objective values are preferred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Sense {
    Maximize,
    #[default]
    Minimize,
}

impl Sense {
    /// The decision for `A` when `A` is the larger value.
    fn favoring_greater(self) -> Decision {
        match self {
            Sense::Maximize => Decision::Better,
            Sense::Minimize => Decision::Worse,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Better,
    Worse,
    Indifferent,
}

impl Decision {
    pub fn reversed(self) -> Decision {
        match self {
            Decision::Better => Decision::Worse,
            Decision::Worse => Decision::Better,
            Decision::Indifferent => Decision::Indifferent,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Better => "better",
            Decision::Worse => "worse",
            Decision::Indifferent => "indifferent",
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Threshold rule: `A` is better once the probability of it being the
/// preferred side exceeds `gamma`.
pub fn decide(p_greater: f64, p_less: f64, gamma: f64, sense: Sense) -> Decision {
    let (p_better, p_worse) = match sense {
        Sense::Maximize => (p_greater, p_less),
        Sense::Minimize => (p_less, p_greater),
    };
    if p_better > gamma {
        Decision::Better
    } else if p_worse > gamma {
        Decision::Worse
    } else {
        Decision::Indifferent
    }
}

/// The comparison operators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Operator {
    /// Index-paired draws.
    Pairwise,
    /// Uniform model over the value bounds.
    UniformBounds,
    /// Uniform model matching mean and variance.
    UniformMoments,
    Gauss,
    /// Fixed-width histogram; `None` takes the width from the config.
    Histogram(Option<f64>),
    /// Full sorted empirical distributions.
    Empirical,
    /// Square-root reductions of the sorted distributions.
    Reduced,
    Mean,
    ThreeStage,
}

impl Operator {
    pub const ALL_IDS: [&'static str; 9] = ["pw", "uni1", "uni2", "gauss", "hist", "emp", "reduce", "mean", "threestage"];

    /// Whether the operator yields probabilities or only a decision.
    pub fn is_probabilistic(self) -> bool {
        !matches!(self, Operator::Mean | Operator::ThreeStage)
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Pairwise => f.write_str("pw"),
            Operator::UniformBounds => f.write_str("uni1"),
            Operator::UniformMoments => f.write_str("uni2"),
            Operator::Gauss => f.write_str("gauss"),
            Operator::Histogram(None) => f.write_str("hist"),
            Operator::Histogram(Some(w)) => write!(f, "hist:{w}"),
            Operator::Empirical => f.write_str("emp"),
            Operator::Reduced => f.write_str("reduce"),
            Operator::Mean => f.write_str("mean"),
            Operator::ThreeStage => f.write_str("threestage"),
        }
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let op = match s {
            "pw" => Operator::Pairwise,
            "uni1" => Operator::UniformBounds,
            "uni2" => Operator::UniformMoments,
            "gauss" => Operator::Gauss,
            "hist" => Operator::Histogram(None),
            "emp" => Operator::Empirical,
            "reduce" => Operator::Reduced,
            "mean" => Operator::Mean,
            "threestage" => Operator::ThreeStage,
            _ => {
                let omega = s
                    .strip_prefix("hist:")
                    .and_then(|w| w.trim().parse::<f64>().ok())
                    .filter(|w| *w > 0.0 && w.is_finite())
                    .ok_or_else(|| Error::UnknownOperator(s.to_string()))?;
                Operator::Histogram(Some(omega))
            }
        };
        Ok(op)
    }
}

/// Tunables shared by all operators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorConfig {
    pub gamma: f64,
    /// Default histogram width.
    pub omega: f64,
    /// Quantile points standing in for a closed form in `emp`/`reduce`.
    pub quantile_steps: usize,
    /// Draws taken from a closed form for `pw`.
    pub pairwise_samples: usize,
    pub mean_threshold: f64,
    pub spread_threshold: f64,
}

impl Default for OperatorConfig {
    fn default() -> Self {
        Self {
            gamma: 0.7,
            omega: 0.01,
            quantile_steps: 20,
            pairwise_samples: 100,
            mean_threshold: 0.1,
            spread_threshold: 0.3,
        }
    }
}

impl OperatorConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::ConfigError(msg));
        if !(0.5..=1.0).contains(&self.gamma) {
            return fail(format!("gamma must lie in [0.5, 1], got {}", self.gamma));
        }
        if !(self.omega > 0.0 && self.omega.is_finite()) {
            return fail(format!("omega must be positive, got {}", self.omega));
        }
        if self.quantile_steps == 0 || self.pairwise_samples == 0 {
            return fail("quantile_steps and pairwise_samples must be at least 1".into());
        }
        if !(self.mean_threshold >= 0.0 && self.spread_threshold >= 0.0) {
            return fail("three-stage thresholds must be non-negative".into());
        }
        Ok(())
    }
}

/// Probabilities (when the operator has them) and the resulting decision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonReport {
    pub p_greater: Option<f64>,
    pub p_less: Option<f64>,
    pub decision: Decision,
}

impl ComparisonReport {
    pub const CSV_HEADER: &'static str = "op,p_greater,p_less,decision";

    /// `op,p_greater,p_less,decision`; decision-only operators leave the
    /// probability fields empty.
    pub fn csv_row(&self, op: Operator) -> String {
        let p = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!("{op},{},{},{}", p(self.p_greater), p(self.p_less), self.decision)
    }
}

/// A value in the representation one operator works on.
#[derive(Debug, Clone, PartialEq)]
pub enum Prepared {
    Draws(Vec<f64>),
    Interval(f64, f64),
    Moments { mean: f64, variance: f64 },
    Histogram(Histogram),
    Sorted(SamplePopulation),
    Mean(f64),
    Profile(Profile),
}

/// An operator together with its configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparator {
    pub op: Operator,
    pub cfg: OperatorConfig,
}

impl Comparator {
    pub fn new(op: Operator, cfg: OperatorConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Self { op, cfg })
    }

    fn omega(&self) -> f64 {
        match self.op {
            Operator::Histogram(Some(w)) => w,
            _ => self.cfg.omega,
        }
    }

    /// Samples for `emp`/`reduce`: the population itself, or equiprobable
    /// quantile points of a closed form.
    fn sorted(&self, value: &UncertainValue) -> Result<SamplePopulation> {
        match value.source() {
            Source::Empirical(p) => Ok(p.clone()),
            Source::ClosedForm(spec) => equiprobable_points(spec, self.cfg.quantile_steps),
        }
    }

    /// Prepares `value`. Closed forms under `pw` need random draws; use
    /// [`prepare_with_rng`](Self::prepare_with_rng) for those.
    pub fn prepare(&self, value: &UncertainValue) -> Result<Prepared> {
        Ok(match self.op {
            Operator::Pairwise => match value.draws() {
                Some(d) => Prepared::Draws(d.to_vec()),
                None => return Err(Error::WrongRepresentation { expected: "samples in draw order" }),
            },
            Operator::UniformBounds => {
                let (lo, hi) = value.bounds()?;
                Prepared::Interval(lo, hi)
            }
            Operator::UniformMoments => {
                let s = value.summary()?;
                let (lo, hi) = interval_from_moments(s.mean, s.variance);
                Prepared::Interval(lo, hi)
            }
            Operator::Gauss => {
                let s = value.summary()?;
                Prepared::Moments { mean: s.mean, variance: s.variance }
            }
            Operator::Histogram(_) => Prepared::Histogram(Histogram::build(value, self.omega())?),
            Operator::Empirical => Prepared::Sorted(self.sorted(value)?),
            Operator::Reduced => Prepared::Sorted(self.sorted(value)?.reduce()),
            Operator::Mean => Prepared::Mean(value.mean()),
            Operator::ThreeStage => Prepared::Profile(profile(value)?),
        })
    }

    /// Like [`prepare`](Self::prepare), but draws `pairwise_samples` values
    /// from closed forms under `pw`.
    pub fn prepare_with_rng<R: Rng + ?Sized>(&self, value: &UncertainValue, rng: &mut R) -> Result<Prepared> {
        match (self.op, value.source()) {
            (Operator::Pairwise, Source::ClosedForm(spec)) if value.draws().is_none() => {
                Ok(Prepared::Draws(spec.sample_n(self.cfg.pairwise_samples, rng)))
            }
            _ => self.prepare(value),
        }
    }

    /// `P(A > B)` between two prepared values.
    pub fn probability(&self, a: &Prepared, b: &Prepared) -> Result<f64> {
        match (a, b) {
            (Prepared::Draws(a), Prepared::Draws(b)) => compare_pairwise(a, b),
            (Prepared::Interval(al, ah), Prepared::Interval(bl, bh)) => Ok(prob_greater_uniform((*al, *ah), (*bl, *bh))),
            (Prepared::Moments { mean: ma, variance: va }, Prepared::Moments { mean: mb, variance: vb }) => {
                Ok(prob_greater_gauss(*ma, *va, *mb, *vb))
            }
            (Prepared::Histogram(a), Prepared::Histogram(b)) => a.prob_greater(b),
            (Prepared::Sorted(a), Prepared::Sorted(b)) => Ok(compare_empirical(a, b)),
            (Prepared::Mean(_), Prepared::Mean(_)) => Err(Error::NotProbabilistic("mean")),
            (Prepared::Profile(_), Prepared::Profile(_)) => Err(Error::NotProbabilistic("threestage")),
            _ => Err(Error::WrongRepresentation { expected: "values prepared by the same operator" }),
        }
    }

    /// Compares two prepared values under `sense`.
    ///
    /// `p_less` comes from the swapped call, so tie mass is excluded from
    /// both probabilities.
    pub fn report(&self, a: &Prepared, b: &Prepared, sense: Sense) -> Result<ComparisonReport> {
        match (a, b) {
            (Prepared::Mean(ma), Prepared::Mean(mb)) => {
                Ok(ComparisonReport { p_greater: None, p_less: None, decision: compare_mean(*ma, *mb, sense) })
            }
            (Prepared::Profile(pa), Prepared::Profile(pb)) => Ok(ComparisonReport {
                p_greater: None,
                p_less: None,
                decision: compare_three_stage(pa, pb, self.cfg.mean_threshold, self.cfg.spread_threshold, sense),
            }),
            _ => {
                let p_greater = self.probability(a, b)?;
                let p_less = self.probability(b, a)?;
                Ok(ComparisonReport {
                    p_greater: Some(p_greater),
                    p_less: Some(p_less),
                    decision: decide(p_greater, p_less, self.cfg.gamma, sense),
                })
            }
        }
    }

    /// Just the decision between two prepared values.
    pub fn decision(&self, a: &Prepared, b: &Prepared, sense: Sense) -> Result<Decision> {
        self.report(a, b, sense).map(|r| r.decision)
    }

    /// Prepares both values and compares them.
    pub fn compare(&self, a: &UncertainValue, b: &UncertainValue, sense: Sense) -> Result<ComparisonReport> {
        self.report(&self.prepare(a)?, &self.prepare(b)?, sense)
    }

    /// [`compare`](Self::compare) with a random stream for closed forms
    /// under `pw`.
    pub fn compare_with_rng<R: Rng + ?Sized>(
        &self,
        a: &UncertainValue,
        b: &UncertainValue,
        sense: Sense,
        rng: &mut R,
    ) -> Result<ComparisonReport> {
        let pa = self.prepare_with_rng(a, rng)?;
        let pb = self.prepare_with_rng(b, rng)?;
        self.report(&pa, &pb, sense)
    }
}

fn profile(value: &UncertainValue) -> Result<Profile> {
    let (lower, upper) = value.bounds()?;
    let (q025, q975) = match value.source() {
        Source::Empirical(p) => (p.quantile(0.025)?, p.quantile(0.975)?),
        Source::ClosedForm(s) => (s.quantile(0.025)?, s.quantile(0.975)?),
    };
    Ok(Profile { lower, upper, mean: value.mean(), q025, q975 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uncertain::DistributionSpec;
    use proptest::prelude::*;

    fn comparator(op: &str) -> Comparator {
        Comparator::new(op.parse().unwrap(), OperatorConfig::default()).unwrap()
    }

    fn closed(spec: &str) -> UncertainValue {
        UncertainValue::closed_form(spec.parse().unwrap())
    }

    #[test]
    fn decide_examples() {
        assert_eq!(decide(0.8, 0.2, 0.7, Sense::Maximize), Decision::Better);
        assert_eq!(decide(0.5, 0.5, 0.7, Sense::Maximize), Decision::Indifferent);
        assert_eq!(decide(0.25, 0.75, 0.7, Sense::Maximize), Decision::Worse);
        assert_eq!(decide(0.25, 0.75, 0.7, Sense::Minimize), Decision::Better);
    }

    #[test]
    fn operator_ids_round_trip() {
        for id in Operator::ALL_IDS {
            assert_eq!(id.parse::<Operator>().unwrap().to_string(), id);
        }
        assert_eq!("hist:0.05".parse::<Operator>().unwrap(), Operator::Histogram(Some(0.05)));
        assert_eq!("hist:0.05".parse::<Operator>().unwrap().to_string(), "hist:0.05");
        for bad in ["", "hist:", "hist:-1", "hist:0", "emp2", "hist:nan"] {
            assert!(matches!(bad.parse::<Operator>(), Err(Error::UnknownOperator(_))), "{bad}");
        }
    }

    #[test]
    fn config_validation() {
        assert!(OperatorConfig::default().validate().is_ok());
        let bad = [
            OperatorConfig { gamma: 0.4, ..Default::default() },
            OperatorConfig { omega: 0.0, ..Default::default() },
            OperatorConfig { mean_threshold: -0.1, ..Default::default() },
            OperatorConfig { quantile_steps: 0, ..Default::default() },
        ];
        for cfg in bad {
            assert!(matches!(cfg.validate(), Err(Error::ConfigError(_))));
        }
    }

    #[test]
    fn symmetric_uniform_is_indifferent() {
        let u = closed("uniform(0,1)");
        let r = comparator("uni1").compare(&u, &u, Sense::Maximize).unwrap();
        assert_eq!(r.csv_row(Operator::UniformBounds), "uni1,0.5,0.5,indifferent");
    }

    #[test]
    fn gauss_through_comparator() {
        let r = comparator("gauss").compare(&closed("gaussian(1,1)"), &closed("gaussian(0,1)"), Sense::Maximize).unwrap();
        assert!((r.p_greater.unwrap() - 0.7602).abs() < 1e-4);
        assert_eq!(r.decision, Decision::Better);
    }

    #[test]
    fn representation_mismatches() {
        let g = closed("gaussian(0,1)");
        assert_eq!(comparator("uni1").compare(&g, &g, Sense::Maximize), Err(Error::UnboundedSupport));
        assert_eq!(comparator("hist:0.1").compare(&g, &g, Sense::Maximize), Err(Error::UnboundedSupport));
        let one = UncertainValue::from_samples(vec![1.0]).unwrap();
        assert_eq!(comparator("gauss").compare(&one, &one, Sense::Maximize), Err(Error::DegenerateVariance));
        let sorted_only = UncertainValue::from_samples(vec![1.0, 2.0]).unwrap();
        assert!(matches!(comparator("pw").compare(&sorted_only, &sorted_only, Sense::Maximize), Err(Error::WrongRepresentation { .. })));
        let c = comparator("emp");
        assert!(matches!(
            c.probability(&Prepared::Mean(1.0), &Prepared::Mean(0.0)),
            Err(Error::NotProbabilistic(_))
        ));
    }

    #[test]
    fn decision_only_rows() {
        let a = UncertainValue::from_samples(vec![0.5, 0.5]).unwrap();
        let b = UncertainValue::from_samples(vec![0.4, 0.4]).unwrap();
        let r = comparator("mean").compare(&a, &b, Sense::Maximize).unwrap();
        assert_eq!(r.csv_row(Operator::Mean), "mean,,,better");
        let r = comparator("threestage").compare(&a, &b, Sense::Minimize).unwrap();
        assert_eq!(r.decision, Decision::Worse);
    }

    #[test]
    fn pairwise_uses_draw_order() {
        let a = UncertainValue::from_draws(vec![0.9, 0.2, 0.7]).unwrap();
        let b = UncertainValue::from_draws(vec![0.1, 0.3, 0.5]).unwrap();
        let r = comparator("pw").compare(&a, &b, Sense::Maximize).unwrap();
        assert_eq!(r.p_greater, Some(2.0 / 3.0));
        assert_eq!(r.p_less, Some(1.0 / 3.0));
        let short = UncertainValue::from_draws(vec![0.1]).unwrap();
        assert_eq!(comparator("pw").compare(&a, &short, Sense::Maximize), Err(Error::PairingError { left: 3, right: 1 }));
    }

    #[test]
    fn pairwise_on_closed_forms_samples() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let cfg = OperatorConfig { pairwise_samples: 20_000, ..Default::default() };
        let c = Comparator::new(Operator::Pairwise, cfg).unwrap();
        let r = c.compare_with_rng(&closed("uniform(0,2)"), &closed("uniform(1,3)"), Sense::Maximize, &mut rng).unwrap();
        assert!((r.p_greater.unwrap() - 0.125).abs() < 0.02);
    }

    #[test]
    fn closed_form_emp_uses_quantile_points() {
        let c = comparator("emp");
        let Prepared::Sorted(p) = c.prepare(&closed("uniform(0,1)")).unwrap() else { panic!() };
        assert_eq!(p.len(), 20);
        let Prepared::Sorted(r) = comparator("reduce").prepare(&closed("uniform(0,1)")).unwrap() else { panic!() };
        assert_eq!(r.len(), 5);
    }

    #[test]
    fn uniform_matches_oracle_on_overlaps() {
        let pairs = [("uniform(0,2)", "uniform(1,3)"), ("uniform(0,4)", "uniform(1,2)"), ("uniform(0.3,0.9)", "uniform(0.2,0.8)")];
        for (a, b) in pairs {
            let (sa, sb): (DistributionSpec, DistributionSpec) = (a.parse().unwrap(), b.parse().unwrap());
            let exact = prob_greater_uniform(sa.support().unwrap(), sb.support().unwrap());
            let oracle = oracle_dominance(&sa, &sb, 200_000);
            assert!((exact - oracle).abs() < 1e-8, "{a} vs {b}: {exact} vs {oracle}");
        }
    }

    /// `(P(A > B), P(B > A))` pairs; the two never sum past one.
    fn probs() -> impl Strategy<Value = (f64, f64)> {
        (0.0..=1.0f64, 0.0..=1.0f64).prop_map(|(p, t)| (p, (1.0 - p) * t))
    }

    proptest! {
        #[test]
        fn raising_gamma_keeps_indifference((p, q) in probs(), g1 in 0.5..=1.0f64, g2 in 0.5..=1.0f64) {
            let (lo, hi) = if g1 <= g2 { (g1, g2) } else { (g2, g1) };
            for sense in [Sense::Maximize, Sense::Minimize] {
                if decide(p, q, lo, sense) == Decision::Indifferent {
                    prop_assert_eq!(decide(p, q, hi, sense), Decision::Indifferent);
                }
            }
        }

        #[test]
        fn sense_antisymmetry((p, q) in probs(), g in 0.5..=1.0f64) {
            prop_assert_eq!(
                decide(p, q, g, Sense::Maximize) == Decision::Better,
                decide(p, q, g, Sense::Minimize) == Decision::Worse
            );
        }

        #[test]
        fn report_probabilities_are_bounded(
            a in prop::collection::vec(0u8..20, 1..40),
            b in prop::collection::vec(0u8..20, 1..40),
        ) {
            let a = UncertainValue::from_samples(a.into_iter().map(|x| f64::from(x) / 20.0).collect()).unwrap();
            let b = UncertainValue::from_samples(b.into_iter().map(|x| f64::from(x) / 20.0).collect()).unwrap();
            for op in ["emp", "reduce", "uni1", "hist:0.1"] {
                let r = comparator(op).compare(&a, &b, Sense::Maximize).unwrap();
                let (pg, pl) = (r.p_greater.unwrap(), r.p_less.unwrap());
                prop_assert!((0.0..=1.0).contains(&pg) && (0.0..=1.0).contains(&pl));
                prop_assert!(pg + pl <= 1.0 + 1e-9);
                prop_assert_eq!(r.decision, decide(pg, pl, 0.7, Sense::Maximize));
            }
        }
    }
}
