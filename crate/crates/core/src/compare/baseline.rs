//! Decision-only baselines: mean comparison and the three-stage test.

use super::{Decision, Sense};

/// Better/Worse by strict mean comparison; equal means are Indifferent.
pub fn compare_mean(mean_a: f64, mean_b: f64, sense: Sense) -> Decision {
    if mean_a > mean_b {
        sense.favoring_greater()
    } else if mean_a < mean_b {
        sense.favoring_greater().reversed()
    } else {
        Decision::Indifferent
    }
}

/// What the three-stage test needs to know about one value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Profile {
    pub lower: f64,
    pub upper: f64,
    pub mean: f64,
    pub q025: f64,
    pub q975: f64,
}

impl Profile {
    fn spread(&self) -> f64 {
        self.q975 - self.q025
    }
}

/// Stage 1 compares bounds, stage 2 means relative to the joint range,
/// stage 3 the widths of the central 95% intervals.
pub fn compare_three_stage(a: &Profile, b: &Profile, mean_threshold: f64, spread_threshold: f64, sense: Sense) -> Decision {
    if a.lower > b.upper {
        return sense.favoring_greater();
    }
    if a.upper < b.lower {
        return sense.favoring_greater().reversed();
    }

    let union_width = a.upper.max(b.upper) - a.lower.min(b.lower);
    if (a.mean - b.mean).abs() > mean_threshold * union_width {
        return compare_mean(a.mean, b.mean, sense);
    }

    let (sa, sb) = (a.spread(), b.spread());
    if (sa - sb).abs() > spread_threshold * sa.max(sb) {
        return if sa < sb { Decision::Better } else { Decision::Worse };
    }
    Decision::Indifferent
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(lower: f64, upper: f64, mean: f64, q025: f64, q975: f64) -> Profile {
        Profile { lower, upper, mean, q025, q975 }
    }

    #[test]
    fn mean_rule() {
        assert_eq!(compare_mean(0.5, 0.4, Sense::Maximize), Decision::Better);
        assert_eq!(compare_mean(0.5, 0.5, Sense::Maximize), Decision::Indifferent);
        assert_eq!(compare_mean(0.5, 0.4, Sense::Minimize), Decision::Worse);
    }

    #[test]
    fn stage_one_disjoint() {
        let a = profile(2.0, 3.0, 2.5, 2.1, 2.9);
        let b = profile(0.0, 1.0, 0.5, 0.1, 0.9);
        assert_eq!(compare_three_stage(&a, &b, 0.1, 0.3, Sense::Maximize), Decision::Better);
        assert_eq!(compare_three_stage(&a, &b, 0.1, 0.3, Sense::Minimize), Decision::Worse);
        assert_eq!(compare_three_stage(&b, &a, 0.1, 0.3, Sense::Maximize), Decision::Worse);
    }

    #[test]
    fn stage_two_means() {
        let a = profile(0.0, 1.0, 0.7, 0.1, 0.9);
        let b = profile(0.0, 1.0, 0.5, 0.1, 0.9);
        assert_eq!(compare_three_stage(&a, &b, 0.1, 0.3, Sense::Maximize), Decision::Better);
    }

    #[test]
    fn stage_three_spread() {
        let a = profile(0.0, 1.0, 0.5, 0.45, 0.55);
        let b = profile(0.0, 1.0, 0.5, 0.1, 0.9);
        assert_eq!(compare_three_stage(&a, &b, 0.1, 0.3, Sense::Maximize), Decision::Better);
        assert_eq!(compare_three_stage(&a, &b, 0.1, 0.3, Sense::Minimize), Decision::Better);
        assert_eq!(compare_three_stage(&b, &a, 0.1, 0.3, Sense::Minimize), Decision::Worse);
    }

    #[test]
    fn identical_and_single_point() {
        let a = profile(0.0, 1.0, 0.5, 0.1, 0.9);
        assert_eq!(compare_three_stage(&a, &a, 0.1, 0.3, Sense::Maximize), Decision::Indifferent);
        let p = profile(0.3, 0.3, 0.3, 0.3, 0.3);
        assert_eq!(compare_three_stage(&p, &p, 0.1, 0.3, Sense::Maximize), Decision::Indifferent);
        let q = profile(0.4, 0.4, 0.4, 0.4, 0.4);
        assert_eq!(compare_three_stage(&q, &p, 0.1, 0.3, Sense::Maximize), Decision::Better);
    }
}
