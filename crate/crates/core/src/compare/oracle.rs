//! Numerical ground truth for `P(A > B)` between closed-form distributions.

use crate::uncertain::{DistributionSpec, Family};

/// Resolution at which the oracle is accurate to about `1e-4` or better for
/// uniform, Gaussian and Beta inputs.
pub const DEFAULT_RESOLUTION: usize = 1_000_000;

/// Half-width, in standard deviations, of the window a Gaussian is
/// integrated over.
const GAUSS_SPAN: f64 = 10.0;

fn integration_range(spec: &DistributionSpec) -> (f64, f64) {
    match spec.family() {
        Family::Gaussian { .. } => {
            let (mean, sd) = (spec.mean(), spec.variance().sqrt());
            (mean - GAUSS_SPAN * sd, mean + GAUSS_SPAN * sd)
        }
        _ => spec.support().expect("bounded families have a support"),
    }
}

/// Integrates `P(B < a) dF_A(a)` over the support of `A` with a rectangle
/// rule of `resolution` cells.
///
/// Each cell contributes its exact `A` mass times `F_B` at the cell
/// midpoint, which stays accurate where the density of `A` is singular.
pub fn oracle_dominance(a: &DistributionSpec, b: &DistributionSpec, resolution: usize) -> f64 {
    let resolution = resolution.max(1);
    let (lo, hi) = integration_range(a);
    let h = (hi - lo) / resolution as f64;
    let mut prev = a.cdf(lo);
    let mut sum = 0.0;
    for i in 0..resolution {
        let right = if i + 1 == resolution { hi } else { lo + (i + 1) as f64 * h };
        let next = a.cdf(right);
        let mid = lo + (i as f64 + 0.5) * h;
        sum += (next - prev) * b.cdf(mid);
        prev = next;
    }
    sum.clamp(0.0, 1.0)
}
