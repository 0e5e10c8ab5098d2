//! Comparison under a Gaussian model of both values.

/// `P(A > B)` for independent Gaussians given by mean and variance.
///
/// With both variances zero the comparison degenerates to the means and
/// returns 0, 1/2 or 1.
pub fn prob_greater_gauss(mean_a: f64, var_a: f64, mean_b: f64, var_b: f64) -> f64 {
    let spread = var_a + var_b;
    if spread <= 0.0 {
        return match mean_a.partial_cmp(&mean_b) {
            Some(std::cmp::Ordering::Greater) => 1.0,
            Some(std::cmp::Ordering::Equal) => 0.5,
            _ => 0.0,
        };
    }
    0.5 * (1.0 + libm::erf((mean_a - mean_b) / (2.0 * spread).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples() {
        assert_eq!(prob_greater_gauss(0.0, 1.0, 0.0, 1.0), 0.5);
        // Phi(1 / sqrt(2)) and 1/2 (1 + erf(-1.5)).
        assert!((prob_greater_gauss(1.0, 1.0, 0.0, 1.0) - 0.760_249_938_906_524_3).abs() < 1e-9);
        assert!((prob_greater_gauss(0.0, 1.0, 3.0, 1.0) - 0.016_947_426_762_344_62).abs() < 1e-9);
    }

    #[test]
    fn zero_variance_falls_back_to_means() {
        assert_eq!(prob_greater_gauss(1.0, 0.0, 0.0, 0.0), 1.0);
        assert_eq!(prob_greater_gauss(0.0, 0.0, 0.0, 0.0), 0.5);
        assert_eq!(prob_greater_gauss(-1.0, 0.0, 0.0, 0.0), 0.0);
    }
}
