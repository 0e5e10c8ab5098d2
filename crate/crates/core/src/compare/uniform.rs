//! Comparison under a uniform model of both values.

/// `P(A > B)` for `A ~ U(a.0, a.1)` and `B ~ U(b.0, b.1)`.
///
/// Zero-width intervals are point masses; two equal points give one half.
pub fn prob_greater_uniform(a: (f64, f64), b: (f64, f64)) -> f64 {
    let (a_lo, a_hi) = a;
    let (b_lo, b_hi) = b;
    let wa = a_hi - a_lo;
    let wb = b_hi - b_lo;

    if wa == 0.0 && wb == 0.0 {
        return match a_lo.partial_cmp(&b_lo) {
            Some(std::cmp::Ordering::Greater) => 1.0,
            Some(std::cmp::Ordering::Equal) => 0.5,
            _ => 0.0,
        };
    }
    if a_hi <= b_lo {
        return 0.0;
    }
    if b_hi <= a_lo {
        return 1.0;
    }
    if wa == 0.0 {
        return ((a_lo - b_lo) / wb).clamp(0.0, 1.0);
    }
    if wb == 0.0 {
        return ((a_hi - b_lo) / wa).clamp(0.0, 1.0);
    }

    // P(A > B) = P(A > B, A <= upper(B)) + P(A > upper(B)).
    let lo = a_lo.max(b_lo);
    let hi = a_hi.min(b_hi);
    let inside = if hi > lo { ((hi - b_lo).powi(2) - (lo - b_lo).powi(2)) / (2.0 * wa * wb) } else { 0.0 };
    let above = (a_hi - a_lo.max(b_hi)).max(0.0) / wa;
    (inside + above).clamp(0.0, 1.0)
}

/// The uniform interval with the given mean and variance.
pub fn interval_from_moments(mean: f64, variance: f64) -> (f64, f64) {
    let half = (3.0 * variance).sqrt();
    (mean - half, mean + half)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples() {
        assert_eq!(prob_greater_uniform((0.0, 1.0), (0.0, 1.0)), 0.5);
        assert_eq!(prob_greater_uniform((2.0, 3.0), (0.0, 1.0)), 1.0);
        assert_eq!(prob_greater_uniform((0.0, 1.0), (2.0, 3.0)), 0.0);
        assert!((prob_greater_uniform((0.0, 2.0), (1.0, 3.0)) - 0.125).abs() < 1e-15);
        let a = interval_from_moments(1.0, 1.0 / 12.0);
        let b = interval_from_moments(0.5, 1.0 / 12.0);
        assert!((prob_greater_uniform(a, b) - 0.875).abs() < 1e-12);
        let far = interval_from_moments(10.0, 1.0 / 12.0);
        assert_eq!(prob_greater_uniform(far, interval_from_moments(0.0, 1.0 / 12.0)), 1.0);
    }

    #[test]
    fn point_masses() {
        assert_eq!(prob_greater_uniform((0.5, 0.5), (0.5, 0.5)), 0.5);
        assert_eq!(prob_greater_uniform((0.6, 0.6), (0.5, 0.5)), 1.0);
        assert_eq!(prob_greater_uniform((0.25, 0.25), (0.0, 1.0)), 0.25);
        assert_eq!(prob_greater_uniform((0.0, 1.0), (0.25, 0.25)), 0.75);
    }

    #[test]
    fn nested_intervals() {
        // A = U(0, 4) around B = U(1, 2): P = 1/4 * 1/2 + 2/4.
        assert!((prob_greater_uniform((0.0, 4.0), (1.0, 2.0)) - 0.625).abs() < 1e-15);
        assert!((prob_greater_uniform((1.0, 2.0), (0.0, 4.0)) - 0.375).abs() < 1e-15);
    }
}
