//! Merge-scan comparison of sorted sample lists.

use crate::uncertain::SamplePopulation;

/// Number of pairs `(i, j)` with `a[i] > b[j]`, for ascending `a` and `b`.
///
/// Single pass over both lists: for each `a[i]` the cursor into `b` is
/// advanced past every element strictly smaller than `a[i]`, and the
/// cursor position is the number of such elements.
pub fn count_greater_pairs(a: &[f64], b: &[f64]) -> u64 {
    let mut j = 0usize;
    let mut pairs = 0u64;
    for &ai in a {
        while j < b.len() && ai > b[j] {
            j += 1;
        }
        pairs += j as u64;
    }
    pairs
}

/// `P(A > B)` between two empirical distributions, ties counting zero.
pub fn compare_sorted(a: &[f64], b: &[f64]) -> f64 {
    count_greater_pairs(a, b) as f64 / (a.len() as f64 * b.len() as f64)
}

pub fn compare_empirical(a: &SamplePopulation, b: &SamplePopulation) -> f64 {
    compare_sorted(a.as_slice(), b.as_slice())
}

/// [`compare_empirical`] on the square-root reductions of both inputs.
pub fn compare_reduced(a: &SamplePopulation, b: &SamplePopulation) -> f64 {
    compare_empirical(&a.reduce(), &b.reduce())
}
