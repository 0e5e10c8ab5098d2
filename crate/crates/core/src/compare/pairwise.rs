//! Index-paired comparison of two sample streams.

use crate::error::{Error, Result};

/// Fraction of indices `i` with `a[i] > b[i]`.
///
/// The samples must be in draw order; sorting either side first would
/// pair order statistics instead of independent draws.
pub fn compare_pairwise(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() || a.is_empty() {
        return Err(Error::PairingError { left: a.len(), right: b.len() });
    }
    let wins = a.iter().zip(b).filter(|(x, y)| x > y).count();
    Ok(wins as f64 / a.len() as f64)
}
