//! Non-dominated sorting and crowding distance.

use crate::compare::{Comparator, Prepared, Sense};
use crate::dominance::{dominance_matrix, non_dominated_among};
use crate::error::Result;

/// Partitions `0..matrix.len()` into fronts by repeatedly removing the
/// members no remaining member dominates.
///
/// Probabilistic dominance can be cyclic; when every remaining member is
/// dominated by another one, they form a single last front.
pub fn peel_fronts(matrix: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let mut remaining: Vec<usize> = (0..matrix.len()).collect();
    let mut fronts = Vec::new();
    while !remaining.is_empty() {
        let mut front = non_dominated_among(matrix, &remaining);
        if front.is_empty() {
            front = std::mem::take(&mut remaining);
        } else {
            remaining.retain(|i| !front.contains(i));
        }
        fronts.push(front);
    }
    fronts
}

/// Fronts of prepared objective vectors under `comparator`.
pub fn fast_nondominated_sort(prepared: &[Vec<Prepared>], comparator: &Comparator, senses: &[Sense]) -> Result<Vec<Vec<usize>>> {
    Ok(peel_fronts(&dominance_matrix(prepared, comparator, senses)?))
}

/// Crowding distance of every point of one front, on mean objectives.
///
/// Extremes of each objective get infinity; a zero range adds nothing.
pub fn crowding_distance(points: &[Vec<f64>]) -> Vec<f64> {
    let n = points.len();
    let mut d = vec![0.0; n];
    if n <= 2 {
        return vec![f64::INFINITY; n];
    }
    let m = points[0].len();
    for obj in 0..m {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| points[i][obj].total_cmp(&points[j][obj]));
        let range = points[order[n - 1]][obj] - points[order[0]][obj];
        if range <= 0.0 {
            continue;
        }
        d[order[0]] = f64::INFINITY;
        d[order[n - 1]] = f64::INFINITY;
        for w in 1..n - 1 {
            let i = order[w];
            d[i] += (points[order[w + 1]][obj] - points[order[w - 1]][obj]) / range;
        }
    }
    d
}
