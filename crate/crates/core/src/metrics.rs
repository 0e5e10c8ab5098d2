//! Quality indicators for approximation fronts (all objectives minimized).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::optimizer::{RunRecord, Snapshot, SnapshotEntry};

/// Default grid divisions per objective for [`dci`].
pub const DEFAULT_DIVISIONS: usize = 20;

/// A mean objective vector, optionally with per-objective sample bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontPoint {
    pub mean: Vec<f64>,
    pub bounds: Option<Vec<(f64, f64)>>,
}

impl FrontPoint {
    pub fn new(mean: Vec<f64>) -> Self {
        Self { mean, bounds: None }
    }

    pub fn with_bounds(mean: Vec<f64>, min: &[f64], max: &[f64]) -> Self {
        let bounds = min.iter().zip(max).map(|(&lo, &hi)| (lo, hi)).collect();
        Self { mean, bounds: Some(bounds) }
    }

    pub fn from_entry(e: &SnapshotEntry) -> Self {
        Self::with_bounds(e.mean.clone(), &e.min, &e.max)
    }
}

/// Rank-0 points of a snapshot.
pub fn first_front(snapshot: &Snapshot) -> Vec<FrontPoint> {
    snapshot.first_front().map(FrontPoint::from_entry).collect()
}

/// `a` weakly better everywhere and strictly better somewhere.
pub fn crisp_dominates(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y) && a.iter().zip(b).any(|(x, y)| x < y)
}

/// Non-dominated mean vectors of the union of `fronts`, first occurrence
/// of each duplicate kept.
pub fn build_reference_front(fronts: &[Vec<FrontPoint>]) -> Result<Vec<FrontPoint>> {
    let mut union: Vec<Vec<f64>> = Vec::new();
    for p in fronts.iter().flatten() {
        if !union.contains(&p.mean) {
            union.push(p.mean.clone());
        }
    }
    if union.is_empty() {
        return Err(Error::EmptyReference);
    }
    let m = union[0].len();
    if union.iter().any(|p| p.len() != m || p.iter().any(|v| !v.is_finite())) {
        return Err(Error::IndicatorDomainError("reference points must be finite and of equal dimension".into()));
    }
    Ok(union
        .iter()
        .filter(|p| !union.iter().any(|q| crisp_dominates(q, p)))
        .map(|p| FrontPoint::new(p.clone()))
        .collect())
}

/// Which form of the epsilon indicator to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsilonKind {
    /// Smallest factor by which the approximation must be scaled.
    Multiplicative,
    /// Smallest amount by which the approximation must be shifted.
    Additive,
}

impl EpsilonKind {
    /// Multiplicative when every component is strictly positive.
    pub fn for_points<'a>(points: impl IntoIterator<Item = &'a [f64]>) -> Self {
        let mut points = points.into_iter();
        if points.all(|p| p.iter().all(|&v| v > 0.0)) {
            EpsilonKind::Multiplicative
        } else {
            EpsilonKind::Additive
        }
    }

    /// CSV column name.
    pub fn column(self) -> &'static str {
        match self {
            EpsilonKind::Multiplicative => "eps",
            EpsilonKind::Additive => "eps_add",
        }
    }
}

fn check_fronts(approx: &[Vec<f64>], reference: &[Vec<f64>]) -> Result<()> {
    if approx.is_empty() || reference.is_empty() {
        return Err(Error::IndicatorDomainError("fronts must be non-empty".into()));
    }
    let m = reference[0].len();
    if approx.iter().chain(reference).any(|p| p.len() != m) {
        return Err(Error::IndicatorDomainError("points differ in dimension".into()));
    }
    Ok(())
}

fn epsilon_with(approx: &[Vec<f64>], reference: &[Vec<f64>], term: impl Fn(f64, f64) -> f64) -> f64 {
    reference
        .iter()
        .map(|r| {
            approx
                .iter()
                .map(|a| a.iter().zip(r).map(|(&ai, &ri)| term(ai, ri)).fold(f64::NEG_INFINITY, f64::max))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

/// `max_r min_a max_i a_i / r_i`. Needs strictly positive components.
pub fn epsilon_multiplicative(approx: &[Vec<f64>], reference: &[Vec<f64>]) -> Result<f64> {
    check_fronts(approx, reference)?;
    if let Some(bad) = approx.iter().chain(reference).flatten().find(|v| !(**v > 0.0 && v.is_finite())) {
        return Err(Error::IndicatorDomainError(format!(
            "multiplicative epsilon needs positive objectives, found {bad}"
        )));
    }
    Ok(epsilon_with(approx, reference, |a, r| a / r))
}

/// `max_r min_a max_i (a_i - r_i)`.
pub fn epsilon_additive(approx: &[Vec<f64>], reference: &[Vec<f64>]) -> Result<f64> {
    check_fronts(approx, reference)?;
    Ok(epsilon_with(approx, reference, |a, r| a - r))
}

pub fn epsilon(kind: EpsilonKind, approx: &[Vec<f64>], reference: &[Vec<f64>]) -> Result<f64> {
    match kind {
        EpsilonKind::Multiplicative => epsilon_multiplicative(approx, reference),
        EpsilonKind::Additive => epsilon_additive(approx, reference),
    }
}

/// Per-dimension grid over an explicit box.
struct Grid {
    lo: Vec<f64>,
    width: Vec<f64>,
    cells: Vec<usize>,
}

impl Grid {
    fn new(lo: &[f64], hi: &[f64], divisions: usize) -> Self {
        let width: Vec<f64> = lo.iter().zip(hi).map(|(l, h)| h - l).collect();
        let cells = width.iter().map(|&w| if w > 0.0 { divisions } else { 1 }).collect();
        Self { lo: lo.to_vec(), width, cells }
    }

    fn cell(&self, p: &[f64]) -> Vec<usize> {
        p.iter()
            .enumerate()
            .map(|(d, &v)| {
                if self.cells[d] == 1 {
                    return 0;
                }
                let t = ((v - self.lo[d]) / self.width[d] * self.cells[d] as f64).floor();
                (t.max(0.0) as usize).min(self.cells[d] - 1)
            })
            .collect()
    }

    fn diameter(&self) -> f64 {
        self.cells.iter().map(|&c| ((c - 1) as f64).powi(2)).sum::<f64>().sqrt()
    }
}

/// Grid diversity of `approx` relative to `reference`, with the grid
/// spanning the bounding box of both fronts.
pub fn dci(approx: &[Vec<f64>], reference: &[Vec<f64>], divisions: usize) -> Result<f64> {
    check_fronts(approx, reference)?;
    let m = reference[0].len();
    let mut lo = vec![f64::INFINITY; m];
    let mut hi = vec![f64::NEG_INFINITY; m];
    for p in approx.iter().chain(reference) {
        for d in 0..m {
            lo[d] = lo[d].min(p[d]);
            hi[d] = hi[d].max(p[d]);
        }
    }
    dci_in_box(approx, reference, divisions, &lo, &hi)
}

/// [`dci`] over the box `[lo, hi]`.
///
/// Sums, over the occupied approximation cells, the distance in cell units
/// to the nearest occupied reference cell, and scales it by the sum that
/// would result if every such cell sat one grid diameter away.
pub fn dci_in_box(approx: &[Vec<f64>], reference: &[Vec<f64>], divisions: usize, lo: &[f64], hi: &[f64]) -> Result<f64> {
    check_fronts(approx, reference)?;
    if divisions == 0 {
        return Err(Error::ConfigError("grid needs at least one division".into()));
    }
    if approx.iter().chain(reference).flatten().any(|v| !v.is_finite()) {
        return Err(Error::IndicatorDomainError("non-finite objective value".into()));
    }
    let grid = Grid::new(lo, hi, divisions);
    let approx_cells: BTreeSet<Vec<usize>> = approx.iter().map(|p| grid.cell(p)).collect();
    let ref_cells: BTreeSet<Vec<usize>> = reference.iter().map(|p| grid.cell(p)).collect();

    let dist = |a: &[usize], b: &[usize]| {
        a.iter().zip(b).map(|(&x, &y)| (x as f64 - y as f64).powi(2)).sum::<f64>().sqrt()
    };
    let d: f64 = approx_cells
        .iter()
        .map(|a| ref_cells.iter().map(|r| dist(a, r)).fold(f64::INFINITY, f64::min))
        .sum();
    let d_max = approx_cells.len() as f64 * grid.diameter();
    if d_max == 0.0 {
        return Ok(1.0);
    }
    Ok((1.0 - d / d_max).clamp(0.0, 1.0))
}

/// Mean Euclidean length of the per-objective worst-minus-best ranges.
pub fn diagonal_distance(points: &[FrontPoint]) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::IndicatorDomainError("no solutions".into()));
    }
    let mut total = 0.0;
    for p in points {
        let bounds = p.bounds.as_ref().ok_or(Error::MissingBounds)?;
        total += bounds.iter().map(|(lo, hi)| (hi - lo).powi(2)).sum::<f64>().sqrt();
    }
    Ok(total / points.len() as f64)
}

/// Element `floor((k - 1) / 2)` of the sorted values.
pub fn lower_median(values: &[f64]) -> Result<f64> {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    v.get(v.len().saturating_sub(1) / 2).copied().ok_or(Error::NoRuns)
}

/// Index of the run whose final epsilon is the lower median.
pub fn median_run_selection(records: &[RunRecord], reference: &[FrontPoint], kind: EpsilonKind) -> Result<usize> {
    let refs: Vec<Vec<f64>> = reference.iter().map(|p| p.mean.clone()).collect();
    let mut scored = Vec::with_capacity(records.len());
    for (i, r) in records.iter().enumerate() {
        let snap = r.final_snapshot().ok_or(Error::NoRuns)?;
        let approx: Vec<Vec<f64>> = first_front(snap).into_iter().map(|p| p.mean).collect();
        scored.push((epsilon(kind, &approx, &refs)?, i));
    }
    median_index(&scored)
}

/// Position of the lower median in `(score, index)` pairs, ties by index.
fn median_index(scored: &[(f64, usize)]) -> Result<usize> {
    if scored.is_empty() {
        return Err(Error::NoRuns);
    }
    let mut s = scored.to_vec();
    s.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(s[(s.len() - 1) / 2].1)
}

/// Indicator values for one generation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenerationMetrics {
    pub gen: usize,
    pub eps: f64,
    pub dci: f64,
    pub diag: f64,
}

/// Epsilon, DCI and diagonal distance of the first front of every snapshot.
pub fn run_metrics(record: &RunRecord, reference: &[FrontPoint], kind: EpsilonKind, divisions: usize) -> Result<Vec<GenerationMetrics>> {
    let refs: Vec<Vec<f64>> = reference.iter().map(|p| p.mean.clone()).collect();
    record
        .snapshots
        .iter()
        .map(|snap| {
            let front = first_front(snap);
            let approx: Vec<Vec<f64>> = front.iter().map(|p| p.mean.clone()).collect();
            Ok(GenerationMetrics {
                gen: snap.gen,
                eps: epsilon(kind, &approx, &refs)?,
                dci: dci(&approx, &refs, divisions)?,
                diag: diagonal_distance(&front)?,
            })
        })
        .collect()
}

/// `gen,eps,dci,diag` (or `eps_add` for the additive form).
pub fn metrics_csv(kind: EpsilonKind, rows: &[GenerationMetrics]) -> String {
    let mut out = format!("gen,{},dci,diag\n", kind.column());
    for r in rows {
        writeln!(out, "{},{},{},{}", r.gen, r.eps, r.dci, r.diag).unwrap();
    }
    out
}

/// Per-generation lower medians across runs: `gen,eps_med,dci_med,diag_med`.
pub fn median_metrics_csv(kind: EpsilonKind, runs: &[Vec<GenerationMetrics>]) -> Result<String> {
    let first = runs.first().ok_or(Error::NoRuns)?;
    if runs.iter().any(|r| r.len() != first.len()) {
        return Err(Error::ConfigError("runs cover different numbers of generations".into()));
    }
    let mut out = format!("gen,{}_med,dci_med,diag_med\n", kind.column());
    for (g, row) in first.iter().enumerate() {
        let col = |f: fn(&GenerationMetrics) -> f64| -> Result<f64> {
            lower_median(&runs.iter().map(|r| f(&r[g])).collect::<Vec<_>>())
        };
        writeln!(out, "{},{},{},{}", row.gen, col(|r| r.eps)?, col(|r| r.dci)?, col(|r| r.diag)?).unwrap();
    }
    Ok(out)
}

/// Mean vectors as CSV with header `f1,..,fm`.
pub fn front_to_csv(points: &[FrontPoint]) -> String {
    let m = points.first().map_or(0, |p| p.mean.len());
    let mut out = (1..=m).map(|i| format!("f{i}")).collect::<Vec<_>>().join(",");
    out.push('\n');
    for p in points {
        let row: Vec<String> = p.mean.iter().map(f64::to_string).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Parses [`front_to_csv`] output.
pub fn front_from_csv(text: &str) -> Result<Vec<FrontPoint>> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    let m = header.trim().split(',').count();
    let expected = (1..=m).map(|i| format!("f{i}")).collect::<Vec<_>>().join(",");
    if header.trim() != expected {
        return Err(Error::parse(1, "header must be f1,..,fm"));
    }
    let mut points = Vec::new();
    for (i, line) in lines {
        let values = line
            .trim()
            .split(',')
            .map(|s| s.parse::<f64>().ok().filter(|v| v.is_finite()))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::parse(i + 1, "bad number"))?;
        if values.len() != m {
            return Err(Error::parse(i + 1, format!("expected {m} values, got {}", values.len())));
        }
        points.push(FrontPoint::new(values));
    }
    if points.is_empty() {
        return Err(Error::EmptyReference);
    }
    Ok(points)
}
