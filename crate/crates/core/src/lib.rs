//! Comparison of candidate solutions whose objectives are uncertain.
//!
//! The crate estimates `P(f(A) > f(B))` for arbitrarily distributed
//! objective values with a family of operators (paired sampling, uniform
//! and Gaussian approximations, fixed-width histograms, and merge-scan
//! comparison of sorted empirical distributions and their square-root
//! reductions), lifts the per-objective decisions to Pareto dominance,
//! and drives an NSGA-II over the uncertain DTLZ problems in
//! [`benchmarks`]. [`metrics`] scores the resulting fronts.

pub mod benchmarks;
pub mod compare;
pub mod dominance;
pub mod error;
pub mod metrics;
pub mod optimizer;
pub mod uncertain;

pub use error::{Error, Result};
