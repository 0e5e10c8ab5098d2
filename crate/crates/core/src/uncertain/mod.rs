//! Uncertain objective values: closed-form distributions and sorted sample
//! populations, with the statistics every comparison operator consumes.

mod population;
mod spec;
mod value;

pub use population::SamplePopulation;
pub use spec::{DistributionSpec, Family};
pub use value::{equiprobable_points, Source, SummaryStats, UncertainValue};
