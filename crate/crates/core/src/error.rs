use thiserror::Error;

/// Errors raised by the uncertain-value, comparison, benchmark, optimizer
/// and metric layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid sample population: {0}")]
    InvalidPopulation(String),

    #[error("variance is undefined for a population of a single sample")]
    DegenerateVariance,

    #[error("operation requires {expected} representation")]
    WrongRepresentation { expected: &'static str },

    #[error("probability {0} outside of the allowed range")]
    InvalidProbability(f64),

    #[error("distribution has unbounded support")]
    UnboundedSupport,

    #[error("invalid distribution: {0}")]
    InvalidSpec(String),

    #[error("paired comparison needs equal lengths, got {left} and {right}")]
    PairingError { left: usize, right: usize },

    #[error("histograms use different interval widths ({0} vs {1})")]
    IncompatibleHistograms(f64, f64),

    #[error("individuals are not comparable: {0}")]
    IncompatibleIndividuals(String),

    #[error("operator `{0}` only yields a decision, not a probability")]
    NotProbabilistic(&'static str),

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),

    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("invalid decision vector: {0}")]
    InvalidDecisionVector(String),

    #[error("invalid configuration: {0}")]
    ConfigError(String),

    #[error("reference front is empty")]
    EmptyReference,

    #[error("indicator undefined: {0}")]
    IndicatorDomainError(String),

    #[error("front point has no objective bounds")]
    MissingBounds,

    #[error("no runs to select from")]
    NoRuns,

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
