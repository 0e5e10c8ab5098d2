use thiserror::Error;

/// Failures of a harness command, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unparseable input, invalid configuration, schema mismatch.
    #[error("{0}")]
    Input(String),
    /// The chosen operator cannot work on the given representation.
    #[error("{0}")]
    Mismatch(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Mismatch(_) => 3,
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn io(context: impl Into<String>) -> impl FnOnce(std::io::Error) -> Self {
        let context = context.into();
        move |source| CliError::Io { context, source }
    }
}

impl From<probdom::Error> for CliError {
    fn from(e: probdom::Error) -> Self {
        use probdom::Error as E;
        match e {
            E::WrongRepresentation { .. }
            | E::UnboundedSupport
            | E::NotProbabilistic(_)
            | E::IncompatibleHistograms(..)
            | E::PairingError { .. } => CliError::Mismatch(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
