use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed instance text. `line` is 1-based; 0 means end of input.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A caller violated an operation's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A brute-force oracle was asked to work beyond its enumeration bound.
    #[error("instance too large for exhaustive search: {0}")]
    BoundExceeded(String),

    /// A structural invariant of the algorithms failed. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),

    /// A failure while processing one generated instance.
    #[error("instance n={n} seed={seed}: {source}")]
    Instance { n: usize, seed: u64, source: Box<Error> },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Process exit code used by the command-line tool.
    ///
    /// `1` is reserved for verification failures, which are not errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Precondition(_) | Error::BoundExceeded(_) | Error::Io(_) => 2,
            Error::Internal(_) => 3,
            Error::Instance { source, .. } => source.exit_code(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
