use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A requested object would exceed the configured dimension cap.
    #[error("requested dimension {requested} exceeds cap {cap}")]
    DimensionCap { requested: usize, cap: usize },

    /// An input violated a documented precondition.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// Both density operators have trivial kernels inside their joint
    /// support, so no detection operator can ever fire without error.
    #[error("no unambiguous strategy exists for this operator pair")]
    NoUnambiguousStrategy,

    /// An iterative routine failed to reach its convergence target.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::ContractViolation(msg.into())
    }
}
