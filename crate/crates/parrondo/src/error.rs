use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter was rejected before any work started.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Malformed input data, e.g. an unparseable CSV cell.
    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },

    /// Structurally valid input that violates a domain invariant.
    #[error("validation error: {0}")]
    Validation(String),

    /// The capital-residue chain has an absorbing coin and no stationary
    /// distribution.
    #[error("non-ergodic chain: win probability {prob} in residue state {state}")]
    NonErgodic { state: usize, prob: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
