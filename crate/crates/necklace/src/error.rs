use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("tuple {tuple:?} is not suitable: {reason}")]
    UnsuitableTuple { tuple: Vec<u32>, reason: String },

    #[error("{what} exceeds the resource limit: requested {requested}, limit {limit}")]
    ResourceLimit {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid constant spec at block {index}: {reason}")]
    SpecValidation { index: usize, reason: String },

    /// A structural guarantee (e.g. nonsingularity of a rotated Pascal
    /// matrix) failed at runtime. Reaching this is a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
