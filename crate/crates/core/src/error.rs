use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be at least 1")]
    EmptyOrder,

    #[error("expected {expected} initial values for {what}, got {found}")]
    InitialLength {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("horizon shorter than initial data (need at least index {min}, got {requested})")]
    HorizonTooShort { min: usize, requested: usize },

    #[error("horizon of {requested} terms exceeds the limit of {limit}")]
    HorizonTooLong { requested: usize, limit: usize },

    #[error("sequence too short: need at least {min} terms, got {found}")]
    SequenceTooShort { min: usize, found: usize },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("maximal piece size must be at least 1, got {0}")]
    PieceSize(usize),

    #[error("invalid scalar {input:?}: {reason}")]
    ParseScalar { input: String, reason: String },

    #[error("invalid system document: {0}")]
    Document(String),
}
