use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid positions: {0}")]
    InvalidPositions(String),

    /// A stated hypothesis of the requested operation does not hold for the
    /// given input. The message names the violated hypothesis.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exhaustive scan was refused because it would exceed the work budget.
    #[error("work budget exceeded: operation needs {needed} units, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },

    /// A constructed witness failed its final shape certification. This
    /// indicates a bug, never bad input.
    #[error("witness certification failed: expected shape {expected}, got {got}")]
    CertificationFailed { expected: String, got: String },

    #[error("count cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
