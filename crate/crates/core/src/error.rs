use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an odd prime (only odd prime fields are supported)")]
    NotAnOddPrime(u64),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    #[error("expected a subspace of positive dimension {expected}, got dimension {found}")]
    DimensionTooSmall { expected: usize, found: usize },

    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: String,
        needed: u128,
        budget: u128,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not a Heisenberg algebra: {0}")]
    NotHeisenberg(String),

    #[error("plane is not in chart {0:?}: the minor on those rows vanishes")]
    ChartMismatch(Vec<usize>),

    #[error("{0} out of range")]
    OutOfRange(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("the p-map of {0} is not identically zero")]
    NonTrivialPMap(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn budget(what: impl Into<String>, needed: u128, budget: u128) -> Self {
        Error::BudgetExceeded {
            what: what.into(),
            needed,
            budget,
        }
    }
}
