use crate::poly::Poly;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Exact polynomial division failed; the remainder is kept for
    /// diagnostics.
    #[error("not divisible: remainder {remainder}")]
    NotDivisible { remainder: Poly },

    /// A stated precondition of a theorem or operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An enumeration would exceed the configured step bound.
    #[error("enumeration of {steps}-step objects exceeds the limit of {limit} steps")]
    LimitExceeded { steps: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
