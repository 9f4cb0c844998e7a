use thiserror::Error;

/// Errors produced by the polynomial substrate and the combinatorial layers above it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact division left a remainder, or a leading term could not be cancelled.
    #[error("polynomial division is not exact: {0}")]
    Indivisible(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    /// A coefficient of the scaled recursion was not divisible by the expected power of two.
    #[error("coefficient not divisible by 2^{exponent} at ({n}, {k})")]
    InternalParity { n: usize, k: usize, exponent: usize },

    #[error("enumeration of {predicted} objects exceeds the budget of {budget}")]
    Resource { predicted: u128, budget: u128 },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
