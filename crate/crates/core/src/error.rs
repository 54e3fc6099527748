use thiserror::Error;

/// Errors raised by the polynomial engine and the operators built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    /// The divisor does not divide the dividend. Every division performed by
    /// the identity checks is exact, so this flags either a bug or a false claim.
    #[error("not divisible: no exact quotient exists")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("permutation of degree {degree} cannot act on a polynomial of arity {arity}")]
    DegreeMismatch { degree: usize, arity: usize },

    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("n = {n} exceeds the permutation bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("polynomial is not invariant under the stabilizer of the root split")]
    NonInvariantInput,

    #[error("invalid root split: {0}")]
    InvalidSplit(String),

    #[error("{0} is not a partition")]
    NotAPartition(String),

    #[error("{0} is not a strict partition")]
    NotStrict(String),

    #[error("invalid sequence {seq}: {reason}")]
    InvalidSequence { seq: String, reason: String },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
