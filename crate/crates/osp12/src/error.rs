//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("tensor leg {leg} out of range for arity {arity}")]
    LegOutOfRange { leg: usize, arity: usize },

    #[error("tensor legs collide: both are {leg}")]
    LegCollision { leg: usize },

    #[error("invalid arity {n}: {reason}")]
    InvalidArity { n: usize, reason: String },

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("invalid permutation word: letter {letter} not in 1..{max}")]
    InvalidWordLetter { letter: usize, max: usize },

    #[error("path does not map K to A: K={k:?}, word image={image:?}, A={a:?}")]
    PathMismatch {
        k: Vec<usize>,
        image: Vec<usize>,
        a: Vec<usize>,
    },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("memory budget exceeded: need {needed} bytes, budget {budget} bytes")]
    BudgetExceeded { needed: u64, budget: u64 },

    #[error("representation fixture rejected: {0}")]
    BadRepresentation(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
