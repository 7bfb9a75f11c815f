use thiserror::Error;

/// Errors raised by the arithmetic and module-theoretic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("generators do not span a full-rank lattice (rank {rank}, expected {expected})")]
    RankError { rank: usize, expected: usize },
    #[error("lattice is not contained in the ambient lattice")]
    NotSublattice,
    #[error("the ideal is zero")]
    EmptyIdeal,
    #[error("operands live over different field towers")]
    ContextError,
    #[error("endomorphism ring is not commutative ([F~:F] = {s} < rank {r})")]
    NonCommutativeEndomorphismRing { s: usize, r: usize },
    #[error("the Frobenius field is inseparable over F; the trace form is degenerate")]
    InseparableExtension,
    #[error("polynomial is not irreducible: {0}")]
    Reducible(String),
    #[error("search space too large: {candidates} candidates (limit {limit})")]
    TooLarge { candidates: u128, limit: u128 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("census violation: {0}")]
    CensusViolation(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
