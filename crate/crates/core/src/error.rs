use thiserror::Error;

/// Errors produced across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("divisibility precondition failed: {0}")]
    Divisibility(String),
    #[error("rows span a lattice of rank {found}, expected {expected}")]
    Rank { expected: usize, found: usize },
    #[error("lattice dimension {dim} exceeds the enumeration cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("class r = {r} needs a {dim}-dimensional enumeration, above the cap {cap}")]
    Cap { r: u32, dim: usize, cap: usize },
    #[error("invalid factor: {0}")]
    Factor(String),
    #[error("enumeration cancelled by deadline")]
    Cancelled,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for the errors that come from exceeding the enumeration budget.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::Cap { .. } | Error::DimensionCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
