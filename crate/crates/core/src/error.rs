use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    InvalidPrime(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("subspace is not contained in the given ambient subspace")]
    NotContained,

    #[error("enumeration budget exceeded: {needed} elements exceed cap {cap}")]
    EnumerationBudget { needed: u128, cap: u64 },

    #[error("enveloping algebra dimension {dim} exceeds dimension cap {cap}")]
    DimensionCap { dim: u128, cap: usize },

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("element is not parity-homogeneous")]
    NotHomogeneous,

    #[error("algebra has no parity grading")]
    NoGrading,

    #[error("invalid algebra data: {0}")]
    InvalidData(String),

    #[error("axiom violated: {0}")]
    Axiom(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors that mean "a configured budget was too small", as
    /// opposed to bad input or a mathematical failure.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::EnumerationBudget { .. } | Error::DimensionCap { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
