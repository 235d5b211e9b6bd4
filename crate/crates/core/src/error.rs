use crate::rational::Int;

/// Errors shared by all polygon operations.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("invalid map: determinant must be +1 or -1, got {0}")]
    InvalidMap(Int),
    #[error("denominator too large: got {0}, operation requires at most {1}")]
    DenominatorTooLarge(Int, u64),
    #[error("polygon is not pseudo-integral")]
    NotPseudoIntegral,
    #[error("origin is not strictly interior to the polygon")]
    OriginNotInterior,
    #[error("polygon is not a lattice polygon")]
    NotLattice,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("internal consistency check failed: {0}")]
    InternalCheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
