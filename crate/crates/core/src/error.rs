use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomial arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("operation needs a polynomial of degree at least 1")]
    ConstantPolynomial,

    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(String),

    #[error("the ideal is not zero-dimensional (variable x_{} has no pure-power leading monomial)", .0 + 1)]
    NotZeroDimensional(usize),

    #[error("the ideal contains 1; the system has no roots")]
    TrivialIdeal,

    #[error("a root lies on the boundary of the rectangle")]
    BoundaryRoot,

    #[error("invalid scale parameter: {0}")]
    InvalidScale(String),

    #[error("box {index} at level {level} has {candidates} parent candidates")]
    MatchViolation {
        level: usize,
        index: usize,
        candidates: usize,
    },

    #[error("isolation box of width {width} is too wide for lifting (needs < {limit})")]
    LiftPrecondition { width: String, limit: String },

    #[error("LUR ladder invariant violated: {0}")]
    Ladder(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
