use thiserror::Error;

use crate::strata::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed text or JSON input.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("block {0} cannot be realized as a pencil on its own")]
    UnrealizableBlock(String),

    #[error("pencil would have a zero dimension")]
    EmptyPencil,

    #[error("invalid component (m={m}, n={n}, r={r}, a={a}): {reason}")]
    InvalidComponent { m: usize, n: usize, r: usize, a: usize, reason: String },

    #[error("normal rank {nrank} exceeds bound r={r}")]
    NormalRankExceeds { nrank: usize, r: usize },

    #[error("pencil is not in the component: {0}")]
    NotMember(Violation),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("random perturbation failed to reach full rank after {0} attempts")]
    RetryBudgetExhausted(usize),
}

impl Error {
    /// True for errors caused by malformed input rather than by a violated
    /// mathematical precondition. The CLI maps these to exit status 1.
    pub fn is_malformed_input(&self) -> bool {
        matches!(self, Error::Parse(_))
    }

    /// Stable machine-readable tag.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::SingularMatrix => "singular_matrix",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::UnrealizableBlock(_) => "unrealizable_block",
            Error::EmptyPencil => "empty_pencil",
            Error::InvalidComponent { .. } => "invalid_component",
            Error::NormalRankExceeds { .. } => "normal_rank_exceeds",
            Error::NotMember(_) => "not_member",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::RetryBudgetExhausted(_) => "retry_budget_exhausted",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
