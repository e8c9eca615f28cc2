use thiserror::Error;

use crate::numeric::Polynomial;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("sequence too short: {len} terms given, at least {required} required")]
    SequenceTooShort { len: usize, required: usize },

    #[error("no constant row in the difference table")]
    NoConstantRow,

    #[error("singular {size}x{size} system (rank {rank})")]
    SingularMatrix { rank: usize, size: usize },

    #[error(
        "characteristic polynomial has roots that are not rational; residual factor {residual}"
    )]
    UnsupportedRoots { residual: Polynomial },

    #[error("closed form is not a pure polynomial in n")]
    NotPolynomial,

    #[error("duplicate point parameter {0}")]
    DuplicateParameter(String),

    #[error("no general-position placement for m = {m} after {attempts} attempts")]
    PlacementBudgetExceeded { m: usize, attempts: usize },

    #[error("failed to parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
