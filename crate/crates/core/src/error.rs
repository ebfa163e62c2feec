use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    InvalidPrimePower(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("division by zero in the field")]
    DivisionByZero,

    #[error("elements belong to different field contexts")]
    CtxMismatch,

    #[error("count list is empty")]
    EmptyCounts,

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("genus {0} is not supported (expected 1, 2 or 3)")]
    UnsupportedGenus(u32),

    #[error("enumeration needs {required} evaluations but the budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("polynomial is not homogeneous: found degrees {first} and {second}")]
    NotHomogeneous { first: u32, second: u32 },

    #[error("polynomial vanishes identically mod {0}")]
    ZeroPolynomial(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPrimePower(_) => "INVALID_PRIME_POWER",
            Error::NotPrime(_) => "NOT_PRIME",
            Error::DivisionByZero => "DIVISION_BY_ZERO",
            Error::CtxMismatch => "CTX_MISMATCH",
            Error::EmptyCounts => "EMPTY_COUNTS",
            Error::LengthMismatch { .. } => "LENGTH_MISMATCH",
            Error::UnsupportedGenus(_) => "UNSUPPORTED_GENUS",
            Error::BudgetExceeded { .. } => "BUDGET_EXCEEDED",
            Error::Syntax { .. } => "SYNTAX_ERROR",
            Error::NotHomogeneous { .. } => "NOT_HOMOGENEOUS",
            Error::ZeroPolynomial(_) => "ZERO_POLYNOMIAL",
            Error::InvalidArgument(_) => "INVALID_ARGUMENT",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
