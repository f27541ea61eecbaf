use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("weight index {index} out of range (sequence has {len} terms)")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("weight configuration: {0}")]
    WeightConfig(String),
    #[error("weights a_1..a_{0} are not pairwise distinct")]
    NotDistinct(usize),
    #[error("enumeration of {count} multisets exceeds the budget of {budget}")]
    BudgetExceeded { count: String, budget: u64 },
    #[error("graded values of weight {left} and {right} cannot be added")]
    GradeMismatch { left: u32, right: u32 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
