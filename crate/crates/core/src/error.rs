use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order mismatch: left series has order {left}, right has order {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("coefficient overflow in {op}")]
    Overflow { op: &'static str },

    #[error("series is not invertible: constant term is {0}, expected 1 or -1")]
    NonUnitConstant(i128),

    #[error("negative exponent {exponent} enumerated in {context}")]
    NegativeExponent { context: String, exponent: i64 },

    #[error("exponent is not an integer for {context}")]
    NonIntegralExponent { context: String },

    #[error("term with non-real weight in {context}")]
    NonRealTerm { context: String },

    #[error("truncation check failed: {0}")]
    Truncation(String),

    #[error("unknown identifier `{0}`")]
    UnknownId(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("series order {available} is too small, {needed} required")]
    InsufficientOrder { needed: usize, available: usize },
}

impl Error {
    pub(crate) fn overflow(op: &'static str) -> Self {
        Error::Overflow { op }
    }
}
