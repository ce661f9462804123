use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("negative input {0}")]
    NegativeInput(i64),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("coefficient is not exactly divisible by the quantum factorial")]
    NonIntegralDivision,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("level mismatch: expected D={expected}, found D={found}")]
    LevelMismatch { expected: i64, found: i64 },
    #[error("enumeration budget of {0} candidates exceeded")]
    BudgetExceeded(u64),
    #[error("window radius {have} too small, need at least {need}")]
    WindowTooSmall { have: usize, need: usize },
    #[error("values are not consistent with a polynomial of degree at most {0}")]
    NotPolynomial(usize),
    #[error("no verified monomial found for {0}")]
    MonomialNotFound(String),
    #[error("leading coefficient {0} is not an integer")]
    NonIntegerLeading(String),
    #[error("element is not unitriangular: {0}")]
    NonUnitriangular(String),
    #[error("presentation did not stabilize up to D={0}")]
    StabilityNotReached(i64),
    #[error("coefficient {0} is not a Laurent polynomial")]
    NonLaurent(String),
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
