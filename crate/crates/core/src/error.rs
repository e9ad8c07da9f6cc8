use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n, m must exceed 1 and nm ≥ 6 (got n = {n}, m = {m})")]
    InvalidParams { n: u64, m: u64 },

    #[error("parameters too large: 2nm overflows (n = {n}, m = {m})")]
    ParamsOverflow { n: u64, m: u64 },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,

    #[error("polynomial has no square root with integer coefficients")]
    NoPolynomialSquareRoot,

    #[error("{a} is not a unit modulo {order}")]
    NotAUnit { a: i64, order: u64 },

    #[error("cyclotomic orders differ: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },

    #[error("the zero row vector has no summand dimension")]
    ZeroRowVector,

    #[error("{small} does not divide {big}: n'm' must divide nm")]
    NonDividingCover { big: String, small: String },

    #[error("second σ̃₄ lift requested but n = {n}, m = {m} are not both even")]
    NoSecondLift { n: u64, m: u64 },

    #[error("tolerance must be positive")]
    NonPositiveTolerance,
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
