use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{0} is not an odd prime below 2^63")]
    NotPrime(u64),
    #[error("unrecognized field `{0}` (expected `q` or `fp:P`)")]
    BadDescriptor(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator {den} is divisible by {p}")]
    DenominatorDivisibleByP { den: String, p: u64 },
}

/// Syntax error in polynomial text, with the byte offset where it occurred.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live over different fields")]
    FieldMismatch,
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("expected a nonzero linear form")]
    NotLinear,
    #[error("expected a homogeneous polynomial")]
    NotHomogeneous,
    #[error("odd degree {0} has no square root")]
    OddDegree(u32),
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Errors from the cover, certificate and enumeration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("invalid double cover: {0}")]
    InvalidCover(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("degenerate divisor: {0}")]
    Degenerate(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("cost guard: {what} needs {count} candidates, limit is {limit}")]
    CostGuard { what: String, count: u128, limit: u128 },
    #[error("exhaustive search requires a finite field")]
    NeedsFiniteField,
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
