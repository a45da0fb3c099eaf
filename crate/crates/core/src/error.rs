use thiserror::Error;

/// Errors from ring-level plumbing: contexts, parsing, coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring context mismatch")]
    ContextMismatch,
    #[error("monomial order mismatch")]
    OrderMismatch,
    #[error("exponent vectors of different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("invalid coefficient: {0}")]
    InvalidCoefficient(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent overflow (exponents must stay below {0})")]
    ExponentOverflow(u32),
}

/// Errors from ideal-level computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("colon or saturation by the zero ideal")]
    ZeroDivisorIdeal,
    #[error("saturation did not stabilize within {0} iterations")]
    SaturationCap(usize),
    #[error("invalid curve specification: {0}")]
    InvalidCurve(String),
    #[error("generator {0} of the candidate reduction is not contained in the ideal")]
    NotContained(usize),
    #[error("element {0} of the sequence is zero")]
    ZeroInSequence(usize),
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
