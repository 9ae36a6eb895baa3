use thiserror::Error;

/// Errors raised by the algebra, model and verification layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("pole at evaluation point {0}")]
    PoleAtPoint(String),

    #[error("generator index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("Hecke parameter mismatch between operands")]
    ParameterMismatch,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("spectrum not supported: eigenvalues outside the probe set ({found} of {expected} accounted for)")]
    NotSupportedSpectrum { found: usize, expected: usize },

    #[error("tolerance exceeded: residual {residual:e} > {tolerance:e}")]
    ToleranceExceeded { residual: f64, tolerance: f64 },

    #[error("value is not a rational function of q (odd powers of mu present)")]
    OddInMu,

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
