//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the geometry, measure, optimization and verification
/// layers. Validation failures carry enough context to be reported verbatim
/// by the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    /// A set description violates its invariants.
    #[error("invalid set: {0}")]
    InvalidSet(String),

    /// A point tuple that must be non-empty was empty.
    #[error("empty point tuple")]
    EmptyTuple,

    /// The requested operation needs positive logarithmic capacity.
    #[error("set has zero logarithmic capacity")]
    ZeroCapacity,

    /// The candidate node pool is too small for the requested configuration.
    #[error("candidate pool too small: need at least {needed} nodes, have {available}")]
    PoolTooSmall { needed: usize, available: usize },

    /// A weight is not admissible on the given set.
    #[error("weight not admissible: {0}")]
    NotAdmissible(String),

    /// The weight kind is not supported by this operation.
    #[error("unsupported weight kind: {0}")]
    UnsupportedWeightKind(String),

    /// Tuple size must be at least 2.
    #[error("tuple size m must be >= 2, got {0}")]
    BadM(usize),

    /// Invalid polynomial degrees for a two-factor constant.
    #[error("invalid degrees: l = {l}, n = {n}")]
    BadDegrees { l: usize, n: usize },

    /// Invalid radii for a circle-average scan.
    #[error("invalid radii: {0}")]
    BadRadii(String),

    /// Invalid growth sequence.
    #[error("invalid sequence: {0}")]
    BadSequence(String),

    /// Generalized-polynomial exponents must be positive.
    #[error("invalid exponent: {0}")]
    BadExponent(String),

    /// A factor has no zeros.
    #[error("factor has an empty zero list")]
    EmptyFactor,

    /// A supremum norm vanished, so no product inequality is possible.
    #[error("sup norm is zero on the given set")]
    ZeroNorm,

    /// A quadrature measure does not match the operation's requirements.
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    /// Malformed run configuration or input file.
    #[error("invalid configuration: {0}")]
    BadConfig(String),

    /// A computation produced NaN or failed to converge.
    #[error("numeric failure: {0}")]
    NumericFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code used by the command-line front end: 2 for validation
    /// problems, 3 for numeric failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NumericFailure(_) => 3,
            _ => 2,
        }
    }
}
