//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A vector with weight 0 was passed where a nonzero weight is required.
    #[error("vector lies in the zero-set of the weight")]
    ZeroSetVector,

    /// The zero vector was passed to a Euclidean-angle operation.
    #[error("zero vector has no direction")]
    ZeroVector,

    /// Hull construction received collinear or otherwise degenerate input.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// The gauge ray never leaves the hull and the direction is not a
    /// recorded unbounded ray.
    #[error("ray does not exit the hull in this direction")]
    UnboundedDirection,

    /// Bracket expansion for Θ⁻¹ exhausted its range; Θ does not attain
    /// the target, which signals a weight that is not a norm on the span.
    #[error("could not bracket the target angle: {0}")]
    NotBracketed(String),

    /// The weight's hull gauge is not a norm (hull unbounded or origin
    /// not strictly interior).
    #[error("weight is not normable")]
    NotNormable,

    /// Line parameters violate a geometric precondition.
    #[error("invalid line: {0}")]
    InvalidLine(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A corner-based CSB search found no violation; the corner
    /// specification does not describe a concave corner of this weight.
    #[error("no CSB violation found on the search grid")]
    NoViolationFound,

    /// Two redundant computation routes disagreed beyond tolerance.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    /// A weight-spec string or data file failed to parse.
    #[error("parse error: {0}")]
    Parse(String),
}
