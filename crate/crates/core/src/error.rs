//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("dimension {dim} exceeds the supported maximum of {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("quotient input is not contained in the ambient span")]
    SpanContainment,

    #[error("operator has not been verified; call verify() first")]
    UnverifiedOperator,

    #[error("operator fails its defining identity")]
    NotRotaBaxter,

    #[error("operators live over different contexts")]
    ContextMismatch,

    #[error("operator pair is not compatible")]
    IncompatiblePair,

    #[error("input is not a Leibniz algebra")]
    NotLeibniz,

    #[error("input is not a Leibniz triple system")]
    NotTripleSystem,

    #[error("representation fails its defining identities ({detail})")]
    InvalidRepresentation { detail: &'static str },

    #[error("coboundary degree {degree} unsupported (only 0..=3)")]
    DegreeOutOfRange { degree: usize },

    #[error("coboundary composite is nonzero: the complex is broken")]
    BrokenComplex,

    #[error("deformation series is not valid at order {order}")]
    InvalidDeformation { order: usize },

    #[error("series extension obstructed at order {order}")]
    Obstructed { order: usize },

    #[error("grid of {candidates} candidate matrices exceeds the limit of {limit}")]
    GridTooLarge { candidates: u128, limit: u128 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
