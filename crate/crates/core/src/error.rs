//! Error type shared by all modules.

use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {text:?}: {reason}")]
    InvalidRational { text: String, reason: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero vector cannot serve as a direction")]
    ZeroDirection,

    #[error("the two directions are linearly dependent")]
    DependentDirections,

    #[error("expected three pairwise distinct lines")]
    NotThreeDistinctLines,

    #[error("point does not lie on the projection of its assigned line")]
    PointNotOnProjection,

    #[error("walk produced two coinciding consecutive points")]
    DegenerateStep,

    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },

    #[error("operation requires exactly two directions, found {found}")]
    NotTwoDirections { found: usize },

    #[error("no value assigned for level {level} of direction {direction}")]
    MissingLevel { direction: usize, level: Rational },

    #[error("point sequence is not a closed path")]
    NotAClosedPath,
}
