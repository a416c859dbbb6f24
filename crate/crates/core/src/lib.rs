//! Exact decision procedures for interpolation by sums of ridge functions.
//!
//! A ridge function is a composition `g(a . x)` of a univariate function with a
//! linear functional; its value depends only on the *level* `a . x`. Whether
//! arbitrary data on a point set (or a union of straight lines) can be matched
//! by a sum of ridge functions with fixed directions is a purely combinatorial
//! question about the level structure, and every negative answer has a small,
//! independently checkable witness:
//!
//! * a **closed path** for two directions: an even point sequence whose
//!   consecutive differences are orthogonal to the two directions alternately;
//! * a **cycle** for any number of directions: a point set carrying nowhere-zero
//!   weights that sum to zero inside every level group of every direction.
//!
//! All arithmetic is over arbitrary-precision rationals, so verdicts are exact
//! and witnesses can be re-verified by third parties digit for digit.
//!
//! Module layout:
//!
//! * [`rational`], [`matrix`]: canonical fractions and the dense linear algebra
//!   used everywhere else (RREF, nullspaces, solving, full-support kernel
//!   vectors).
//! * [`geometry`]: directions, lines, the basis-completion reduction to two
//!   coordinates, planar projection and lifting.
//! * [`paths`]: path checkers and the closed-path constructions for three
//!   lines in general dimension.
//! * [`cycles`]: incidence matrices, cycle detection and certificates,
//!   decomposition of two-direction cycles into closed paths.
//! * [`interp`]: the interpolation criterion, concrete solving, and
//!   obstruction pairings.

pub mod cycles;
pub mod error;
pub mod geometry;
pub mod interp;
pub mod matrix;
pub mod paths;
pub mod rational;

pub use error::Error;
pub use rational::Rational;
