//! Error type shared by all engine operations.

use thiserror::Error;

/// Errors raised by construction and arithmetic on curves, ideals,
/// morphisms and divisors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("operands belong to different curves")]
    CurveMismatch,

    #[error("curve must have dimension 1, found {found}")]
    DimensionNotOne { found: String },

    #[error("defining ideal is the unit ideal")]
    UnitIdeal,

    #[error("point does not lie on the curve: generator `{generator}` evaluates to {value}")]
    PointNotOnCurve { generator: String, value: String },

    #[error("coordinate count {given} does not match variable count {expected}")]
    CoordinateCount { given: usize, expected: usize },

    #[error("morphism is not well defined: image of `{generator}` does not vanish on the source")]
    NotWellDefined { generator: String },

    #[error("morphism does not present the target exactly: elimination ideal differs from the target ideal")]
    TargetNotExact,

    #[error("freeness not certified: mixed leading monomial `{witness}` in the combined basis")]
    FreenessNotCertified { witness: String },

    #[error("morphism is not finite: the module basis is infinite")]
    NotFinite,

    #[error("source and target share variable name `{name}`")]
    VariableCollision { name: String },

    #[error("expected one image per target variable: got {given}, target has {expected}")]
    ImageCount { given: usize, expected: usize },

    #[error("divisor support is not zero-dimensional")]
    NotZeroDimensional,

    #[error("`{element}` is a zero divisor on the curve")]
    ZeroDivisor { element: String },

    #[error("numerator ideal vanishes on the curve")]
    ZeroIdeal,

    #[error("no nonzerodivisor found in the ideal within the search budget")]
    NoNonzerodivisor,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
