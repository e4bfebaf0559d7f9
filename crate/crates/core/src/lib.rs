//! Exact divisor calculus on affine curves under finite free covers.
//!
//! The engine works on a single affine chart per curve, with ideals of the
//! ambient polynomial ring as representatives. It provides:
//!
//! - exact multivariate polynomials over the rationals or a prime field
//!   ([`poly`], [`parse`]),
//! - a Gröbner-basis kernel with canonical reduced bases ([`groebner`]),
//! - curve presentations and rational points ([`curve`]),
//! - certified finite free morphisms with multiplication matrices and the
//!   determinant norm ([`morphism`]),
//! - effective and generalized divisors, fractional ideals, Cartier testing
//!   and degrees ([`divisor`]),
//! - Fitting-ideal direct images, inverse images and fiber lifting
//!   ([`image`]).

pub mod curve;
pub mod divisor;
pub mod error;
pub mod groebner;
pub mod image;
pub mod matrix;
pub mod monomial;
pub mod morphism;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod sample;
pub mod scalar;

pub use error::{Error, Result};
