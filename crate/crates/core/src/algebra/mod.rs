//! Exact arithmetic substrate.
//!
//! Everything in the non-archimedean half of the crate is computed with
//! arbitrary-precision rationals: multivariate Laurent polynomials carry
//! torus coordinates and Satake symbols, and truncated power series in the
//! deformation variables `T` and `U` carry Euler-factor expansions.

mod laurent;
mod parse;
mod rational;
mod series;

pub use laurent::{Exponent, LaurentPoly, MAX_VARS};
pub use rational::{parse_rational, rat, Rational};
pub use series::{InverseRoot, Mismatch, TruncatedSeries, DEFAULT_T_ORDER, DEFAULT_U_ORDER};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("no exact quotient exists: {0}")]
    NonExactDivision(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("too many variables: {0} exceeds the limit of {MAX_VARS}")]
    TooManyVariables(usize),
    #[error("`{0}` is not an invertible monomial")]
    NotInvertible(String),
    #[error("parse error: {0}")]
    Parse(String),
}
