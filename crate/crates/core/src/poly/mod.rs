//! Exact sparse multivariate polynomials over the rationals, with a block of
//! parameters in which coefficients may be affine-linear.

mod monomial;
mod param;
mod parse;
mod polynomial;
mod ring;
mod univariate;

use num_rational::BigRational;
use thiserror::Error;

pub use monomial::Monomial;
pub use param::ParamPoly;
pub use parse::{
    parse_form, parse_ideal, parse_param_poly, parse_poly, parse_rational, parse_ring, parse_value, Value,
};
pub use polynomial::Polynomial;
pub use ring::{MonomialOrder, Ring, RingRef};
pub use univariate::UniPoly;

/// Exact rational scalars.
pub type Q = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ring declaration: {0}")]
    Ring(String),
    #[error("ring mismatch: `{left}` vs `{right}`")]
    RingMismatch { left: String, right: String },
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("product of two parameter-dependent factors is not affine in the parameters")]
    QuadraticParameters,
    #[error("expected {expected} parameter values, got {got}")]
    ParamCount { expected: usize, got: usize },
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("{0}")]
    Invalid(String),
}

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `n / d` as a rational.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}
