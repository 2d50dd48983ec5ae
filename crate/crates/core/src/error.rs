use thiserror::Error;

use crate::poly::{PolyError, Polynomial};

/// Errors raised by the algebraic operations above the polynomial layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("Gröbner step budget of {budget} S-pair reductions exhausted")]
    Budget { budget: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("the coefficients share the common factor {gcd}: the singular locus has codimension one")]
    CommonFactor { gcd: Polynomial },
    #[error("corpus: {0}")]
    Corpus(String),
}

pub type Result<T> = std::result::Result<T, Error>;
