//! Exact commutative algebra for codimension-one distributions on projective
//! space: polynomial arithmetic, Gröbner bases, syzygies and free
//! resolutions, twisted 1-forms, singular schemes, and Chern-class
//! arithmetic, together with a corpus of classified examples.

pub mod error;
pub mod groebner;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
pub mod chern;
pub mod corpus;
pub mod distributions;
pub mod forms;
pub mod oracle;
pub mod syzygy;
