//! Syzygies, minimal graded free resolutions, Betti tables, Hilbert
//! polynomials and the length computations for local Ext modules.

mod betti;
mod module;
mod resolution;
pub(crate) use resolution::hilbert_polynomial_from_betti;

pub use betti::BettiTable;
pub use module::{GradedFreeModule, GradedMatrix};
pub use resolution::{
    column_syzygies, ext_top_cyclic, hilbert_polynomial, linear_syzygy_space, minimal_free_resolution, syzygies,
    syzygy_space_in_degree, tensor_length, GradedResolution, SyzygyRoute, SyzygySpace,
};
