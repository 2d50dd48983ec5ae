//! Gröbner bases and the ideal-theoretic toolbox built on them.

pub mod engine;
mod hilbert;
mod ideal;
mod minimal;

pub use engine::{default_budget, parse_budget, ModVec, ModuleOrder, Term, BUDGET_ENV, DEFAULT_BUDGET};
pub use hilbert::{
    count_standard_monomials, hilbert_series_numerator, independent_set_dimension, series_to_polynomial,
};
pub use ideal::{divide, normal_form, Ideal, Saturation};
pub use minimal::minimal_subset;

use crate::poly::{Polynomial, RingRef};

/// Polynomial as a module element in component 0.
pub fn poly_to_vec(p: &Polynomial) -> ModVec {
    p.terms()
        .iter()
        .map(|(m, c)| {
            (
                Term {
                    comp: 0,
                    mono: m.clone(),
                },
                c.clone(),
            )
        })
        .collect()
}

/// Component-0 module element back to a polynomial; the order must be the
/// ring's order so the term sequence stays sorted.
pub fn vec_to_poly(ring: &RingRef, v: &ModVec) -> Polynomial {
    Polynomial::from_terms(ring, v.iter().map(|(t, c)| (t.mono.clone(), c.clone())))
}
