use crate::linalg::{CoordIndex, Span, SparseVec};
use crate::poly::Monomial;

use super::engine::{ModVec, ModuleOrder, Term};

fn coords(index: &mut CoordIndex<Term>, v: &ModVec, m: &Monomial) -> SparseVec {
    crate::linalg::sparse_from_entries(
        v.iter()
            .map(|(t, c)| {
                let key = Term {
                    comp: t.comp,
                    mono: t.mono.mul(m),
                };
                (index.get_or_insert(key), c.clone())
            })
            .collect(),
    )
}

/// Indices of a minimal homogeneous generating subset of the submodule
/// generated by `candidates`, chosen by degree (ascending) then position.
///
/// A candidate of weighted degree `e` is kept when it is not in the span of
/// the degree-`e` monomial multiples of the kept elements of lower degree and
/// the kept elements of degree `e`. Every candidate must be homogeneous for
/// the weights of `order` and nonzero.
pub fn minimal_subset(order: &ModuleOrder, nvars: usize, candidates: &[ModVec]) -> Vec<usize> {
    let degree = |v: &ModVec| order.weighted_degree(&v[0].0);
    let mut idx: Vec<usize> = (0..candidates.len()).filter(|&i| !candidates[i].is_empty()).collect();
    idx.sort_by_key(|&i| (degree(&candidates[i]), i));

    let mut kept: Vec<usize> = Vec::new();
    let mut k = 0;
    while k < idx.len() {
        let e = degree(&candidates[idx[k]]);
        let mut index: CoordIndex<Term> = CoordIndex::new();
        let mut span = Span::new();
        for &g in &kept {
            let dg = degree(&candidates[g]);
            let shift = (e - dg) as u32;
            for m in Monomial::all_of_degree(nvars, shift) {
                span.insert(coords(&mut index, &candidates[g], &m));
            }
        }
        let one = Monomial::one(nvars);
        while k < idx.len() && degree(&candidates[idx[k]]) == e {
            let c = idx[k];
            if span.insert(coords(&mut index, &candidates[c], &one)) {
                kept.push(c);
            }
            k += 1;
        }
    }
    kept.sort_by_key(|&i| (degree(&candidates[i]), i));
    kept
}
