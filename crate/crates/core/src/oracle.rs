//! Brute-force linear-algebra oracles. Nothing here uses Gröbner bases: every
//! answer comes from row-reducing coefficient matrices of graded pieces, so
//! the results can cross-check the Gröbner machinery independently.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{sparse_from_entries, CoordIndex, Matrix, Span, SparseVec};
use crate::poly::{Monomial, Polynomial, Q};

fn degrees(gens: &[Polynomial]) -> Result<Vec<i64>> {
    gens.iter()
        .map(|g| {
            g.homogeneous_degree()
                .map(|d| d as i64)
                .ok_or_else(|| Error::Precondition(format!("{g} is not homogeneous")))
        })
        .collect()
}

fn monomial_index(nvars: usize, k: i64) -> CoordIndex<Monomial> {
    if k < 0 {
        return CoordIndex::new();
    }
    CoordIndex::with_keys(Monomial::all_of_degree(nvars, k as u32))
}

fn poly_coords(p: &Polynomial, index: &CoordIndex<Monomial>) -> SparseVec {
    sparse_from_entries(
        p.terms()
            .iter()
            .map(|(m, c)| (index.get(m).expect("monomial of the expected degree"), c.clone()))
            .collect(),
    )
}

/// Span of the degree-`k` part of the ideal generated by homogeneous `gens`,
/// over the coordinates `Monomial::all_of_degree(nvars, k)`.
pub fn graded_piece(gens: &[Polynomial], k: i64) -> Result<(CoordIndex<Monomial>, Span)> {
    let degs = degrees(gens)?;
    let nvars = gens.first().map(|g| g.ring().nvars()).unwrap_or(0);
    let index = monomial_index(nvars, k);
    let mut span = Span::new();
    for (g, &e) in gens.iter().zip(&degs) {
        if e > k {
            continue;
        }
        for m in Monomial::all_of_degree(nvars, (k - e) as u32) {
            span.insert(poly_coords(&g.mul_term(&m, &Q::from_integer(1.into())), &index));
        }
    }
    Ok((index, span))
}

/// Dimension of the degree-`k` part of the ideal.
pub fn ideal_piece_dim(gens: &[Polynomial], k: i64) -> Result<u64> {
    if k < 0 {
        return Ok(0);
    }
    Ok(graded_piece(gens, k)?.1.dim() as u64)
}

/// Dimension of the degree-`k` part of `S / (gens)` in `nvars` variables.
pub fn hilbert_function(gens: &[Polynomial], nvars: usize, k: i64) -> Result<u64> {
    if k < 0 {
        return Ok(0);
    }
    let total = Monomial::all_of_degree(nvars, k as u32).len() as u64;
    Ok(total - ideal_piece_dim(gens, k)?)
}

/// Whether homogeneous `f` lies in the ideal, by comparing with the graded
/// piece of its degree.
pub fn contains(gens: &[Polynomial], f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let k = f
        .homogeneous_degree()
        .ok_or_else(|| Error::Precondition(format!("{f} is not homogeneous")))? as i64;
    let (index, span) = graded_piece(gens, k)?;
    Ok(span.contains(&poly_coords(f, &index)))
}

/// Coordinates `(j, m)` of degree-`degree` homogeneous vectors in
/// `⊕ S(-twists[j])`: component `j` ranges over monomials of degree
/// `degree - twists[j]`.
pub fn module_coords(nvars: usize, twists: &[i64], degree: i64) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for (j, &e) in twists.iter().enumerate() {
        if degree >= e {
            for m in Monomial::all_of_degree(nvars, (degree - e) as u32) {
                out.push((j, m));
            }
        }
    }
    out
}

/// Canonical basis (reduced row echelon rows over [`module_coords`]) of the
/// degree-`degree` syzygies `{c : sum_j c_j g_j = 0}` of homogeneous `gens`.
pub fn syzygy_space(gens: &[Polynomial], degree: i64) -> Result<Vec<Vec<Q>>> {
    let degs = degrees(gens)?;
    let nvars = gens.first().map(|g| g.ring().nvars()).unwrap_or(0);
    let coords = module_coords(nvars, &degs, degree);
    let target = monomial_index(nvars, degree);
    let mut m = Matrix::zeros(target.len(), coords.len());
    for (col, (j, mono)) in coords.iter().enumerate() {
        for (t, c) in gens[*j].terms() {
            let row = target.get(&t.mul(mono)).expect("degree bookkeeping");
            m.set(row, col, c.clone());
        }
    }
    let ns = m.null_space();
    if ns.is_empty() {
        return Ok(Vec::new());
    }
    Ok(Matrix::from_rows(ns, coords.len()).row_space_canonical())
}

/// Canonical basis of the 1-forms `sum_i A_i dx_i` with every `A_i` in the
/// degree-`d + 1` part of the ideal and `sum_i x_i A_i = 0`, over the
/// coordinates `(i, m)` with `m` of degree `d + 1` (component-major).
pub fn forms_vanishing_on(gens: &[Polynomial], d: i64) -> Result<Vec<Vec<Q>>> {
    let nvars = gens
        .first()
        .map(|g| g.ring().nvars())
        .ok_or_else(|| Error::Precondition("empty ideal".into()))?;
    let ring = gens[0].ring().clone();
    let (index, span) = graded_piece(gens, d + 1)?;
    // explicit basis of I_{d+1}
    let mut basis: Vec<SparseVec> = Vec::new();
    let mut check = Span::new();
    for g in gens {
        let e = g.homogeneous_degree().unwrap() as i64;
        if e > d + 1 {
            continue;
        }
        for m in Monomial::all_of_degree(nvars, (d + 1 - e) as u32) {
            let v = poly_coords(&g.mul_term(&m, &Q::from_integer(1.into())), &index);
            if check.insert(v.clone()) {
                basis.push(v);
            }
        }
    }
    debug_assert_eq!(basis.len(), span.dim());
    let b = basis.len();
    let mons = index.keys().to_vec();
    let as_poly = |v: &SparseVec| Polynomial::from_terms(&ring, v.iter().map(|(c, q)| (mons[*c].clone(), q.clone())));
    let target = monomial_index(nvars, d + 2);
    // unknowns lambda_{i, k}: A_i = sum_k lambda_{i,k} basis_k
    let mut m = Matrix::zeros(target.len(), nvars * b);
    for i in 0..nvars {
        for (k, v) in basis.iter().enumerate() {
            let p = &Polynomial::var(&ring, i) * &as_poly(v);
            for (t, c) in p.terms() {
                let row = target.get(t).expect("degree bookkeeping");
                m.set(row, i * b + k, c.clone());
            }
        }
    }
    let ns = m.null_space();
    let width = nvars * index.len();
    let rows: Vec<Vec<Q>> = ns
        .iter()
        .map(|lam| {
            let mut out = vec![Q::zero(); width];
            for i in 0..nvars {
                for (k, v) in basis.iter().enumerate() {
                    let l = &lam[i * b + k];
                    if l.is_zero() {
                        continue;
                    }
                    for (c, q) in v {
                        out[i * index.len() + c] += l * q;
                    }
                }
            }
            out
        })
        .collect();
    if rows.is_empty() {
        return Ok(Vec::new());
    }
    Ok(Matrix::from_rows(rows, width).row_space_canonical())
}

/// Dimension of the degree-`k` part of `(I : J)`, computed from the
/// definition `{f : f * g in I for all g in J}` by linear algebra.
pub fn quotient_piece_dim(i_gens: &[Polynomial], j_gens: &[Polynomial], k: i64) -> Result<u64> {
    let nvars = i_gens
        .first()
        .or(j_gens.first())
        .map(|g| g.ring().nvars())
        .ok_or_else(|| Error::Precondition("empty input".into()))?;
    if k < 0 {
        return Ok(0);
    }
    let unknowns = Monomial::all_of_degree(nvars, k as u32);
    let mut kernel: Option<Vec<Vec<Q>>> = None;
    for g in j_gens {
        let e = degrees(std::slice::from_ref(g))?[0];
        let (index, span) = graded_piece(i_gens, k + e)?;
        // solve sum_m a_m (m * g) = sum_r mu_r row_r over the degree k+e piece
        let rows: Vec<SparseVec> = span.rows().cloned().collect();
        let mut mat = Matrix::zeros(index.len(), unknowns.len() + rows.len());
        for (col, m) in unknowns.iter().enumerate() {
            let v = poly_coords(&g.mul_term(m, &Q::from_integer(1.into())), &index);
            for (c, q) in v {
                mat.set(c, col, q);
            }
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, q) in row {
                mat.set(*c, unknowns.len() + r, -q.clone());
            }
        }
        let ns = mat.null_space();
        let projected: Vec<Vec<Q>> = ns.iter().map(|v| v[..unknowns.len()].to_vec()).collect();
        let this = if projected.is_empty() {
            Vec::new()
        } else {
            Matrix::from_rows(projected, unknowns.len()).row_space_canonical()
        };
        kernel = Some(match kernel {
            None => this,
            Some(prev) => intersect_row_spaces(&prev, &this, unknowns.len()),
        });
    }
    Ok(kernel.map(|k| k.len() as u64).unwrap_or(unknowns.len() as u64))
}

/// Intersection of two row spaces given by bases, as a canonical basis.
pub fn intersect_row_spaces(a: &[Vec<Q>], b: &[Vec<Q>], width: usize) -> Vec<Vec<Q>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // solve sum x_i a_i = sum y_j b_j
    let mut m = Matrix::zeros(width, a.len() + b.len());
    for (i, row) in a.iter().enumerate() {
        for (c, q) in row.iter().enumerate() {
            m.set(c, i, q.clone());
        }
    }
    for (j, row) in b.iter().enumerate() {
        for (c, q) in row.iter().enumerate() {
            m.set(c, a.len() + j, -q.clone());
        }
    }
    let ns = m.null_space();
    let vecs: Vec<Vec<Q>> = ns
        .iter()
        .map(|x| {
            let mut v = vec![Q::zero(); width];
            for (i, row) in a.iter().enumerate() {
                if x[i].is_zero() {
                    continue;
                }
                for (c, q) in row.iter().enumerate() {
                    v[c] += &x[i] * q;
                }
            }
            v
        })
        .collect();
    if vecs.is_empty() {
        return Vec::new();
    }
    Matrix::from_rows(vecs, width).row_space_canonical()
}
