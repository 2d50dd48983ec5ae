//! Combinatorics of monomial ideals: standard monomials, Hilbert series and
//! dimension from a set of leading monomials.

use crate::poly::{Monomial, UniPoly, Q};

fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted = gens.to_vec();
    sorted.sort_by_key(Monomial::degree);
    sorted.dedup();
    for g in sorted {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Number of degree-`k` monomials in `nvars` variables outside the monomial
/// ideal generated by `lead`.
pub fn count_standard_monomials(lead: &[Monomial], nvars: usize, k: i64) -> u64 {
    if k < 0 {
        return 0;
    }
    let lead = minimalize(lead);
    Monomial::all_of_degree(nvars, k as u32)
        .iter()
        .filter(|m| !lead.iter().any(|g| g.divides(m)))
        .count() as u64
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub_shifted(a: &[i64], b: &[i64], shift: usize) -> Vec<i64> {
    let mut out = a.to_vec();
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, 0);
    }
    for (i, y) in b.iter().enumerate() {
        out[i + shift] -= y;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^nvars` of
/// `k[x] / (lead)`, as integer coefficients from degree 0 upward.
pub fn hilbert_series_numerator(lead: &[Monomial]) -> Vec<i64> {
    numerator(&minimalize(lead))
}

fn numerator(gens: &[Monomial]) -> Vec<i64> {
    match gens.len() {
        0 => return vec![1],
        1 => return poly_sub_shifted(&[1], &[1], gens[0].degree() as usize),
        _ => {}
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        return gens.iter().fold(vec![1], |acc, g| {
            poly_mul(&acc, &poly_sub_shifted(&[1], &[1], g.degree() as usize))
        });
    }
    // N(M + (m)) = N(M) - t^deg(m) * N(M : m)
    let (m, rest) = gens.split_last().unwrap();
    let colon: Vec<Monomial> = rest.iter().map(|g| m.gcd(g).quotient_of(g).unwrap()).collect();
    let colon = minimalize(&colon);
    poly_sub_shifted(&numerator(rest), &numerator(&colon), m.degree() as usize)
}

/// Hilbert polynomial and affine dimension from a Hilbert series numerator
/// over `(1 - t)^nvars`.
pub fn series_to_polynomial(numerator: &[i64], nvars: usize) -> (UniPoly, usize) {
    let mut num = numerator.to_vec();
    let mut dim = nvars;
    // cancel factors (1 - t) while N(1) = 0
    while dim > 0 && num.iter().sum::<i64>() == 0 && num.iter().any(|&c| c != 0) {
        // synthetic division by (1 - t): N(t) = (1 - t) * Q(t), Q_k = sum_{i<=k} N_i
        let mut q = Vec::with_capacity(num.len() - 1);
        let mut acc = 0i64;
        for &c in &num[..num.len() - 1] {
            acc += c;
            q.push(acc);
        }
        num = q;
        dim -= 1;
    }
    if dim == 0 || num.iter().all(|&c| c == 0) {
        return (UniPoly::zero(), 0);
    }
    // 1 / (1 - t)^D = sum_k binom(k + D - 1, D - 1) t^k
    let mut hp = UniPoly::zero();
    for (j, &a) in num.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let term = UniPoly::binomial_shift(dim as i64 - 1 - j as i64, dim - 1);
        hp = hp.add(&term.scale(&Q::from_integer(a.into())));
    }
    (hp, dim)
}

/// Largest size of a set of variables containing the support of no leading
/// monomial: the affine (Krull) dimension of `k[x] / (lead)`.
pub fn independent_set_dimension(lead: &[Monomial], nvars: usize) -> usize {
    assert!(nvars <= 20, "too many variables for subset enumeration");
    let lead = minimalize(lead);
    let supports: Vec<u32> = lead
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .fold(0u32, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    let mut best = 0;
    for set in 0u32..(1u32 << nvars) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|&s| s & !set != 0) {
            best = size;
        }
    }
    best
}
