use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{default_budget, engine, minimal_subset, Ideal, ModVec, ModuleOrder, Term};
use crate::linalg::Matrix;
use crate::oracle;
use crate::poly::{Monomial, Polynomial, RingRef, UniPoly, Q};

use super::betti::BettiTable;
use super::module::{unit_vector, GradedFreeModule, GradedMatrix};

/// Minimal generators of the syzygies among the columns of `m`, as the
/// columns of a matrix `N` with `m * N = 0`.
///
/// Computed from a Gröbner basis of the module generated by the rows of
/// `[m^T | I]` under a position-over-term order with the `m` block first;
/// the basis elements living entirely in the identity block generate the
/// syzygy module, and a minimal subset is selected degree by degree.
pub fn column_syzygies(m: &GradedMatrix, budget: usize) -> Result<GradedMatrix> {
    let ring = m.ring().clone();
    let nvars = ring.nvars();
    let r = m.nrows();
    let cols = m.ncols();
    let mut weights = m.target().twists.clone();
    weights.extend(m.source().twists.iter().copied());
    let order = ModuleOrder::graded(ring.order(), weights);
    let input: Vec<ModVec> = (0..cols)
        .map(|j| {
            let mut v = m.column(j, &order);
            v.extend(unit_vector(nvars, r + j));
            order.sort(&mut v);
            v
        })
        .collect();
    let gb = engine::groebner(&order, &input, budget)?;
    let syz_order = ModuleOrder::graded(ring.order(), m.source().twists.clone());
    let candidates: Vec<ModVec> = gb
        .into_iter()
        .filter(|v| v[0].0.comp >= r)
        .map(|v| {
            let mut w: ModVec = v
                .into_iter()
                .map(|(t, c)| {
                    (
                        Term {
                            comp: t.comp - r,
                            mono: t.mono,
                        },
                        c,
                    )
                })
                .collect();
            syz_order.sort(&mut w);
            w
        })
        .collect();
    let keep = minimal_subset(&syz_order, nvars, &candidates);
    let columns: Vec<ModVec> = keep.iter().map(|&i| candidates[i].clone()).collect();
    let twists = columns.iter().map(|c| syz_order.weighted_degree(&c[0].0)).collect();
    Ok(GradedMatrix::from_columns(
        &ring,
        &columns,
        GradedFreeModule::new(twists),
        m.source().clone(),
    ))
}

/// Minimal generators of the first syzygy module of homogeneous `gens`.
pub fn syzygies(gens: &[Polynomial]) -> Result<GradedMatrix> {
    let ring = gens
        .first()
        .map(|g| g.ring().clone())
        .ok_or_else(|| Error::Precondition("no generators".into()))?;
    let row = GradedMatrix::generator_row(&ring, gens).map_err(Error::Precondition)?;
    column_syzygies(&row, default_budget())
}

/// How to compute a graded piece of the syzygy module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyzygyRoute {
    /// From the Gröbner-computed syzygy generators.
    Groebner,
    /// By solving the linear system in the graded piece directly.
    Oracle,
}

/// One graded piece of the syzygy module of `gens`, with a canonical basis
/// (reduced row echelon form over the coordinates `coords`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygySpace {
    pub degree: i64,
    pub twists: Vec<i64>,
    pub coords: Vec<(usize, Monomial)>,
    pub basis: Vec<Vec<Q>>,
}

impl SyzygySpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis elements as columns of polynomials, one per generator.
    pub fn columns(&self, ring: &RingRef) -> Vec<Vec<Polynomial>> {
        self.basis
            .iter()
            .map(|row| {
                let mut col = vec![Polynomial::zero(ring); self.twists.len()];
                for (k, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (j, m) = &self.coords[k];
                    col[*j] = &col[*j] + &Polynomial::term(ring, m.clone(), c.clone());
                }
                col
            })
            .collect()
    }
}

/// Syzygies of homogeneous `gens` of degree `degree`.
pub fn syzygy_space_in_degree(gens: &[Polynomial], degree: i64, route: SyzygyRoute) -> Result<SyzygySpace> {
    let ring = gens
        .first()
        .map(|g| g.ring().clone())
        .ok_or_else(|| Error::Precondition("no generators".into()))?;
    let row = GradedMatrix::generator_row(&ring, gens).map_err(Error::Precondition)?;
    let twists = row.source().twists.clone();
    let coords = oracle::module_coords(ring.nvars(), &twists, degree);
    let basis = match route {
        SyzygyRoute::Oracle => oracle::syzygy_space(gens, degree)?,
        SyzygyRoute::Groebner => {
            let syz = column_syzygies(&row, default_budget())?;
            let index: HashMap<(usize, Monomial), usize> =
                coords.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
            let mut rows = Vec::new();
            for (k, &delta) in syz.source().twists.iter().enumerate() {
                if delta > degree {
                    continue;
                }
                let col = syz.column_polys(k);
                for mono in Monomial::all_of_degree(ring.nvars(), (degree - delta) as u32) {
                    let mut v = vec![Q::zero(); coords.len()];
                    for (j, p) in col.iter().enumerate() {
                        for (t, c) in p.terms() {
                            v[index[&(j, t.mul(&mono))]] = c.clone();
                        }
                    }
                    rows.push(v);
                }
            }
            if rows.is_empty() {
                Vec::new()
            } else {
                Matrix::from_rows(rows, coords.len()).row_space_canonical()
            }
        }
    };
    Ok(SyzygySpace {
        degree,
        twists,
        coords,
        basis,
    })
}

/// Syzygies with entries of degree at most one: the graded piece one above
/// the lowest generator degree.
pub fn linear_syzygy_space(gens: &[Polynomial], route: SyzygyRoute) -> Result<SyzygySpace> {
    let low = gens
        .iter()
        .filter_map(Polynomial::homogeneous_degree)
        .min()
        .ok_or_else(|| Error::Precondition("no homogeneous generators".into()))?;
    syzygy_space_in_degree(gens, low as i64 + 1, route)
}

/// Chain of graded matrices `S <- F0 <- F1 <- ...`; `maps[0]` is the row of
/// minimal generators and `maps[i]` maps `F_i` to `F_{i-1}`.
#[derive(Debug, Clone)]
pub struct GradedResolution {
    maps: Vec<GradedMatrix>,
}

impl GradedResolution {
    pub fn maps(&self) -> &[GradedMatrix] {
        &self.maps
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::new(self.maps.iter().map(|m| m.source().twists.clone()).collect())
    }

    /// Consecutive maps compose to zero.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].compose(&w[1]).is_zero())
    }

    /// No map between free modules has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.maps[1..].iter().all(|m| !m.has_unit_entry())
    }

    /// Alternating rank sum against the cyclic augmentation; zero for an
    /// exact complex resolving `S / I` with `I` nonzero.
    pub fn euler_characteristic(&self) -> i64 {
        let mut total = 1i64;
        for (i, m) in self.maps.iter().enumerate() {
            let r = m.ncols() as i64;
            total += if i % 2 == 0 { -r } else { r };
        }
        total
    }

    /// Largest twist in the resolution.
    pub fn max_twist(&self) -> i64 {
        self.maps
            .iter()
            .flat_map(|m| m.source().twists.iter().copied())
            .max()
            .unwrap_or(0)
    }
}

/// Minimal graded free resolution by iterated minimal syzygies.
pub fn minimal_free_resolution(ideal: &Ideal) -> Result<GradedResolution> {
    if !ideal.is_homogeneous() {
        return Err(Error::Precondition("resolution of a non-homogeneous ideal".into()));
    }
    let gens = ideal.minimal_generators()?;
    if gens.is_empty() {
        return Ok(GradedResolution { maps: Vec::new() });
    }
    let ring = ideal.ring().clone();
    let mut maps = vec![GradedMatrix::generator_row(&ring, &gens).map_err(Error::Precondition)?];
    loop {
        let next = column_syzygies(maps.last().unwrap(), ideal.budget())?;
        if next.ncols() == 0 {
            break;
        }
        if maps.len() > ring.nvars() + 1 {
            return Err(Error::Precondition(
                "resolution longer than the number of variables".into(),
            ));
        }
        maps.push(next);
    }
    Ok(GradedResolution { maps })
}

/// Hilbert polynomial of `S / I` from the Betti table of a minimal
/// resolution: `binom(t+n, n) - sum_i (-1)^i sum_a binom(t+n-a, n)`.
pub fn hilbert_polynomial(ideal: &Ideal) -> Result<UniPoly> {
    let res = minimal_free_resolution(ideal)?;
    Ok(hilbert_polynomial_from_betti(&res.betti(), ideal.ring().nvars()))
}

pub(crate) fn hilbert_polynomial_from_betti(betti: &BettiTable, nvars: usize) -> UniPoly {
    let n = nvars - 1;
    let mut hp = UniPoly::binomial_shift(n as i64, n);
    for (i, twists) in betti.degrees().iter().enumerate() {
        for &a in twists {
            let term = UniPoly::binomial_shift(n as i64 - a, n);
            hp = if i % 2 == 0 { hp.sub(&term) } else { hp.add(&term) };
        }
    }
    hp
}

/// For an ideal of codimension 3 in three variables whose resolution ends in
/// rank one, `Ext^3(S/I, S) = S/J` with `J` generated by the entries of the
/// last map.
pub fn ext_top_cyclic(ideal: &Ideal) -> Result<Ideal> {
    let res = minimal_free_resolution(ideal)?;
    if res.maps().len() != 3 {
        return Err(Error::Precondition(format!(
            "resolution of S/I has length {}, expected 3",
            res.maps().len()
        )));
    }
    let last = &res.maps()[2];
    if last.ncols() != 1 {
        return Err(Error::Unsupported(format!(
            "last free module has rank {}; the top Ext module is not cyclic",
            last.ncols()
        )));
    }
    Ideal::new(ideal.ring(), last.column_polys(0))
}

/// `dim_k I / (J * I)` as `sum_k [HF(S/JI, k) - HF(S/I, k)]`, after checking
/// that the difference has finite support (equal Hilbert polynomials).
pub fn tensor_length(j: &Ideal, i: &Ideal) -> Result<u64> {
    let ji = j.product(i)?;
    if ji.hilbert_polynomial_from_series()? != i.hilbert_polynomial_from_series()? {
        return Err(Error::Precondition("I / JI does not have finite length".into()));
    }
    let bound = ji
        .hilbert_series_numerator()?
        .len()
        .max(i.hilbert_series_numerator()?.len()) as i64;
    let mut total = 0u64;
    for k in 0..=bound {
        total += ji.hilbert_function(k)? - i.hilbert_function(k)?;
    }
    Ok(total)
}
