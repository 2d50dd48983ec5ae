use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, RingRef, UniPoly, Q};

use super::engine::{self, default_budget, ModVec, ModuleOrder, Term};
use super::hilbert;
use super::minimal::minimal_subset;
use super::{poly_to_vec, vec_to_poly};

/// Result of saturating an ideal: the saturated ideal and the number of
/// quotient steps until stabilization.
#[derive(Debug, Clone)]
pub struct Saturation {
    pub ideal: Ideal,
    pub steps: usize,
}

/// Ideal of a polynomial ring, with a lazily computed reduced Gröbner basis
/// and saturation. Clones share the caches.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    budget: usize,
    gb: Arc<OnceLock<Result<Vec<Polynomial>>>>,
    sat: Arc<OnceLock<Result<Saturation>>>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Ideal> {
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.rebase(ring))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Ideal::from_parts(ring, gens, default_budget()))
    }

    fn from_parts(ring: &RingRef, gens: Vec<Polynomial>, budget: usize) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens,
            budget,
            gb: Arc::new(OnceLock::new()),
            sat: Arc::new(OnceLock::new()),
        }
    }

    /// Ideal with the same budget as `self`.
    fn derived(&self, gens: Vec<Polynomial>) -> Ideal {
        Ideal::from_parts(
            &self.ring,
            gens.into_iter().filter(|g| !g.is_zero()).collect(),
            self.budget,
        )
    }

    /// The irrelevant ideal generated by all variables.
    pub fn irrelevant(ring: &RingRef) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        Ideal::from_parts(ring, gens, default_budget())
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        Ideal::from_parts(ring, vec![Polynomial::one(ring)], default_budget())
    }

    /// Same generators with a different cap on S-pair reductions.
    pub fn with_budget(&self, budget: usize) -> Ideal {
        Ideal::from_parts(&self.ring, self.gens.clone(), budget)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    fn require_homogeneous(&self, what: &str) -> Result<()> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(Error::Precondition(format!("{what} needs a homogeneous ideal")))
        }
    }

    /// Reduced Gröbner basis for the ring's order, sorted by increasing
    /// leading monomial.
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        let res = self.gb.get_or_init(|| {
            let order = ModuleOrder::ideal(self.ring.order());
            let input: Vec<ModVec> = self.gens.iter().map(poly_to_vec).collect();
            engine::groebner(&order, &input, self.budget)
                .map(|gb| gb.iter().map(|v| vec_to_poly(&self.ring, v)).collect())
        });
        match res {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }

    /// Normal form of `f` modulo the reduced Gröbner basis.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        let f = f.rebase(&self.ring)?;
        Ok(normal_form(&f, self.groebner_basis()?))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, by double inclusion.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.iter().any(Polynomial::is_constant))
    }

    /// Reduced Gröbner basis under another monomial order on the same
    /// variables; the polynomials live in the re-ordered ring.
    pub fn groebner_basis_in(&self, order: MonomialOrder) -> Result<Vec<Polynomial>> {
        if order == self.ring.order() {
            return Ok(self.groebner_basis()?.to_vec());
        }
        let ring = self.ring.with_order(order)?;
        let gens = self.gens.iter().map(|g| g.reorder(&ring)).collect();
        Ok(Ideal::from_parts(&ring, gens, self.budget).groebner_basis()?.to_vec())
    }

    /// Leading monomials of a Gröbner basis for a degree-compatible order.
    pub fn graded_leading_monomials(&self) -> Result<Vec<Monomial>> {
        let gb = if self.ring.order().is_graded() {
            self.groebner_basis()?.to_vec()
        } else {
            self.groebner_basis_in(MonomialOrder::Grevlex)?
        };
        Ok(gb.iter().filter_map(|g| g.leading_monomial().cloned()).collect())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        for g in &other.gens {
            gens.push(g.rebase(&self.ring)?);
        }
        Ok(self.derived(gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.try_mul(&g.rebase(&self.ring)?)?);
            }
        }
        Ok(self.derived(gens))
    }

    /// Generators of the intersection with the subring in the variables not
    /// listed in `vars`, as an ideal of the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        let mut block: Vec<usize> = vars.to_vec();
        block.sort_unstable();
        block.dedup();
        if block.iter().any(|&v| v >= n) {
            return Err(Error::Precondition("variable index out of range".into()));
        }
        let rest: Vec<usize> = (0..n).filter(|i| !block.contains(i)).collect();
        // new position of each old variable
        let mut to_new = vec![0usize; n];
        for (pos, &v) in block.iter().chain(rest.iter()).enumerate() {
            to_new[v] = pos;
        }
        let names: Vec<String> = block
            .iter()
            .chain(rest.iter())
            .map(|&v| self.ring.vars()[v].clone())
            .collect();
        let elim_ring = Ring::new(
            names,
            self.ring.params().to_vec(),
            MonomialOrder::BlockElim(block.len()),
        )?;
        let gens = self.gens.iter().map(|g| g.remap(&elim_ring, &to_new)).collect();
        let gb = Ideal::from_parts(&elim_ring, gens, self.budget)
            .groebner_basis()?
            .to_vec();
        let mut to_old = vec![0usize; n];
        for (old, &new) in to_new.iter().enumerate() {
            to_old[new] = old;
        }
        let kept = gb
            .iter()
            .filter(|g| !(0..block.len()).any(|v| g.uses_var(v)))
            .map(|g| g.remap(&self.ring, &to_old))
            .collect();
        Ok(self.derived(kept))
    }

    /// `I ∩ J` by eliminating `t` from `t*I + (1 - t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.is_zero() || other.is_zero() {
            return Ok(self.derived(Vec::new()));
        }
        let ext = self.ring.with_front_block(&["t"])?;
        let n = self.ring.nvars();
        let shift: Vec<usize> = (1..=n).collect();
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&t * &f.remap(&ext, &shift));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.rebase(&self.ring)?.remap(&ext, &shift));
        }
        let gb = Ideal::from_parts(&ext, gens, self.budget).groebner_basis()?.to_vec();
        let back: Vec<usize> = std::iter::once(0).chain(0..n).collect();
        let kept = gb
            .iter()
            .filter(|g| !g.uses_var(0))
            .map(|g| g.remap(&self.ring, &back))
            .collect();
        Ok(self.derived(kept))
    }

    /// `I : f = (I ∩ (f)) / f`.
    pub fn quotient_by(&self, f: &Polynomial) -> Result<Ideal> {
        let f = f.rebase(&self.ring)?;
        if f.is_zero() {
            return Ok(Ideal::from_parts(
                &self.ring,
                vec![Polynomial::one(&self.ring)],
                self.budget,
            ));
        }
        let principal = self.derived(vec![f.clone()]);
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|g| {
                g.div_exact(&f)
                    .ok_or_else(|| Error::Precondition("intersection element not divisible".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.derived(gens))
    }

    /// `I : J = ∩_j (I : g_j)`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::from_parts(&self.ring, vec![Polynomial::one(&self.ring)], self.budget)))
    }

    /// `I : J^∞` by iterated quotients until the ideal stops growing. The
    /// returned ideal is generated by its reduced Gröbner basis.
    pub fn saturation_by(&self, other: &Ideal) -> Result<Saturation> {
        let mut cur = self.clone();
        let mut steps = 0;
        loop {
            let next = cur.quotient(other)?;
            steps += 1;
            if cur.contains_ideal(&next)? {
                let gens = cur.groebner_basis()?.to_vec();
                return Ok(Saturation {
                    ideal: self.derived(gens),
                    steps,
                });
            }
            cur = next;
        }
    }

    /// Saturation by the irrelevant ideal (cached).
    pub fn saturation(&self) -> Result<Saturation> {
        let res = self
            .sat
            .get_or_init(|| self.saturation_by(&Ideal::irrelevant(&self.ring)));
        res.clone()
    }

    pub fn saturate(&self) -> Result<Ideal> {
        Ok(self.saturation()?.ideal)
    }

    /// `I : x_i^∞` for homogeneous `I`: with grevlex and `x_i` the last
    /// variable, divide each Gröbner basis element by its largest power of
    /// `x_i`.
    pub fn saturate_by_variable(&self, var: usize) -> Result<Ideal> {
        self.require_homogeneous("variable saturation")?;
        let n = self.ring.nvars();
        let mut to_new: Vec<usize> = (0..n).collect();
        to_new.remove(var);
        to_new.push(var);
        // to_new currently lists old indices in new order; invert it
        let order_old: Vec<usize> = to_new.clone();
        let mut pos = vec![0usize; n];
        for (new, &old) in order_old.iter().enumerate() {
            pos[old] = new;
        }
        let names = order_old.iter().map(|&v| self.ring.vars()[v].clone()).collect();
        let r = Ring::new(names, self.ring.params().to_vec(), MonomialOrder::Grevlex)?;
        let gens = self.gens.iter().map(|g| g.remap(&r, &pos)).collect();
        let gb = Ideal::from_parts(&r, gens, self.budget).groebner_basis()?.to_vec();
        let last = n - 1;
        let out = gb
            .iter()
            .map(|g| {
                let e = g.terms().iter().map(|(m, _)| m.exponent(last)).min().unwrap_or(0);
                let divided = Polynomial::from_terms(
                    &r,
                    g.terms().iter().map(|(m, c)| {
                        let mut exps = m.exponents().to_vec();
                        exps[last] -= e;
                        (Monomial::new(&exps), c.clone())
                    }),
                );
                divided.remap(&self.ring, &order_old)
            })
            .collect();
        Ok(self.derived(out))
    }

    /// Saturation by the irrelevant ideal as `∩_i (I : x_i^∞)`, using the
    /// last-variable trick for each variable.
    pub fn saturate_fast(&self) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for v in 0..self.ring.nvars() {
            let s = self.saturate_by_variable(v)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        let acc = acc.expect("ring has variables");
        let gens = acc.groebner_basis()?.to_vec();
        Ok(self.derived(gens))
    }

    /// Dimension of the degree-`k` part of `S / I`.
    pub fn hilbert_function(&self, k: i64) -> Result<u64> {
        self.require_homogeneous("the Hilbert function")?;
        let lead = self.graded_leading_monomials()?;
        Ok(hilbert::count_standard_monomials(&lead, self.ring.nvars(), k))
    }

    /// Dimension of the degree-`k` part of `I`.
    pub fn ideal_piece_dim(&self, k: i64) -> Result<u64> {
        if k < 0 {
            return Ok(0);
        }
        let total = Monomial::all_of_degree(self.ring.nvars(), k as u32).len() as u64;
        Ok(total - self.hilbert_function(k)?)
    }

    /// Numerator of the Hilbert series over `(1 - t)^(n+1)`.
    pub fn hilbert_series_numerator(&self) -> Result<Vec<i64>> {
        self.require_homogeneous("the Hilbert series")?;
        Ok(hilbert::hilbert_series_numerator(&self.graded_leading_monomials()?))
    }

    /// Hilbert polynomial read off the Hilbert series.
    pub fn hilbert_polynomial_from_series(&self) -> Result<UniPoly> {
        let num = self.hilbert_series_numerator()?;
        Ok(hilbert::series_to_polynomial(&num, self.ring.nvars()).0)
    }

    /// Dimension of the projective zero set; `-1` when it is empty.
    pub fn krull_dimension(&self) -> Result<i64> {
        if self.is_unit()? {
            return Err(Error::Precondition("dimension of the unit ideal".into()));
        }
        let lead: Vec<Monomial> = self
            .groebner_basis()?
            .iter()
            .filter_map(|g| g.leading_monomial().cloned())
            .collect();
        Ok(hilbert::independent_set_dimension(&lead, self.ring.nvars()) as i64 - 1)
    }

    /// A minimal homogeneous generating set chosen from the generators,
    /// ordered by degree then input position.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        self.require_homogeneous("minimal generators")?;
        let order = ModuleOrder::ideal(self.ring.order());
        let cands: Vec<ModVec> = self.gens.iter().map(poly_to_vec).collect();
        let keep = minimal_subset(&order, self.ring.nvars(), &cands);
        Ok(keep.into_iter().map(|i| self.gens[i].clone()).collect())
    }

    /// The ideal generated by a minimal generating set.
    pub fn minimalized(&self) -> Result<Ideal> {
        Ok(self.derived(self.minimal_generators()?))
    }

    /// Express every reduced Gröbner basis element through the generators:
    /// returns `(b, c)` with `b = sum_i c[i] * gens[i]`.
    pub fn lift_groebner_basis(&self) -> Result<Vec<(Polynomial, Vec<Polynomial>)>> {
        let r = self.gens.len();
        let order = ModuleOrder::ideal(self.ring.order());
        let input: Vec<ModVec> = self
            .gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut v = poly_to_vec(g);
                v.push((
                    Term {
                        comp: i + 1,
                        mono: Monomial::one(self.ring.nvars()),
                    },
                    Q::one(),
                ));
                v
            })
            .collect();
        let gb = engine::groebner(&order, &input, self.budget)?;
        let (lifted, cofactors): (Vec<Polynomial>, Vec<Vec<Polynomial>>) = gb
            .iter()
            .filter(|v| v[0].0.comp == 0)
            .map(|v| {
                let head: ModVec = v.iter().filter(|(t, _)| t.comp == 0).cloned().collect();
                let mut cof = vec![Polynomial::zero(&self.ring); r];
                for (t, c) in v.iter().filter(|(t, _)| t.comp > 0) {
                    cof[t.comp - 1] = &cof[t.comp - 1] + &Polynomial::term(&self.ring, t.mono.clone(), c.clone());
                }
                (vec_to_poly(&self.ring, &head), cof)
            })
            .unzip();
        // each lifted element v satisfies v[0] = sum_i v[i + 1] * gens[i]
        let mut out = Vec::new();
        for b in self.groebner_basis()? {
            let (quots, rem) = divide(b, &lifted);
            if !rem.is_zero() {
                return Err(Error::Precondition("basis element not in the lifted span".into()));
            }
            let mut c = vec![Polynomial::zero(&self.ring); r];
            for (k, q) in quots.iter().enumerate() {
                for i in 0..r {
                    c[i] = &c[i] + &(q * &cofactors[k][i]);
                }
            }
            out.push((b.clone(), c));
        }
        Ok(out)
    }
}

/// Normal form of `f` by multivariate division with `g` (in list order).
pub fn normal_form(f: &Polynomial, g: &[Polynomial]) -> Polynomial {
    divide(f, g).1
}

/// Multivariate division: `f = sum_k q[k] * g[k] + r` with no term of `r`
/// divisible by a leading monomial of `g`.
pub fn divide(f: &Polynomial, g: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
    let ring = f.ring().clone();
    let order = ModuleOrder::ideal(ring.order());
    let basis: Vec<ModVec> = g.iter().filter(|p| !p.is_zero()).map(poly_to_vec).collect();
    let index: Vec<usize> = (0..g.len()).filter(|&k| !g[k].is_zero()).collect();
    let mut q: Vec<Vec<(Monomial, Q)>> = vec![Vec::new(); basis.len()];
    let rem = engine::reduce_tracked(&order, &poly_to_vec(f), &basis, Some(&mut q));
    let mut quots = vec![Polynomial::zero(&ring); g.len()];
    for (k, terms) in q.into_iter().enumerate() {
        quots[index[k]] = Polynomial::from_terms(&ring, terms.into_iter().filter(|(_, c)| !c.is_zero()));
    }
    (quots, vec_to_poly(&ring, &rem))
}
