//! Buchberger's algorithm over free modules `S^r`.
//!
//! An ideal is the case `r = 1`. Module terms are ordered by weighted degree
//! (monomial degree plus the twist of the component) when weights are given,
//! then position-over-term with lower component indices larger, then by the
//! ring's monomial order. Homogeneous elements therefore behave exactly as
//! under position-over-term, which is what syzygy extraction relies on.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Q};

/// Default cap on the number of S-pair reductions per basis computation.
pub const DEFAULT_BUDGET: usize = 500_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "SYZDIST_BUDGET";

/// Parse a budget override: a positive integer.
pub fn parse_budget(src: &str) -> Option<usize> {
    src.trim().parse::<usize>().ok().filter(|&b| b > 0)
}

/// The step budget used by new ideals and syzygy computations: the value of
/// [`BUDGET_ENV`] when it holds a positive integer, [`DEFAULT_BUDGET`]
/// otherwise. Read once per process.
pub fn default_budget() -> usize {
    static BUDGET: std::sync::OnceLock<usize> = std::sync::OnceLock::new();
    *BUDGET.get_or_init(|| {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| parse_budget(&v))
            .unwrap_or(DEFAULT_BUDGET)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub comp: usize,
    pub mono: Monomial,
}

/// Module element: terms sorted strictly decreasing, nonzero coefficients.
pub type ModVec = Vec<(Term, Q)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleOrder {
    pub mono: MonomialOrder,
    /// Twist of each component; when present, weighted degree is compared
    /// before position.
    pub weights: Option<Vec<i64>>,
}

impl ModuleOrder {
    /// Order for plain ideals: just the ring's monomial order.
    pub fn ideal(mono: MonomialOrder) -> Self {
        ModuleOrder { mono, weights: None }
    }

    pub fn graded(mono: MonomialOrder, twists: Vec<i64>) -> Self {
        ModuleOrder {
            mono,
            weights: Some(twists),
        }
    }

    pub fn weighted_degree(&self, t: &Term) -> i64 {
        let tw = self.weights.as_ref().map(|w| w[t.comp]).unwrap_or(0);
        t.mono.degree() as i64 + tw
    }

    pub fn compare(&self, a: &Term, b: &Term) -> Ordering {
        if let Some(w) = &self.weights {
            let da = a.mono.degree() as i64 + w[a.comp];
            let db = b.mono.degree() as i64 + w[b.comp];
            match da.cmp(&db) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        b.comp.cmp(&a.comp).then_with(|| self.mono.compare(&a.mono, &b.mono))
    }

    pub fn sort(&self, v: &mut ModVec) {
        v.sort_by(|a, b| self.compare(&b.0, &a.0));
        let mut out: ModVec = Vec::with_capacity(v.len());
        for (t, c) in v.drain(..) {
            match out.last_mut() {
                Some((lt, lc)) if *lt == t => *lc += c,
                _ => out.push((t, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        *v = out;
    }
}

/// `a - c * m * b`, keeping the order (multiplying by a monomial preserves it).
pub fn sub_mul(order: &ModuleOrder, a: &ModVec, c: &Q, m: &Monomial, b: &ModVec) -> ModVec {
    let mut out: ModVec = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(t, v)| {
        (
            Term {
                comp: t.comp,
                mono: t.mono.mul(m),
            },
            v,
        )
    });
    let mut next_b = bi.next();
    while i < a.len() || next_b.is_some() {
        let ord = match (&next_b, a.get(i)) {
            (None, _) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some((tb, _)), Some((ta, _))) => order.compare(ta, tb),
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (tb, vb) = next_b.take().unwrap();
                out.push((tb, -(c * vb)));
                next_b = bi.next();
            }
            Ordering::Equal => {
                let (tb, vb) = next_b.take().unwrap();
                let v = &a[i].1 - c * vb;
                if !v.is_zero() {
                    out.push((tb, v));
                }
                i += 1;
                next_b = bi.next();
            }
        }
    }
    out
}

pub fn make_monic(v: &mut ModVec) {
    if let Some((_, lc)) = v.first() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in v.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// Index of the first basis element whose leading term divides `t`.
fn find_divisor(basis: &[ModVec], t: &Term) -> Option<usize> {
    basis.iter().position(|g| {
        let lt = &g[0].0;
        lt.comp == t.comp && lt.mono.divides(&t.mono)
    })
}

/// Full reduction of `f` modulo `basis` (all terms, not only the leading one).
pub fn reduce(order: &ModuleOrder, f: &ModVec, basis: &[ModVec]) -> ModVec {
    reduce_tracked(order, f, basis, None)
}

/// Full reduction recording the quotient multipliers: on return,
/// `f = sum_k quotients[k] * basis[k] + remainder` where each quotient is a
/// list of (monomial, coefficient) terms.
pub fn reduce_tracked(
    order: &ModuleOrder,
    f: &ModVec,
    basis: &[ModVec],
    mut quotients: Option<&mut Vec<Vec<(Monomial, Q)>>>,
) -> ModVec {
    let mut rem: ModVec = Vec::new();
    let mut cur = f.clone();
    // `cur` only ever loses its leading term to either `rem` or a reduction
    while let Some((t, c)) = cur.first().cloned() {
        match find_divisor(basis, &t) {
            Some(k) => {
                let g = &basis[k];
                let m = g[0].0.mono.quotient_of(&t.mono).expect("divisor");
                let coeff = &c / &g[0].1;
                cur = sub_mul(order, &cur, &coeff, &m, g);
                if let Some(q) = quotients.as_deref_mut() {
                    q[k].push((m, coeff));
                }
            }
            None => {
                rem.push((t, c));
                cur.remove(0);
            }
        }
    }
    rem
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
    sugar: i64,
}

/// Reduced Gröbner basis of the submodule generated by `input`, each element
/// monic, sorted by increasing leading term.
pub fn groebner(order: &ModuleOrder, input: &[ModVec], budget: usize) -> Result<Vec<ModVec>> {
    let ideal_case = input.iter().flat_map(|v| v.iter()).all(|(t, _)| t.comp == 0);
    let mut basis: Vec<ModVec> = Vec::new();
    let mut sugar: Vec<i64> = Vec::new();
    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    let mut steps = 0usize;

    let ecart = |v: &ModVec| v.iter().map(|(t, _)| order.weighted_degree(t)).max().unwrap_or(0);

    let add = |v: ModVec,
               s: i64,
               basis: &mut Vec<ModVec>,
               sugar: &mut Vec<i64>,
               pending: &mut Vec<Pair>,
               pending_set: &mut HashSet<(usize, usize)>| {
        let j = basis.len();
        let lt_j = v[0].0.clone();
        for (i, g) in basis.iter().enumerate() {
            let lt_i = &g[0].0;
            if lt_i.comp != lt_j.comp {
                continue;
            }
            let lcm = Term {
                comp: lt_j.comp,
                mono: lt_i.mono.lcm(&lt_j.mono),
            };
            let si = sugar[i] + (lcm.mono.degree() - lt_i.mono.degree()) as i64;
            let sj = s + (lcm.mono.degree() - lt_j.mono.degree()) as i64;
            pending.push(Pair {
                i,
                j,
                lcm,
                sugar: si.max(sj),
            });
            pending_set.insert((i, j));
        }
        basis.push(v);
        sugar.push(s);
    };

    for v in input {
        if v.is_empty() {
            continue;
        }
        let mut v = v.clone();
        make_monic(&mut v);
        let s = ecart(&v);
        add(v, s, &mut basis, &mut sugar, &mut pending, &mut pending_set);
    }

    while !pending.is_empty() {
        // normal strategy: smallest sugar, then smallest lcm, then creation order
        let best = (0..pending.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pending[a], &pending[b]);
                pa.sugar
                    .cmp(&pb.sugar)
                    .then_with(|| order.compare(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
            })
            .unwrap();
        let pair = pending.swap_remove(best);
        pending_set.remove(&(pair.i, pair.j));
        let (gi, gj) = (&basis[pair.i], &basis[pair.j]);

        if ideal_case && gi[0].0.mono.is_coprime(&gj[0].0.mono) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            if k == pair.i || k == pair.j {
                return false;
            }
            let lt = &basis[k][0].0;
            lt.comp == pair.lcm.comp
                && lt.mono.divides(&pair.lcm.mono)
                && !pending_set.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending_set.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }

        steps += 1;
        if steps > budget {
            return Err(Error::Budget { budget });
        }
        let mi = gi[0].0.mono.quotient_of(&pair.lcm.mono).unwrap();
        let mj = gj[0].0.mono.quotient_of(&pair.lcm.mono).unwrap();
        // both leading coefficients are 1
        let left: ModVec = gi
            .iter()
            .map(|(t, c)| {
                (
                    Term {
                        comp: t.comp,
                        mono: t.mono.mul(&mi),
                    },
                    c.clone(),
                )
            })
            .collect();
        let spoly = sub_mul(order, &left, &Q::one(), &mj, gj);
        let mut h = reduce(order, &spoly, &basis);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        add(h, pair.sugar, &mut basis, &mut sugar, &mut pending, &mut pending_set);
    }

    Ok(interreduce(order, basis))
}

/// Remove elements with redundant leading terms, tail-reduce the rest, make
/// them monic and sort by increasing leading term.
pub fn interreduce(order: &ModuleOrder, basis: Vec<ModVec>) -> Vec<ModVec> {
    let basis: Vec<ModVec> = basis.into_iter().filter(|v| !v.is_empty()).collect();
    let mut keep: Vec<ModVec> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lt = &g[0].0;
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            if k == i {
                return false;
            }
            let lh = &h[0].0;
            lh.comp == lt.comp && lh.mono.divides(&lt.mono) && (lh.mono != lt.mono || k < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out: Vec<ModVec> = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let head = keep[i][0].clone();
        let tail: ModVec = keep[i][1..].to_vec();
        let others: Vec<ModVec> = keep
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut r = vec![head];
        r.extend(reduce(order, &tail, &others));
        make_monic(&mut r);
        out.push(r);
    }
    out.sort_by(|a, b| order.compare(&a[0].0, &b[0].0));
    out
}

/// Whether every S-pair of `basis` reduces to zero modulo `basis`.
pub fn satisfies_buchberger_criterion(order: &ModuleOrder, basis: &[ModVec]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (gi, gj) = (&basis[i], &basis[j]);
            if gi[0].0.comp != gj[0].0.comp {
                continue;
            }
            let lcm = gi[0].0.mono.lcm(&gj[0].0.mono);
            let mi = gi[0].0.mono.quotient_of(&lcm).unwrap();
            let mj = gj[0].0.mono.quotient_of(&lcm).unwrap();
            let ci = gi[0].1.recip();
            let cj = &gj[0].1.recip();
            let left: ModVec = gi
                .iter()
                .map(|(t, c)| {
                    (
                        Term {
                            comp: t.comp,
                            mono: t.mono.mul(&mi),
                        },
                        c * &ci,
                    )
                })
                .collect();
            let s = sub_mul(order, &left, cj, &mj, gj);
            if !reduce(order, &s, basis).is_empty() {
                return false;
            }
        }
    }
    true
}
