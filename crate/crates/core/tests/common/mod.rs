//! Property checks shared by the property suite and the acceptance target:
//! each algebraic invariant is checked against an independent route on the
//! corpus ideals and forms and on seeded random small inputs.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use syzdist::corpus::{load_corpus, Expect};
use syzdist::distributions::{rationals, singular_scheme};
use syzdist::forms::{pfaffian4, TwistedOneForm};
use syzdist::groebner::{engine, poly_to_vec, Ideal, ModuleOrder};
use syzdist::oracle;
use syzdist::poly::{parse_ideal, parse_poly, parse_ring, Monomial, Polynomial, RingRef, Q};
use syzdist::syzygy::{linear_syzygy_space, minimal_free_resolution, syzygies, GradedMatrix, SyzygyRoute};

pub const RANDOM_SEED: u64 = 0x0ddba11;
pub const RANDOM_CASES: usize = 50;
pub const HF_MAX_DEGREE: i64 = 6;

pub fn ring4() -> RingRef {
    parse_ring("ring x,y,z,w").unwrap()
}

pub fn ideal(ring: &RingRef, src: &str) -> Ideal {
    Ideal::new(ring, parse_ideal(src, ring).unwrap()).unwrap()
}

/// `Σ (x_{j+1} x_j^d − x_{j−1}^{d+1}) dx_j`, indices mod 4.
pub fn cyclic_form(d: u32) -> TwistedOneForm {
    let r = parse_ring("ring x0..x3").unwrap();
    let coeffs = (0..4)
        .map(|j| {
            let src = format!("x{}*x{}^{} - x{}^{}", (j + 1) % 4, j, d, (j + 3) % 4, d + 1);
            parse_poly(&src, &r).unwrap()
        })
        .collect();
    TwistedOneForm::from_polys(&r, coeffs).unwrap()
}

/// Every ideal of the corpus, the singular schemes of the cyclic examples,
/// and the three local ideals in three variables.
pub fn corpus_ideals() -> Vec<(String, Ideal)> {
    let corpus = load_corpus().unwrap();
    let mut out: Vec<(String, Ideal)> = corpus.rows.iter().map(|r| (r.id(), r.parse().unwrap().ideal)).collect();
    for d in 1..=2 {
        out.push((format!("cyclic d={d}"), singular_scheme(&cyclic_form(d)).unwrap()));
    }
    let r3 = parse_ring("ring x,y,z").unwrap();
    for src in ["x, y, z", "x^2, x*z, y", "x, y, z^2"] {
        out.push((format!("local ({src})"), ideal(&r3, src)));
    }
    out
}

/// Parameter-free corpus forms (specialized at every probe point where the
/// form is nonzero) and the cyclic examples.
pub fn corpus_forms() -> Vec<(String, TwistedOneForm)> {
    let corpus = load_corpus().unwrap();
    let mut out = Vec::new();
    for row in &corpus.rows {
        let parsed = row.parse().unwrap();
        for p in &row.probes {
            let t = rationals(&p.values);
            let w = parsed.form.specialize(&t).unwrap();
            if w.polys().unwrap().iter().any(|a| !a.is_zero()) {
                let tag = if p.expect == Expect::Equal { "equal" } else { "larger" };
                out.push((format!("{} at {:?} ({tag})", row.id(), p.values), w));
            }
        }
    }
    for d in 1..=3 {
        out.push((format!("cyclic d={d}"), cyclic_form(d)));
    }
    out
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &RingRef, degree: u32, terms: usize) -> Polynomial {
    let monos = Monomial::all_of_degree(ring.nvars(), degree);
    let mut p = Polynomial::zero(ring);
    for _ in 0..terms {
        let m = monos[rng.gen_range(0..monos.len())].clone();
        let c = rng.gen_range(-3i64..=3);
        p = &p + &Polynomial::term(ring, m, Q::from_integer(c.into()));
    }
    p
}

/// Homogeneous ideals in four variables: two to four generators of degree
/// two or three with at most three terms and small coefficients.
pub fn random_ideals() -> Vec<(String, Ideal)> {
    let ring = ring4();
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut out = Vec::new();
    while out.len() < RANDOM_CASES {
        let ngens = rng.gen_range(2..=4);
        let gens: Vec<Polynomial> = (0..ngens)
            .map(|_| {
                let degree = if rng.gen_bool(0.75) { 2 } else { 3 };
                let terms = rng.gen_range(1..=3);
                random_poly(&mut rng, &ring, degree, terms)
            })
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let label = gens.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        out.push((format!("random ({label})"), Ideal::new(&ring, gens).unwrap()));
    }
    out
}

/// Projective forms `Σ_{i<j} c_ij (x_i dx_j − x_j dx_i)` with random
/// homogeneous `c_ij` of degree `d`, for `d` in 1..=2.
pub fn random_forms() -> Vec<(String, TwistedOneForm)> {
    let ring = ring4();
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED ^ 0xf0f0);
    let mut out = Vec::new();
    while out.len() < RANDOM_CASES {
        let d = rng.gen_range(1..=2);
        let mut a = vec![Polynomial::zero(&ring); 4];
        for i in 0..4 {
            for j in i + 1..4 {
                let terms = rng.gen_range(0..=2);
                let c = random_poly(&mut rng, &ring, d, terms);
                let xi = Polynomial::var(&ring, i);
                let xj = Polynomial::var(&ring, j);
                a[j] = &a[j] + &(&c * &xi);
                a[i] = &a[i] - &(&c * &xj);
            }
        }
        if a.iter().all(Polynomial::is_zero) {
            continue;
        }
        let w = TwistedOneForm::from_polys(&ring, a).unwrap();
        out.push((format!("random form #{} (d={d})", out.len()), w));
    }
    out
}

/// Outcome of every property on every input: property -> failures.
#[derive(Debug, Default)]
pub struct PropertyTally {
    pub checked: BTreeMap<&'static str, usize>,
    pub failures: BTreeMap<&'static str, Vec<String>>,
}

impl PropertyTally {
    fn record(&mut self, property: &'static str, input: &str, outcome: Result<bool, String>) {
        *self.checked.entry(property).or_default() += 1;
        let failures = self.failures.entry(property).or_default();
        match outcome {
            Ok(true) => {}
            Ok(false) => failures.push(input.to_string()),
            Err(e) => failures.push(format!("{input}: {e}")),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.values().all(Vec::is_empty)
    }

    pub fn summary(&self) -> String {
        self.checked
            .iter()
            .map(|(p, n)| {
                let bad = self.failures.get(p).map_or(0, Vec::len);
                format!("{p}: {}/{n}", n - bad)
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn check_ideal(tally: &mut PropertyTally, name: &str, i: &Ideal) {
    let ring = i.ring().clone();
    tally.record(
        "buchberger criterion",
        name,
        i.groebner_basis().map_err(err).map(|gb| {
            let order = ModuleOrder::ideal(ring.order());
            let basis: Vec<_> = gb.iter().map(poly_to_vec).collect();
            engine::satisfies_buchberger_criterion(&order, &basis)
        }),
    );
    tally.record(
        "G*M = 0",
        name,
        (|| {
            let m = syzygies(i.gens()).map_err(err)?;
            let row = GradedMatrix::generator_row(&ring, i.gens())?;
            Ok(row.compose(&m).is_zero())
        })(),
    );
    match minimal_free_resolution(i) {
        Ok(res) => {
            tally.record("complex", name, Ok(res.is_complex()));
            tally.record("minimal", name, Ok(res.is_minimal()));
        }
        Err(e) => {
            tally.record("complex", name, Err(e.to_string()));
            tally.record("minimal", name, Err(e.to_string()));
        }
    }
    tally.record(
        "linear syzygies",
        name,
        (|| {
            let gens = i.minimal_generators().map_err(err)?;
            let g = linear_syzygy_space(&gens, SyzygyRoute::Groebner).map_err(err)?;
            let o = linear_syzygy_space(&gens, SyzygyRoute::Oracle).map_err(err)?;
            Ok(g.dim() == o.dim())
        })(),
    );
    tally.record(
        "saturation idempotent",
        name,
        (|| {
            let sat = i.saturate().map_err(err)?;
            let again = sat.saturate().map_err(err)?;
            Ok(again.same_ideal(&sat).map_err(err)? && sat.contains_ideal(i).map_err(err)?)
        })(),
    );
    tally.record(
        "hilbert function",
        name,
        (|| {
            for k in 0..=HF_MAX_DEGREE {
                let ours = i.hilbert_function(k).map_err(err)?;
                let oracle = oracle::hilbert_function(i.gens(), ring.nvars(), k).map_err(err)?;
                if ours != oracle {
                    return Ok(false);
                }
            }
            Ok(true)
        })(),
    );
}

pub fn check_form(tally: &mut PropertyTally, name: &str, w: &TwistedOneForm) {
    tally.record("euler relation", name, w.satisfies_euler_relation().map_err(err));
    if w.ring().nvars() == 4 {
        tally.record(
            "Pf^2 = det",
            name,
            (|| {
                let b = w.skew_of_derivative().map_err(err)?;
                let pf = pfaffian4(&b).map_err(err)?;
                Ok(&pf * &pf == b.determinant())
            })(),
        );
    }
}

/// All properties on the corpus inputs and the random inputs.
pub fn run_property_suite() -> PropertyTally {
    let mut tally = PropertyTally::default();
    for (name, i) in corpus_ideals().iter().chain(random_ideals().iter()) {
        check_ideal(&mut tally, name, i);
    }
    for (name, w) in corpus_forms().iter().chain(random_forms().iter()) {
        check_form(&mut tally, name, w);
    }
    tally
}
