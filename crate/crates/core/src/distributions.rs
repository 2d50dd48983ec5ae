//! Codimension-one distributions on projective space: the singular scheme of
//! a twisted 1-form, the generic 1-form singular along a given scheme (built
//! from the linear first syzygies of its ideal), fiber dimensions, the
//! Pfaffian description of generic singular schemes, the degree-one
//! classification by Hilbert polynomial, and specialization probes.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::forms::{form_coordinates, pfaffian4, TwistedOneForm};
use crate::groebner::Ideal;
use crate::linalg::Matrix;
use crate::poly::{ParamPoly, Polynomial, RingRef, UniPoly, Q};
use crate::syzygy::{minimal_free_resolution, syzygy_space_in_degree, BettiTable, SyzygyRoute};

/// Seed of the coordinate change used by the reducedness test.
pub const DEFAULT_SEED: u64 = 0x5eed_0001;

/// One named pass/fail entry of a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

/// The same variables without any parameters.
fn main_ring(ring: &RingRef) -> Result<RingRef> {
    Ok(ring.with_params(Vec::new())?)
}

/// Monic greatest common divisor, read off the generator of `(a) ∩ (b)`.
pub fn polynomial_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.is_zero() {
        return Ok(b.monic());
    }
    if b.is_zero() {
        return Ok(a.monic());
    }
    let ring = a.ring().clone();
    if a.is_constant() || b.is_constant() {
        return Ok(Polynomial::one(&ring));
    }
    let meet = Ideal::new(&ring, vec![a.clone()])?.intersect(&Ideal::new(&ring, vec![b.clone()])?)?;
    let gb = meet.groebner_basis()?;
    if gb.len() != 1 {
        return Err(Error::Precondition(
            "intersection of principal ideals is not principal".into(),
        ));
    }
    let product = a.try_mul(b)?;
    product
        .div_exact(&gb[0])
        .map(|g| g.monic())
        .ok_or_else(|| Error::Precondition("least common multiple does not divide the product".into()))
}

/// Monic gcd of all the polynomials; zero when all vanish.
pub fn common_factor(polys: &[Polynomial]) -> Result<Option<Polynomial>> {
    let mut acc: Option<Polynomial> = None;
    for p in polys.iter().filter(|p| !p.is_zero()) {
        let next = match acc {
            None => p.monic(),
            Some(g) => polynomial_gcd(&g, p)?,
        };
        let done = next.is_constant();
        acc = Some(next);
        if done {
            break;
        }
    }
    Ok(acc)
}

/// The ideal `(A_0, ..., A_n)` of a parameter-free form, over the ring
/// without parameters.
pub fn coefficient_ideal(form: &TwistedOneForm) -> Result<Ideal> {
    let ring = main_ring(form.ring())?;
    let a = form
        .polys()?
        .iter()
        .map(|p| p.rebase(&ring))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ideal::new(&ring, a)
}

/// Saturated ideal of the singular scheme of a parameter-free form.
///
/// Rejects forms that are not projective (`ι_R ω ≠ 0`) and forms whose
/// coefficients share a nonconstant factor; the latter error carries the gcd.
pub fn singular_scheme(form: &TwistedOneForm) -> Result<Ideal> {
    let a = form.polys()?;
    if !form.contract_radial().is_zero() {
        return Err(Error::Precondition(
            "the contraction with the radial field is nonzero".into(),
        ));
    }
    if let Some(g) = common_factor(&a)? {
        if !g.is_constant() {
            let ring = main_ring(form.ring())?;
            return Err(Error::CommonFactor { gcd: g.rebase(&ring)? });
        }
    }
    coefficient_ideal(form)?.saturate()
}

/// Constant-term Hilbert polynomial value as a length, if the polynomial is
/// a nonnegative integer constant.
fn constant_length(hp: &UniPoly) -> Option<u64> {
    if hp.degree().unwrap_or(0) > 0 {
        return None;
    }
    let c = hp.coeffs().first().cloned().unwrap_or_else(Q::zero);
    if c.is_integer() && c >= Q::zero() {
        c.to_integer().try_into().ok()
    } else {
        None
    }
}

fn projective_dimension(ideal: &Ideal) -> Result<i64> {
    if ideal.is_unit()? {
        Ok(-1)
    } else {
        ideal.krull_dimension()
    }
}

/// The 1-forms of degree `d` singular along `V(I)`, as one form linear in a
/// block of parameters `t_0, ..., t_k`.
#[derive(Debug, Clone)]
pub struct GenericFormFamily {
    pub form: TwistedOneForm,
    pub base_ideal: Ideal,
    pub fiber_linear_dim: usize,
}

impl GenericFormFamily {
    pub fn degree(&self) -> i64 {
        self.form.degree()
    }

    pub fn projective_fiber_dim(&self) -> i64 {
        self.fiber_linear_dim as i64 - 1
    }

    /// Canonical row-reduced basis of the span of the specializations.
    pub fn span(&self) -> Vec<Vec<Q>> {
        form_span(&self.form)
    }

    /// The same space computed directly as
    /// `{A ∈ I_{d+1}^{n+1} : Σ x_i A_i = 0}` by linear algebra.
    pub fn oracle_span(&self) -> Result<Vec<Vec<Q>>> {
        crate::oracle::forms_vanishing_on(&self.base_ideal.minimal_generators()?, self.degree())
    }
}

/// Canonical row-reduced basis of the space spanned by the parameter parts
/// (and constant part) of a form, over the `(component, monomial)` layout.
pub fn form_span(form: &TwistedOneForm) -> Vec<Vec<Q>> {
    let ring = form.ring();
    let k = form.degree() + 1;
    let mut rows = Vec::new();
    for part in 0..=ring.nparams() {
        let polys: Vec<Polynomial> = form.coeffs().iter().map(|a| a.parts()[part].clone()).collect();
        if polys.iter().all(Polynomial::is_zero) {
            continue;
        }
        rows.push(form_coordinates(ring, &polys, k));
    }
    if rows.is_empty() {
        return Vec::new();
    }
    let width = rows[0].len();
    Matrix::from_rows(rows, width).row_space_canonical()
}

/// Fails unless no hypersurface of degree at most `d` contains `V(I)`.
fn require_no_low_hypersurface(ideal: &Ideal, d: i64) -> Result<()> {
    for k in 0..=d {
        let dim = ideal.ideal_piece_dim(k)?;
        if dim != 0 {
            return Err(Error::Precondition(format!(
                "the ideal contains {dim} independent forms of degree {k} <= {d}"
            )));
        }
    }
    Ok(())
}

/// The generic degree-`d` 1-form singular along `V(I)`.
///
/// With `G` the minimal generators of degree `d + 1` and `L^(k)` a basis of
/// the linear syzygies `Σ_j G_j L_j = 0`, the family is
/// `ω(t) = Σ_k t_k Σ_j G_j dL^(k)_j`.
pub fn generic_form(ideal: &Ideal, d: i64) -> Result<GenericFormFamily> {
    if d < 0 {
        return Err(Error::Precondition("negative distribution degree".into()));
    }
    require_no_low_hypersurface(ideal, d)?;
    let sat = ideal.saturate()?;
    if !sat.contains_ideal(ideal)? || !ideal.contains_ideal(&sat)? {
        return Err(Error::Precondition("the ideal is not saturated".into()));
    }
    let gens = ideal.minimal_generators()?;
    let ring = ideal.ring().clone();
    let space = syzygy_space_in_degree(&gens, d + 2, SyzygyRoute::Groebner)?;
    let k = space.dim();
    if k == 0 {
        return Err(Error::Unsupported(format!(
            "no 1-form of degree {d} is singular along the given scheme"
        )));
    }
    let pring = main_ring(&ring)?.with_numbered_params(k)?;
    let n = ring.nvars();
    let columns = space.columns(&ring);
    let mut coeffs = Vec::with_capacity(n);
    for i in 0..n {
        let mut parts = vec![Polynomial::zero(&pring)];
        for col in &columns {
            let mut acc = Polynomial::zero(&ring);
            for (g, l) in gens.iter().zip(col) {
                let dl = l.partial_derivative(i);
                if !dl.is_zero() {
                    acc = &acc + &(g * &dl);
                }
            }
            parts.push(acc.rebase(&pring)?);
        }
        coeffs.push(ParamPoly::from_parts(&pring, parts)?);
    }
    let form = TwistedOneForm::new(&pring, coeffs)?;
    Ok(GenericFormFamily {
        form,
        base_ideal: ideal.clone(),
        fiber_linear_dim: k,
    })
}

/// Linear dimension of the space of degree-`d` 1-forms singular along
/// `V(I)`.
pub fn fiber_dimension(ideal: &Ideal, d: i64) -> Result<usize> {
    match generic_form(ideal, d) {
        Ok(f) => Ok(f.fiber_linear_dim),
        Err(Error::Unsupported(_)) => Ok(0),
        Err(e) => Err(e),
    }
}

/// Outcome of comparing a specialization's singular scheme with the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeOutcome {
    /// The specialized form is singular exactly along the base scheme.
    Equal,
    /// The singular locus strictly grows: `hilbert_polynomial` is that of
    /// the saturated coefficient ideal; `common_factor` is set when the
    /// specialization has a codimension-one singular locus, and
    /// `vanishes` when the specialization is the zero form.
    Larger {
        hilbert_polynomial: UniPoly,
        common_factor: Option<Polynomial>,
        vanishes: bool,
    },
}

impl ProbeOutcome {
    pub fn is_equal(&self) -> bool {
        matches!(self, ProbeOutcome::Equal)
    }

    pub fn label(&self) -> &'static str {
        match self {
            ProbeOutcome::Equal => "EQUAL",
            ProbeOutcome::Larger { .. } => "LARGER",
        }
    }
}

/// Specialize the family at `values` and compare its singular scheme with
/// the base ideal.
pub fn degeneration_probe(family: &GenericFormFamily, values: &[Q]) -> Result<ProbeOutcome> {
    probe_form(&family.form, &family.base_ideal, values)
}

/// [`degeneration_probe`] for any parametric form with coefficients in `base`.
pub fn probe_form(form: &TwistedOneForm, base: &Ideal, values: &[Q]) -> Result<ProbeOutcome> {
    let ring = main_ring(form.ring())?;
    let n = ring.nvars();
    let specialized: Vec<Polynomial> = form
        .coeffs()
        .iter()
        .map(|a| a.specialize(values).and_then(|p| p.rebase(&ring)))
        .collect::<std::result::Result<_, _>>()?;
    if specialized.iter().all(Polynomial::is_zero) {
        return Ok(ProbeOutcome::Larger {
            hilbert_polynomial: UniPoly::binomial_shift(n as i64 - 1, n - 1),
            common_factor: None,
            vanishes: true,
        });
    }
    let one_form = TwistedOneForm::from_polys(&ring, specialized.clone())?;
    match singular_scheme(&one_form) {
        Ok(sat) => {
            if sat.same_ideal(base)? {
                Ok(ProbeOutcome::Equal)
            } else {
                Ok(ProbeOutcome::Larger {
                    hilbert_polynomial: sat.hilbert_polynomial_from_series()?,
                    common_factor: None,
                    vanishes: false,
                })
            }
        }
        Err(Error::CommonFactor { gcd }) => {
            let sat = Ideal::new(&ring, specialized)?.saturate()?;
            Ok(ProbeOutcome::Larger {
                hilbert_polynomial: sat.hilbert_polynomial_from_series()?,
                common_factor: Some(gcd),
                vanishes: false,
            })
        }
        Err(e) => Err(e),
    }
}

/// Evidence that a zero-dimensional scheme is reduced: after a seeded
/// random linear change of coordinates, the eliminant in the last variable
/// (dehomogenized) has degree equal to the length and is squarefree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducednessCertificate {
    pub seed: u64,
    pub length: u64,
    pub eliminant: UniPoly,
}

impl ReducednessCertificate {
    pub fn is_reduced(&self) -> bool {
        self.eliminant.degree() == Some(self.length as usize) && self.eliminant.is_squarefree()
    }
}

/// Build a [`ReducednessCertificate`] for a zero-dimensional ideal.
pub fn reducedness_certificate(ideal: &Ideal, seed: u64) -> Result<ReducednessCertificate> {
    if projective_dimension(ideal)? != 0 {
        return Err(Error::Precondition("the scheme is not zero-dimensional".into()));
    }
    let length = constant_length(&ideal.hilbert_polynomial_from_series()?)
        .ok_or_else(|| Error::Precondition("Hilbert polynomial is not a constant".into()))?;
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let change = loop {
        let rows: Vec<Vec<Q>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| Q::from_integer(rng.gen_range(-9i64..=9).into()))
                    .collect()
            })
            .collect();
        let m = Matrix::from_rows(rows, n);
        if !m.determinant().is_zero() {
            break m;
        }
    };
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            (0..n).fold(Polynomial::zero(&ring), |acc, j| {
                &acc + &Polynomial::var(&ring, j).scale(change.get(i, j))
            })
        })
        .collect();
    let moved = ideal.groebner_basis()?.iter().map(|g| g.substitute(&images)).collect();
    let elim: Vec<usize> = (0..n - 2).collect();
    let eliminated = Ideal::new(&ring, moved)?.eliminate(&elim)?;
    let u = n - 2;
    let mut eliminant = UniPoly::zero();
    for g in eliminated.gens() {
        let mut coeffs = vec![Q::zero(); g.total_degree().unwrap_or(0) as usize + 1];
        for (m, c) in g.terms() {
            coeffs[m.exponent(u) as usize] += c;
        }
        eliminant = eliminant.gcd(&UniPoly::new(coeffs));
    }
    Ok(ReducednessCertificate {
        seed,
        length,
        eliminant,
    })
}

/// `(c_2, c_3)` of the tangent sheaf for the degree-one distributions on
/// `P^3`, indexed by the Hilbert polynomial of the singular scheme.
pub fn degree_one_bucket(hp: &UniPoly) -> Option<(i64, i64)> {
    let known = [
        (UniPoly::from_ints(&[5]), (3, 5)),
        (UniPoly::from_ints(&[3, 1]), (2, 2)),
        (UniPoly::from_ints(&[2, 2]), (1, 1)),
        (UniPoly::from_ints(&[1, 3]), (0, 0)),
    ];
    known.into_iter().find(|(p, _)| p == hp).map(|(_, b)| b)
}

/// Invariants of the distribution defined by a parameter-free form.
#[derive(Debug, Clone)]
pub struct DistributionReport {
    pub degree: i64,
    pub singular_ideal: Ideal,
    pub hilbert_poly: UniPoly,
    pub projective_dim: i64,
    pub betti: BettiTable,
    pub integrable: bool,
    pub bucket: Option<(i64, i64)>,
    pub tangent_fields: Vec<Vec<Q>>,
}

/// Singular scheme, its Hilbert polynomial and Betti table, integrability
/// and constant tangent fields; the bucket is filled in for degree one on
/// `P^3` when the Hilbert polynomial is one of the four classified ones.
pub fn distribution_report(form: &TwistedOneForm) -> Result<DistributionReport> {
    let singular_ideal = singular_scheme(form)?;
    let betti = minimal_free_resolution(&singular_ideal)?.betti();
    let hilbert_poly = crate::syzygy::hilbert_polynomial_from_betti(&betti, singular_ideal.ring().nvars());
    let projective_dim = projective_dimension(&singular_ideal)?;
    let bucket = if form.degree() == 1 && form.ring().nvars() == 4 {
        degree_one_bucket(&hilbert_poly)
    } else {
        None
    };
    Ok(DistributionReport {
        degree: form.degree(),
        projective_dim,
        betti,
        integrable: form.is_integrable()?,
        bucket,
        tangent_fields: form.constant_tangent_fields()?,
        hilbert_poly,
        singular_ideal,
    })
}

/// [`distribution_report`] restricted to degree one on `P^3`, failing for
/// Hilbert polynomials outside the four classified buckets.
pub fn classify_degree1(form: &TwistedOneForm) -> Result<DistributionReport> {
    if form.ring().nvars() != 4 || form.degree() != 1 {
        return Err(Error::Precondition(
            "classification applies to degree-one forms on P^3".into(),
        ));
    }
    let report = distribution_report(form)?;
    if report.bucket.is_none() {
        return Err(Error::Unsupported(format!(
            "Hilbert polynomial {} is not that of a degree-1 distribution on P^3 in the classification",
            report.hilbert_poly
        )));
    }
    Ok(report)
}

/// Betti table of `S/I(Z)` predicted for the generic singular scheme of a
/// degree-`d` distribution on `P^3`.
pub fn generic_betti_shape(d: i64) -> BettiTable {
    let mut f0 = vec![d + 1; 4];
    f0.push(2 * d);
    let mut f1 = vec![2 * d + 1; 4];
    f1.push(d + 2);
    BettiTable::new(vec![f0, f1, vec![3 * d + 2]])
}

/// A resolution `S <- F_0 <- ... <- F_m` ending in a single twist `s` is
/// self-dual up to the shift by `s`: `F_{m-1-i} = s - F_i` with `F_{-1} = {0}`.
pub fn is_gorenstein_symmetric(betti: &BettiTable) -> bool {
    let mut all: Vec<Vec<i64>> = vec![vec![0]];
    all.extend(betti.degrees().iter().cloned());
    let Some(last) = all.last() else { return false };
    if last.len() != 1 {
        return false;
    }
    let s = last[0];
    let m = all.len();
    (0..m).all(|i| {
        let mut mirrored: Vec<i64> = all[i].iter().map(|a| s - a).collect();
        mirrored.sort_unstable();
        mirrored == all[m - 1 - i]
    })
}

/// Checks of the structure theorem for a distribution on `P^3` with
/// zero-dimensional singular scheme.
#[derive(Debug, Clone)]
pub struct Theorem2Report {
    pub degree: i64,
    pub singular_ideal: Ideal,
    pub pfaffian: Polynomial,
    pub length: Option<u64>,
    pub betti: BettiTable,
    pub expected_betti: BettiTable,
    pub fiber_linear_dim: usize,
    pub checks: Vec<Check>,
}

impl Theorem2Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn verify_main_theorem2(form: &TwistedOneForm) -> Result<Theorem2Report> {
    if form.ring().nvars() != 4 {
        return Err(Error::Precondition("the structure theorem is stated on P^3".into()));
    }
    let d = form.degree();
    let sat = singular_scheme(form)?;
    let dim = projective_dimension(&sat)?;
    if dim != 0 {
        return Err(Error::Precondition(format!(
            "the singular scheme has dimension {dim}, not 0"
        )));
    }
    let ring = sat.ring().clone();
    let pfaffian = pfaffian4(&form.skew_of_derivative()?)?.rebase(&ring)?;
    let mut with_pf = coefficient_ideal(form)?.gens().to_vec();
    with_pf.push(pfaffian.clone());
    let with_pf = Ideal::new(&ring, with_pf)?;
    let forward = sat.contains_ideal(&with_pf)?;
    let backward = with_pf.contains_ideal(&sat)?;
    let betti = minimal_free_resolution(&sat)?.betti();
    let expected_betti = generic_betti_shape(d);
    let fiber_linear_dim = fiber_dimension(&sat, d)?;
    let expected_fiber = if d == 1 { 5 } else { 1 };
    let length = constant_length(&sat.hilbert_polynomial_from_series()?);
    let checks = vec![
        Check::new(
            "zero-dimensional",
            true,
            format!("length {}", length.map_or("?".into(), |l| l.to_string())),
        ),
        Check::new(
            "saturation equals (A, Pf)",
            forward && backward,
            format!("(A, Pf) in sat: {forward}; sat in (A, Pf): {backward}"),
        ),
        Check::new(
            "betti shape",
            betti == expected_betti,
            format!("{} vs {}", betti.compact(), expected_betti.compact()),
        ),
        Check::new("gorenstein symmetry", is_gorenstein_symmetric(&betti), betti.compact()),
        Check::new(
            "fiber dimension",
            fiber_linear_dim == expected_fiber,
            format!("linear {fiber_linear_dim}, expected {expected_fiber}"),
        ),
    ];
    Ok(Theorem2Report {
        degree: d,
        singular_ideal: sat,
        pfaffian,
        length,
        betti,
        expected_betti,
        fiber_linear_dim,
        checks,
    })
}

/// Rational vector from integers.
pub fn rationals(values: &[i64]) -> Vec<Q> {
    values.iter().map(|&v| Q::from_integer(v.into())).collect()
}
