//! The classified examples as versioned data, and the regression runner
//! that recomputes every stated invariant from the ideal and the form.
//!
//! The document keeps the printed coordinates and expressions verbatim;
//! where a printed expression is inconsistent, an `erratum` entry carries
//! the corrected expression next to it and the runner checks both.

use std::fmt::Write as _;
use std::sync::OnceLock;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::distributions::{
    classify_degree1, form_span, generic_form, probe_form, rationals, singular_scheme, Check, GenericFormFamily,
    ProbeOutcome,
};
use crate::error::{Error, Result};
use crate::forms::TwistedOneForm;
use crate::groebner::Ideal;
use crate::poly::{parse_ideal, parse_poly, parse_ring, Polynomial, Ring, RingRef, UniPoly, Q};
use crate::syzygy::{hilbert_polynomial, linear_syzygy_space, minimal_free_resolution, BettiTable, SyzygyRoute};

/// The bundled corpus document.
pub const CORPUS_JSON: &str = include_str!("../data/corpus.json");

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TableId {
    T2,
    T3,
    T4,
}

impl TableId {
    pub fn parse(s: &str) -> Option<TableId> {
        match s.to_ascii_uppercase().as_str() {
            "T2" => Some(TableId::T2),
            "T3" => Some(TableId::T3),
            "T4" => Some(TableId::T4),
            _ => None,
        }
    }
}

impl std::fmt::Display for TableId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Corrected expressions for a printed entry that fails its own invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generic_form: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangent_field: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Integrability {
    /// Integrable at every tested parameter value with `h != 0`.
    Always,
    /// Not integrable at some tested parameter value with `h != 0`.
    NotAlways,
    /// Integrable (for `h != 0`) exactly where the equations vanish.
    Locus { equations: Vec<String> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Expect {
    #[serde(rename = "EQUAL")]
    Equal,
    #[serde(rename = "LARGER")]
    Larger,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Probe {
    pub values: Vec<i64>,
    pub expect: Expect,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub table_id: TableId,
    pub case_no: u32,
    pub degree: i64,
    pub ring: String,
    pub ideal: String,
    pub description: String,
    pub generic_form: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangent_field: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub erratum: Option<Erratum>,
    pub h: String,
    pub expected_hp: String,
    pub expected_fiber_dim: usize,
    /// `(twist, multiplicity)` groups per homological degree.
    pub resolution: Vec<Vec<(i64, usize)>>,
    /// `(degree, dim I_degree)` pairs.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub piece_dims: Vec<(i64, u64)>,
    pub bucket: (i64, i64),
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub integrability: Option<Integrability>,
    pub probes: Vec<Probe>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Failure {
    /// Every form singular along the scheme has a codimension-one singular locus.
    CodimensionOne,
    /// The generic form is singular along a strictly larger scheme.
    Larger,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedRecord {
    pub name: String,
    pub table_id: TableId,
    pub case_no: u32,
    pub degree: i64,
    pub ring: String,
    pub ideal: String,
    pub description: String,
    pub generic_form: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub erratum: Option<Erratum>,
    pub failure: Failure,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub free_variable: Option<String>,
    pub sample: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub schema: u32,
    pub rows: Vec<TableRow>,
    pub excluded: Vec<ExcludedRecord>,
}

/// Parse a corpus document and check its schema version.
pub fn parse_corpus(src: &str) -> Result<Corpus> {
    let corpus: Corpus = serde_json::from_str(src).map_err(|e| Error::Corpus(format!("malformed document: {e}")))?;
    if corpus.schema != SCHEMA_VERSION {
        return Err(Error::Corpus(format!(
            "schema {} is not supported (expected {SCHEMA_VERSION})",
            corpus.schema
        )));
    }
    Ok(corpus)
}

/// The bundled corpus.
pub fn load_corpus() -> Result<Corpus> {
    parse_corpus(CORPUS_JSON)
}

/// Ring whose variables are the parameters of `ring`, for evaluating `h`
/// and tangent-field components.
fn parameter_ring(ring: &RingRef) -> Result<RingRef> {
    let names: Vec<&str> = ring.params().iter().map(String::as_str).collect();
    if names.is_empty() {
        return Err(Error::Corpus("the ring has no parameters".into()));
    }
    Ok(Ring::grevlex(&names)?)
}

/// A table row with every text field parsed.
#[derive(Debug, Clone)]
pub struct ParsedRow {
    pub ring: RingRef,
    pub ideal: Ideal,
    pub printed_form: TwistedOneForm,
    pub form: TwistedOneForm,
    pub printed_h: Polynomial,
    pub h: Polynomial,
    pub printed_field: Option<Vec<Polynomial>>,
    pub field: Option<Vec<Polynomial>>,
    pub expected_hp: UniPoly,
    pub expected_betti: BettiTable,
}

fn parse_field(src: &[String], pring: &RingRef) -> Result<Vec<Polynomial>> {
    Ok(src
        .iter()
        .map(|s| parse_poly(s, pring))
        .collect::<std::result::Result<_, _>>()?)
}

fn parse_ideal_in(src: &str, ring: &RingRef) -> Result<Ideal> {
    let main = ring.with_params(Vec::new())?;
    Ideal::new(&main, parse_ideal(src, &main)?)
}

impl TableRow {
    pub fn id(&self) -> String {
        format!("{}.{}", self.table_id, self.case_no)
    }

    pub fn parse(&self) -> Result<ParsedRow> {
        let ring = parse_ring(&self.ring)?;
        let pring = parameter_ring(&ring)?;
        let ideal = parse_ideal_in(&self.ideal, &ring)?;
        let printed_form = TwistedOneForm::parse(&self.generic_form, &ring)?;
        let form = match self.erratum.as_ref().and_then(|e| e.generic_form.as_ref()) {
            Some(src) => TwistedOneForm::parse(src, &ring)?,
            None => printed_form.clone(),
        };
        let printed_field = self
            .tangent_field
            .as_ref()
            .map(|f| parse_field(f, &pring))
            .transpose()?;
        let field = match self.erratum.as_ref().and_then(|e| e.tangent_field.as_ref()) {
            Some(f) => Some(parse_field(f, &pring)?),
            None => printed_field.clone(),
        };
        let shape: Vec<&[(i64, usize)]> = self.resolution.iter().map(Vec::as_slice).collect();
        let printed_h = parse_poly(&self.h, &pring)?;
        let h = match self.erratum.as_ref().and_then(|e| e.h.as_ref()) {
            Some(src) => parse_poly(src, &pring)?,
            None => printed_h.clone(),
        };
        Ok(ParsedRow {
            printed_h,
            h,
            expected_hp: UniPoly::parse(&self.expected_hp)?,
            expected_betti: BettiTable::from_shape(&shape),
            ring,
            ideal,
            printed_form,
            form,
            printed_field,
            field,
        })
    }
}

impl ExcludedRecord {
    pub fn id(&self) -> String {
        format!("{}.{} ({})", self.table_id, self.case_no, self.name)
    }
}

/// Which rows and checks to run.
#[derive(Debug, Clone, Default)]
pub struct Filter {
    pub table: Option<TableId>,
    pub case: Option<u32>,
    pub check: Option<String>,
}

impl Filter {
    fn wants_row(&self, table: TableId, case: u32) -> bool {
        self.table.is_none_or(|t| t == table) && self.case.is_none_or(|c| c == case)
    }

    fn wants_check(&self, name: &str) -> bool {
        self.check.as_deref().is_none_or(|c| name.starts_with(c))
    }
}

/// Checks run on one corpus entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowReport {
    pub id: String,
    pub checks: Vec<Check>,
}

impl RowReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Checks<'a> {
    filter: &'a Filter,
    out: Vec<Check>,
}

impl Checks<'_> {
    /// Run `f` if the filter selects `name`; errors become failed checks.
    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        if !self.filter.wants_check(name) {
            return;
        }
        let check = match f() {
            Ok((pass, detail)) => Check::new(name, pass, detail),
            Err(e) => Check::new(name, false, format!("error: {e}")),
        };
        self.out.push(check);
    }
}

/// Parameter vectors with entries in `{-1, 0, 1, 2}`.
fn sample_grid(nparams: usize) -> Vec<Vec<i64>> {
    grid(nparams, &[-1, 0, 1, 2])
}

/// The grid used to compare the probe outcome against `h`: `{-1, 0, 1, 2}^k`
/// for up to four parameters, `{-1, 0, 1}^k` beyond that.
fn locus_grid(nparams: usize) -> Vec<Vec<i64>> {
    if nparams <= 4 {
        grid(nparams, &[-1, 0, 1, 2])
    } else {
        grid(nparams, &[-1, 0, 1])
    }
}

fn grid(nparams: usize, entries: &'static [i64]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..nparams {
        out = out
            .into_iter()
            .flat_map(|v| {
                entries.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn format_values(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

/// `Σ v_i(t) A_i(t)` at a parameter value, without requiring the
/// specialized form to be nonzero.
fn contraction_at(form: &TwistedOneForm, field: &[Polynomial], t: &[Q]) -> Result<Polynomial> {
    let main = form.ring().with_params(Vec::new())?;
    let mut acc = Polynomial::zero(&main);
    for (a, v) in form.coeffs().iter().zip(field) {
        let c = v.evaluate(t);
        if c.is_zero() {
            continue;
        }
        acc = &acc + &a.specialize(t)?.rebase(&main)?.scale(&c);
    }
    Ok(acc)
}

/// Specialize if the result is a nonzero form.
fn specialize_nonzero(form: &TwistedOneForm, t: &[Q]) -> Result<Option<TwistedOneForm>> {
    if form.coeffs().iter().all(|a| a.specialize(t).is_ok_and(|p| p.is_zero())) {
        return Ok(None);
    }
    Ok(Some(form.specialize(t)?))
}

/// Probe outcome (`true` for EQUAL) at every grid point where the form
/// does not vanish.
fn probe_scan(parsed: &ParsedRow) -> Result<Vec<(Vec<i64>, bool)>> {
    let points: Vec<Vec<i64>> = locus_grid(parsed.ring.nparams())
        .into_iter()
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect();
    let scanned: Result<Vec<Option<(Vec<i64>, bool)>>> = points
        .into_par_iter()
        .map(|v| {
            let t = rationals(&v);
            if specialize_nonzero(&parsed.form, &t)?.is_none() {
                return Ok(None);
            }
            let equal = probe_form(&parsed.form, &parsed.ideal, &t)?.is_equal();
            Ok(Some((v, equal)))
        })
        .collect();
    Ok(scanned?.into_iter().flatten().collect())
}

/// Grid points where `EQUAL` disagrees with `h != 0`.
fn locus_mismatches(scan: &[(Vec<i64>, bool)], h: &Polynomial) -> Vec<Vec<i64>> {
    scan.iter()
        .filter(|(v, equal)| *equal == h.evaluate(&rationals(v)).is_zero())
        .map(|(v, _)| v.clone())
        .collect()
}

/// Parameter points on which a binary form of degree at most 5 vanishing
/// identically is certified: six distinct points of the projective line.
fn binary_samples() -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = (0..5).map(|k| vec![1, k]).collect();
    out.push(vec![0, 1]);
    out
}

fn run_row(row: &TableRow, filter: &Filter) -> RowReport {
    let mut c = Checks {
        filter,
        out: Vec::new(),
    };
    let parsed = match row.parse() {
        Ok(p) => p,
        Err(e) => {
            c.run("parse", || Err(e));
            return RowReport {
                id: row.id(),
                checks: c.out,
            };
        }
    };
    c.run("parse", || Ok((true, String::new())));
    let d = row.degree;
    let family: std::result::Result<GenericFormFamily, Error> = generic_form(&parsed.ideal, d);
    let scan_cell: OnceLock<std::result::Result<Vec<(Vec<i64>, bool)>, Error>> = OnceLock::new();
    let scan = || scan_cell.get_or_init(|| probe_scan(&parsed)).clone();

    c.run("hypersurface guard", || {
        let dims = (0..=d)
            .map(|k| parsed.ideal.ideal_piece_dim(k))
            .collect::<Result<Vec<_>>>()?;
        Ok((dims.iter().all(|&x| x == 0), format!("dim I_k for k <= {d}: {dims:?}")))
    });
    if !row.piece_dims.is_empty() {
        c.run("graded pieces", || {
            let mut ok = true;
            let mut detail = Vec::new();
            for &(k, expected) in &row.piece_dims {
                let got = parsed.ideal.ideal_piece_dim(k)?;
                ok &= got == expected;
                detail.push(format!("dim I_{k} = {got} (expected {expected})"));
            }
            Ok((ok, detail.join(", ")))
        });
    }
    c.run("span", || {
        let fam = family.clone()?;
        let ours = fam.span();
        let table = form_span(&parsed.form);
        Ok((
            ours == table,
            format!("generic family dim {}, table form dim {}", ours.len(), table.len()),
        ))
    });
    c.run("oracle span", || {
        let fam = family.clone()?;
        Ok((fam.span() == fam.oracle_span()?, String::new()))
    });
    if let Some(err) = &row.erratum {
        c.run("erratum", || {
            let mut ok = true;
            let mut detail = vec![err.note.clone()];
            if err.generic_form.is_some() {
                let fam = family.clone()?;
                let printed_matches = form_span(&parsed.printed_form) == fam.span();
                let radial = parsed.printed_form.contract_radial();
                ok &= !printed_matches && form_span(&parsed.form) == fam.span();
                detail.push(format!(
                    "printed form: span matches {printed_matches}, radial contraction {}",
                    if radial.is_zero() {
                        "0".to_string()
                    } else {
                        radial.to_string()
                    }
                ));
            }
            if err.h.is_some() {
                let scan = scan()?;
                let printed = locus_mismatches(&scan, &parsed.printed_h).len();
                let corrected = locus_mismatches(&scan, &parsed.h).len();
                ok &= printed > 0 && corrected == 0;
                detail.push(format!(
                    "{} grid points: printed h disagrees with the probe at {printed}, corrected h at {corrected}",
                    scan.len()
                ));
            }
            let field_erratum = err.tangent_field.is_some();
            if let (true, Some(printed), Some(field)) = (field_erratum, &parsed.printed_field, &parsed.field) {
                let mut printed_tangent = true;
                let mut corrected_tangent = true;
                for t in binary_samples() {
                    let t = rationals(&t);
                    printed_tangent &= contraction_at(&parsed.form, printed, &t)?.is_zero();
                    corrected_tangent &= contraction_at(&parsed.form, field, &t)?.is_zero();
                }
                ok &= !printed_tangent && corrected_tangent;
                detail.push(format!(
                    "printed field tangent: {printed_tangent}, corrected field tangent: {corrected_tangent}"
                ));
            }
            Ok((ok, detail.join("; ")))
        });
    }
    c.run("hilbert polynomial", || {
        let hp = hilbert_polynomial(&parsed.ideal)?;
        let series = parsed.ideal.hilbert_polynomial_from_series()?;
        Ok((
            hp == parsed.expected_hp && series == hp,
            format!("{hp} (expected {})", parsed.expected_hp),
        ))
    });
    c.run("fiber dimension", || {
        let gens = parsed.ideal.minimal_generators()?;
        let groebner = linear_syzygy_space(&gens, SyzygyRoute::Groebner)?.dim();
        let oracle = linear_syzygy_space(&gens, SyzygyRoute::Oracle)?.dim();
        let fam = family.clone()?.fiber_linear_dim;
        let e = row.expected_fiber_dim;
        Ok((
            groebner == e && oracle == e && fam == e,
            format!("family {fam}, linear syzygies {groebner} (Groebner) / {oracle} (linear algebra), expected {e}"),
        ))
    });
    c.run("resolution", || {
        let res = minimal_free_resolution(&parsed.ideal)?;
        let betti = res.betti();
        Ok((
            betti == parsed.expected_betti && res.is_complex() && res.is_minimal(),
            format!("{} (expected {})", betti.compact(), parsed.expected_betti.compact()),
        ))
    });
    c.run("probe", || {
        let mut ok = true;
        let mut detail = Vec::new();
        for p in &row.probes {
            let t = rationals(&p.values);
            let h = parsed.h.evaluate(&t);
            let outcome = probe_form(&parsed.form, &parsed.ideal, &t)?;
            let consistent = (p.expect == Expect::Equal) == !h.is_zero();
            let matches = outcome.is_equal() == (p.expect == Expect::Equal);
            ok &= consistent && matches;
            let extra = match &outcome {
                ProbeOutcome::Equal => String::new(),
                ProbeOutcome::Larger {
                    hilbert_polynomial,
                    common_factor,
                    vanishes,
                } => {
                    let mut s = format!(" HP {hilbert_polynomial}");
                    if let Some(g) = common_factor {
                        s.push_str(&format!(", common factor {g}"));
                    }
                    if *vanishes {
                        s.push_str(", form vanishes");
                    }
                    s
                }
            };
            detail.push(format!(
                "{} h={h}: {}{extra}",
                format_values(&p.values),
                outcome.label()
            ));
        }
        Ok((ok, detail.join("; ")))
    });
    c.run("h locus", || {
        let scan = scan()?;
        let bad = locus_mismatches(&scan, &parsed.h);
        let larger = scan.iter().filter(|s| !s.1).count();
        let shown: Vec<String> = bad.iter().take(4).map(|v| format_values(v)).collect();
        Ok((
            bad.is_empty() && !scan.is_empty(),
            format!(
                "{} grid points ({larger} LARGER): EQUAL iff h != 0 fails at {}{}",
                scan.len(),
                bad.len(),
                if bad.is_empty() {
                    String::new()
                } else {
                    format!(", e.g. {}", shown.join(" "))
                }
            ),
        ))
    });
    c.run("bucket", || {
        let p = row
            .probes
            .iter()
            .find(|p| p.expect == Expect::Equal)
            .ok_or_else(|| Error::Corpus("no EQUAL probe".into()))?;
        let t = rationals(&p.values);
        let report = classify_degree1(&parsed.form.specialize(&t)?)?;
        Ok((
            report.bucket == Some(row.bucket),
            format!("{:?} at {}", report.bucket, format_values(&p.values)),
        ))
    });
    if let Some(field) = &parsed.field {
        c.run("tangent field", || {
            let mut ok = true;
            for t in binary_samples() {
                ok &= contraction_at(&parsed.form, field, &rationals(&t))?.is_zero();
            }
            // the constant tangent fields of a member span the stated line
            let p = row
                .probes
                .iter()
                .find(|p| p.expect == Expect::Equal)
                .ok_or_else(|| Error::Corpus("no EQUAL probe".into()))?;
            let t = rationals(&p.values);
            let fields = parsed.form.specialize(&t)?.constant_tangent_fields()?;
            let v: Vec<Q> = field.iter().map(|f| f.evaluate(&t)).collect();
            let line = fields.len() == 1 && {
                let w = &fields[0];
                let k = w.iter().position(|x| !x.is_zero()).unwrap_or(0);
                !v[k].is_zero() && w.iter().zip(&v).all(|(a, b)| a * &v[k] == b * &w[k])
            };
            Ok((
                ok && line,
                format!(
                    "identity on six points of P^1: {ok}; field line recovered at {}: {line}",
                    format_values(&p.values)
                ),
            ))
        });
    }
    if let Some(integ) = &row.integrability {
        let nparams = parsed.ring.nparams();
        let samples: Vec<(Vec<i64>, bool)> = sample_grid(nparams)
            .into_iter()
            .filter(|v| !parsed.h.evaluate(&rationals(v)).is_zero())
            .filter_map(|v| {
                let f = specialize_nonzero(&parsed.form, &rationals(&v)).ok().flatten()?;
                Some((v, f.is_integrable().ok()?))
            })
            .collect();
        match integ {
            Integrability::Always => c.run("integrability", || {
                let bad: Vec<&Vec<i64>> = samples.iter().filter(|s| !s.1).map(|s| &s.0).collect();
                Ok((
                    bad.is_empty() && !samples.is_empty(),
                    format!("{} samples with h != 0, {} not integrable", samples.len(), bad.len()),
                ))
            }),
            Integrability::NotAlways => c.run("integrability", || {
                let bad = samples.iter().find(|s| !s.1);
                Ok((
                    bad.is_some(),
                    match bad {
                        Some(s) => format!("not integrable at {}", format_values(&s.0)),
                        None => format!("integrable at all {} samples", samples.len()),
                    },
                ))
            }),
            Integrability::Locus { equations } => {
                let eqs: Result<Vec<Polynomial>> = parameter_ring(&parsed.ring)
                    .and_then(|pr| equations.iter().map(|e| Ok(parse_poly(e, &pr)?)).collect());
                let on_locus = |v: &[i64]| -> Result<bool> {
                    let t = rationals(v);
                    Ok(eqs.clone()?.iter().all(|e| e.evaluate(&t).is_zero()))
                };
                let stated = equations.join(" = ") + " = 0";
                c.run("integrability necessary", || {
                    let mut bad = Vec::new();
                    let mut count = 0;
                    for (v, integrable) in &samples {
                        if *integrable {
                            count += 1;
                            if !on_locus(v)? {
                                bad.push(format_values(v));
                            }
                        }
                    }
                    Ok((
                        bad.is_empty() && count > 0,
                        format!(
                            "{count} integrable samples, {} off {stated}: {}",
                            bad.len(),
                            bad.join(" ")
                        ),
                    ))
                });
                c.run("integrability sufficient", || {
                    let mut bad = Vec::new();
                    let mut count = 0;
                    for (v, integrable) in &samples {
                        if on_locus(v)? {
                            count += 1;
                            if !integrable {
                                bad.push(format_values(v));
                            }
                        }
                    }
                    let shown: Vec<String> = bad.iter().take(4).cloned().collect();
                    Ok((
                        bad.is_empty() && count > 0,
                        format!(
                            "{count} samples on {stated}, {} not integrable{}{}",
                            bad.len(),
                            if bad.is_empty() { "" } else { ", e.g. " },
                            shown.join(" ")
                        ),
                    ))
                });
            }
        }
    }
    RowReport {
        id: row.id(),
        checks: c.out,
    }
}

fn run_excluded(rec: &ExcludedRecord, filter: &Filter) -> RowReport {
    let mut c = Checks {
        filter,
        out: Vec::new(),
    };
    let parsed = (|| -> Result<_> {
        let ring = parse_ring(&rec.ring)?;
        let ideal = parse_ideal_in(&rec.ideal, &ring)?;
        let printed = TwistedOneForm::parse(&rec.generic_form, &ring)?;
        let form = match rec.erratum.as_ref().and_then(|e| e.generic_form.as_ref()) {
            Some(src) => TwistedOneForm::parse(src, &ring)?,
            None => printed.clone(),
        };
        Ok((ring, ideal, printed, form))
    })();
    let (ring, ideal, printed, form) = match parsed {
        Ok(p) => p,
        Err(e) => {
            c.run("parse", || Err(e));
            return RowReport {
                id: rec.id(),
                checks: c.out,
            };
        }
    };
    c.run("parse", || Ok((true, String::new())));
    let family = generic_form(&ideal, rec.degree);
    c.run("span", || {
        let fam = family.clone()?;
        Ok((
            fam.span() == form_span(&form),
            format!("generic family dim {}", fam.fiber_linear_dim),
        ))
    });
    if let Some(err) = &rec.erratum {
        c.run("erratum", || {
            let fam = family.clone()?;
            let printed_matches = form_span(&printed) == fam.span();
            let radial = printed.contract_radial();
            Ok((
                !printed_matches && !radial.is_zero(),
                format!(
                    "{}; printed form: span matches {printed_matches}, radial contraction {radial}",
                    err.note
                ),
            ))
        });
    }
    let t = rationals(&rec.sample);
    match rec.failure {
        Failure::CodimensionOne => c.run("codimension one", || match singular_scheme(&form.specialize(&t)?) {
            Err(Error::CommonFactor { gcd }) => {
                Ok((true, format!("common factor {gcd} at {}", format_values(&rec.sample))))
            }
            Ok(i) => Ok((false, format!("singular scheme {i} has codimension >= 2"))),
            Err(e) => Err(e),
        }),
        Failure::Larger => c.run("larger singular scheme", || {
            let outcome = probe_form(&form, &ideal, &t)?;
            let detail = match &outcome {
                ProbeOutcome::Equal => "singular scheme equals the base".to_string(),
                ProbeOutcome::Larger { hilbert_polynomial, .. } => format!(
                    "at {} the singular scheme has Hilbert polynomial {hilbert_polynomial}",
                    format_values(&rec.sample)
                ),
            };
            Ok((!outcome.is_equal(), detail))
        }),
    }
    if let Some(var) = &rec.free_variable {
        c.run("free variable", || {
            let i = ring
                .var_index(var)
                .ok_or_else(|| Error::Corpus(format!("unknown variable {var}")))?;
            let free =
                form.coeffs()[i].is_zero() && form.coeffs().iter().all(|a| a.parts().iter().all(|p| !p.uses_var(i)));
            Ok((free, format!("the form does not involve {var}")))
        });
    }
    RowReport {
        id: rec.id(),
        checks: c.out,
    }
}

/// Run every selected row and excluded record; rows run in parallel and
/// reports come back in document order.
pub fn run_regressions(corpus: &Corpus, filter: &Filter) -> Vec<RowReport> {
    enum Task<'a> {
        Row(&'a TableRow),
        Excluded(&'a ExcludedRecord),
    }
    let tasks: Vec<Task> = corpus
        .rows
        .iter()
        .filter(|r| filter.wants_row(r.table_id, r.case_no))
        .map(Task::Row)
        .chain(
            corpus
                .excluded
                .iter()
                .filter(|r| filter.wants_row(r.table_id, r.case_no))
                .map(Task::Excluded),
        )
        .collect();
    tasks
        .par_iter()
        .map(|t| match t {
            Task::Row(r) => run_row(r, filter),
            Task::Excluded(r) => run_excluded(r, filter),
        })
        .collect()
}

/// Machine-readable report.
pub fn reports_to_json(reports: &[RowReport]) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "pass": reports.iter().all(RowReport::passed),
        "rows": reports.iter().map(|r| json!({
            "id": r.id,
            "pass": r.passed(),
            "checks": r.checks.iter().map(|c| json!({
                "name": c.name,
                "pass": c.pass,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// JUnit-style XML: one test suite per row, one test case per check.
pub fn reports_to_junit(reports: &[RowReport]) -> String {
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failures: usize = reports
        .iter()
        .map(|r| r.checks.iter().filter(|c| !c.pass).count())
        .sum();
    let mut out = String::from("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<testsuites name=\"corpus\" tests=\"{total}\" failures=\"{failures}\">"
    );
    for r in reports {
        let f = r.checks.iter().filter(|c| !c.pass).count();
        let _ = writeln!(
            out,
            "  <testsuite name=\"{}\" tests=\"{}\" failures=\"{f}\">",
            xml_escape(&r.id),
            r.checks.len()
        );
        for c in &r.checks {
            let name = xml_escape(&c.name);
            if c.pass {
                let _ = writeln!(
                    out,
                    "    <testcase classname=\"{}\" name=\"{name}\"/>",
                    xml_escape(&r.id)
                );
            } else {
                let _ = writeln!(
                    out,
                    "    <testcase classname=\"{}\" name=\"{name}\"><failure message=\"{}\"/></testcase>",
                    xml_escape(&r.id),
                    xml_escape(&c.detail)
                );
            }
        }
        out.push_str("  </testsuite>\n");
    }
    out.push_str("</testsuites>\n");
    out
}

/// Plain-text report: one line per check.
pub fn reports_to_text(reports: &[RowReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{} {}", r.id, if r.passed() { "PASS" } else { "FAIL" });
        for c in &r.checks {
            let _ = write!(out, "  [{}] {}", if c.pass { "pass" } else { "FAIL" }, c.name);
            if !c.detail.is_empty() {
                let _ = write!(out, ": {}", c.detail);
            }
            out.push('\n');
        }
    }
    out
}
