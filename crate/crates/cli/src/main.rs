//! `syzdist`: command-line front end.
//!
//! Exit codes: 0 on success, 1 when a check fails (a predicate is false, a
//! verification or corpus check does not pass), 2 on usage, parse, or
//! computation errors.

mod session;

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use syzdist::chern::{
    character_dual, chern_to_character, chi_pair, dim_hom, phi, phi_top_chern, todd_projective, ChernClassVector,
};
use syzdist::corpus::{
    load_corpus, reports_to_json, reports_to_junit, reports_to_text, run_regressions, Filter, TableId,
};
use syzdist::distributions::{
    classify_degree1, degeneration_probe, fiber_dimension, generic_form, probe_form, reducedness_certificate,
    singular_scheme, verify_main_theorem2, ProbeOutcome, DEFAULT_SEED,
};
use syzdist::forms::{pfaffian4, pfaffian_cofactors};
use syzdist::groebner::{parse_budget, BUDGET_ENV};
use syzdist::poly::{parse_rational, parse_ring, MonomialOrder, Polynomial, Q};
use syzdist::syzygy::{
    ext_top_cyclic, hilbert_polynomial, linear_syzygy_space, minimal_free_resolution, syzygies, tensor_length,
    BettiTable, SyzygyRoute,
};

use session::Session;

const SCHEMA: u32 = 1;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(String),
}

pub type CliResult<T> = Result<T, CliError>;

impl From<syzdist::Error> for CliError {
    fn from(e: syzdist::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<syzdist::poly::PolyError> for CliError {
    fn from(e: syzdist::poly::PolyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "syzdist",
    version,
    about = "Gröbner bases, syzygies, and singular schemes of codimension-one distributions"
)]
struct Cli {
    /// Emit a JSON object (with `"schema": 1`) instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Ring declaration, e.g. `ring x,y,z,w params t0,t1`.
    #[arg(long, global = true, value_name = "DECL")]
    ring: Option<String>,
    /// Session file with a ring declaration and `name = value` bindings,
    /// referenced as `@name`.
    #[arg(long, global = true, value_name = "FILE")]
    session: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis.
    Gb {
        ideal: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
    },
    /// Saturation by the irrelevant ideal, or by `--by`.
    Sat {
        ideal: String,
        #[arg(long, value_name = "IDEAL")]
        by: Option<String>,
    },
    /// Hilbert function of S/I in degrees 0..=DEGREE.
    Hf {
        ideal: String,
        #[arg(long, default_value_t = 6)]
        degree: i64,
    },
    /// Krull dimension of S/I and projective dimension of V(I).
    Dim { ideal: String },
    /// First syzygies of the given generators.
    Syz {
        gens: String,
        /// Only the syzygies with linear coefficients, computed both ways.
        #[arg(long)]
        linear: bool,
    },
    /// Minimal graded free resolution of S/I.
    Res { ideal: String },
    /// Betti table of S/I.
    Betti { ideal: String },
    /// Hilbert polynomial of S/I.
    Hp { ideal: String },
    /// Top Ext module J of S/I (three variables) and the length of I/JI.
    Extlen { ideal: String },
    /// Twisted 1-form operations.
    Form {
        #[command(subcommand)]
        op: FormOp,
    },
    /// Distribution-level operations.
    Dist {
        #[command(subcommand)]
        op: DistOp,
    },
    /// Chern-class arithmetic on P^n.
    Chern {
        #[command(subcommand)]
        op: ChernOp,
    },
    /// The built-in corpus of classified examples.
    Corpus {
        #[command(subcommand)]
        op: CorpusOp,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Subcommand, Debug)]
enum FormOp {
    /// Check ι_R ω = 0 and B·x = (d+2)·A.
    CheckEuler { form: String },
    /// Compute ω ∧ dω.
    Integrable { form: String },
    /// Pfaffian of the skew matrix of dω, with the cofactor identity.
    Pfaffian { form: String },
    /// Constant vector fields v with ω(v) = 0.
    TangentFields { form: String },
}

#[derive(Args, Debug)]
struct FormArg {
    #[arg(long)]
    form: String,
}

#[derive(Args, Debug)]
struct IdealDegree {
    #[arg(long)]
    ideal: String,
    #[arg(long, default_value_t = 1)]
    degree: i64,
}

#[derive(Subcommand, Debug)]
enum DistOp {
    /// Singular scheme: saturation of the coefficient ideal.
    Sing(FormArg),
    /// Generic 1-form of degree d singular along V(I).
    Genform(IdealDegree),
    /// Dimension of the space of degree-d forms singular along V(I).
    Fiberdim(IdealDegree),
    /// Check the structure theorem for a form with 0-dimensional singular
    /// scheme on P^3.
    VerifyThm2(FormArg),
    /// Hilbert-polynomial bucket of a degree-1 form on P^3.
    Classify(FormArg),
    /// Compare the singular scheme of a specialization with a base ideal.
    Probe {
        /// Parametrized form; defaults to the generic form of `--ideal`.
        #[arg(long)]
        form: Option<String>,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 1)]
        degree: i64,
        /// Comma-separated rational parameter values.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        values: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum ChernOp {
    /// χ(E, F) = ∫ ch(E)^∨ ch(F) td(P^n).
    Chi {
        #[arg(long = "rankE")]
        rank_e: i64,
        #[arg(long = "cE", value_delimiter = ',', allow_hyphen_values = true)]
        c_e: Vec<i64>,
        #[arg(long = "rankF")]
        rank_f: i64,
        #[arg(long = "cF", value_delimiter = ',', allow_hyphen_values = true)]
        c_f: Vec<i64>,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// dim Ext^1(E, F); also report dim Hom = χ + dim Ext^1.
        #[arg(long)]
        ext1: Option<u64>,
    },
    /// φ(d, n), the length of the generic singular scheme.
    Phi { d: u32, n: u32 },
    /// Chern character of a class vector.
    Ch {
        #[arg(long)]
        rank: i64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        c: Vec<i64>,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Print the character of the dual.
        #[arg(long)]
        dual: bool,
    },
    /// Todd class of P^n.
    Todd { n: usize },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ReportFormat {
    Text,
    Json,
    Junit,
}

#[derive(Subcommand, Debug)]
enum CorpusOp {
    /// Run the regression checks.
    Run {
        #[arg(long)]
        table: Option<String>,
        #[arg(long)]
        case: Option<u32>,
        /// Run only checks whose name starts with this prefix.
        #[arg(long)]
        check: Option<String>,
        #[arg(long, value_enum)]
        format: Option<ReportFormat>,
        /// Write the report to a file instead of standard output.
        #[arg(long, value_name = "FILE")]
        output: Option<String>,
    },
    /// List the corpus entries.
    List,
}

/// Rendered result of one command.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn new(command: &str, text: String, mut fields: Value) -> Self {
        fields["schema"] = json!(SCHEMA);
        fields["command"] = json!(command);
        Report {
            text,
            json: fields,
            ok: true,
        }
    }

    fn with_ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self.json["pass"] = json!(ok);
        self
    }
}

fn polys_json(ps: &[Polynomial]) -> Value {
    json!(ps.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn lines(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| format!("{p}\n")).collect()
}

fn rationals_json(v: &[Q]) -> Value {
    json!(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn tuple(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn betti_json(b: &BettiTable) -> Value {
    json!({ "table": b.to_json(), "compact": b.compact() })
}

fn run(cli: Cli) -> CliResult<Report> {
    if let Ok(v) = std::env::var(BUDGET_ENV) {
        if parse_budget(&v).is_none() {
            return Err(CliError::Usage(format!(
                "{BUDGET_ENV} must be a positive integer, got `{v}`"
            )));
        }
    }
    if let Some(n) = cli.jobs {
        if n == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let ring = cli.ring.as_deref().map(parse_ring).transpose()?;
    let session = match &cli.session {
        Some(path) => Session::load(path, ring)?,
        None => Session::new(ring),
    };
    match cli.command {
        Command::Gb { ideal, order } => {
            let i = session.ideal(&ideal)?;
            let basis = match order {
                OrderArg::Grevlex => i.groebner_basis()?.to_vec(),
                OrderArg::Lex => i.groebner_basis_in(MonomialOrder::Lex)?,
            };
            Ok(Report::new("gb", lines(&basis), json!({ "basis": polys_json(&basis) })))
        }
        Command::Sat { ideal, by } => {
            let i = session.ideal(&ideal)?;
            let sat = match by {
                Some(j) => i.saturation_by(&session.ideal(&j)?)?,
                None => i.saturation()?,
            };
            let gens = sat.ideal.minimal_generators()?;
            let text = format!("{}quotient steps: {}\n", lines(&gens), sat.steps);
            Ok(Report::new(
                "sat",
                text,
                json!({ "generators": polys_json(&gens), "steps": sat.steps }),
            ))
        }
        Command::Hf { ideal, degree } => {
            let i = session.ideal(&ideal)?;
            let values = (0..=degree)
                .map(|k| i.hilbert_function(k))
                .collect::<Result<Vec<_>, _>>()?;
            let text: String = values.iter().enumerate().map(|(k, v)| format!("{k}: {v}\n")).collect();
            Ok(Report::new("hf", text, json!({ "values": values })))
        }
        Command::Dim { ideal } => {
            let i = session.ideal(&ideal)?;
            // the unit ideal cuts out the empty scheme; S/S has no dimension
            let (projective, affine) = if i.is_unit()? {
                (-1, None)
            } else {
                let p = i.krull_dimension()?;
                (p, Some(p + 1))
            };
            let affine_text = affine.map_or("none (S/I = 0)".to_string(), |a| a.to_string());
            Ok(Report::new(
                "dim",
                format!("projective dimension {projective}\nKrull dimension of S/I {affine_text}\n"),
                json!({ "projective": projective, "krull": affine }),
            ))
        }
        Command::Syz { gens, linear } => {
            let i = session.ideal(&gens)?;
            if linear {
                let g = linear_syzygy_space(i.gens(), SyzygyRoute::Groebner)?;
                let o = linear_syzygy_space(i.gens(), SyzygyRoute::Oracle)?;
                let ok = g.dim() == o.dim();
                let mut text = format!(
                    "linear syzygies: {} (Groebner), {} (linear algebra)\n",
                    g.dim(),
                    o.dim()
                );
                for col in g.columns(i.ring()) {
                    let parts: Vec<String> = col.iter().map(ToString::to_string).collect();
                    writeln!(text, "[{}]", parts.join(", ")).expect("string write");
                }
                return Ok(
                    Report::new("syz", text, json!({ "linear_dim": g.dim(), "oracle_dim": o.dim() })).with_ok(ok),
                );
            }
            let m = syzygies(i.gens())?;
            let cols: Vec<Value> = (0..m.ncols()).map(|j| polys_json(&m.column_polys(j))).collect();
            Ok(Report::new(
                "syz",
                format!("{m}\n"),
                json!({ "source_twists": m.source().to_string(), "columns": cols }),
            ))
        }
        Command::Res { ideal } => {
            let i = session.ideal(&ideal)?;
            let res = minimal_free_resolution(&i)?;
            let mut text = String::new();
            for (k, m) in res.maps().iter().enumerate() {
                writeln!(text, "d{}: {} <- {}\n{m}", k + 1, m.target(), m.source()).expect("string write");
            }
            text.push_str(&res.betti().grid());
            let maps: Vec<Value> = res
                .maps()
                .iter()
                .map(|m| {
                    let rows: Vec<Value> = m.entries().iter().map(|r| polys_json(r)).collect();
                    json!({ "source": m.source().to_string(), "target": m.target().to_string(), "entries": rows })
                })
                .collect();
            let ok = res.is_complex() && res.is_minimal();
            Ok(Report::new("res", text, json!({ "maps": maps, "betti": betti_json(&res.betti()) })).with_ok(ok))
        }
        Command::Betti { ideal } => {
            let i = session.ideal(&ideal)?;
            let b = minimal_free_resolution(&i)?.betti();
            Ok(Report::new(
                "betti",
                format!("{}\n{}", b.compact(), b.grid()),
                betti_json(&b),
            ))
        }
        Command::Hp { ideal } => {
            let i = session.ideal(&ideal)?;
            let hp = hilbert_polynomial(&i)?;
            Ok(Report::new(
                "hp",
                format!("{hp}\n"),
                json!({ "hilbert_polynomial": hp.to_string() }),
            ))
        }
        Command::Extlen { ideal } => {
            let i = session.ideal(&ideal)?;
            let j = ext_top_cyclic(&i)?;
            let len = tensor_length(&j, &i)?;
            let jgens: Vec<Polynomial> = j.minimal_generators()?.iter().map(Polynomial::monic).collect();
            let shown: Vec<String> = jgens.iter().map(ToString::to_string).collect();
            Ok(Report::new(
                "extlen",
                format!(
                    "Ext^3(S/I, S) = S/J with J = ({})\nlength of I/JI: {len}\n",
                    shown.join(", ")
                ),
                json!({ "ext_ideal": polys_json(&jgens), "length": len }),
            ))
        }
        Command::Form { op } => run_form(&session, op),
        Command::Dist { op } => run_dist(&session, op),
        Command::Chern { op } => run_chern(op),
        Command::Corpus { op } => run_corpus(op, cli.json),
    }
}

fn run_form(session: &Session, op: FormOp) -> CliResult<Report> {
    match op {
        FormOp::CheckEuler { form } => {
            let w = session.form(&form)?;
            let radial = w.contract_radial();
            let euler = w.satisfies_euler_relation()?;
            let ok = radial.is_zero() && euler;
            Ok(Report::new(
                "form check-euler",
                format!("radial contraction: {radial}\nB*x = (d+2)*A: {euler}\n"),
                json!({ "radial_contraction": radial.to_string(), "euler_relation": euler }),
            )
            .with_ok(ok))
        }
        FormOp::Integrable { form } => {
            let w = session.form(&form)?;
            let wedge = w.wedge_integrability()?;
            let ok = wedge.is_zero();
            Ok(Report::new(
                "form integrable",
                format!("w ^ dw = {wedge}\nintegrable: {ok}\n"),
                json!({ "wedge": wedge.to_string(), "integrable": ok }),
            )
            .with_ok(ok))
        }
        FormOp::Pfaffian { form } => {
            let w = session.form(&form)?;
            let b = w.skew_of_derivative()?;
            let pf = pfaffian4(&b)?;
            let det_ok = &pf * &pf == b.determinant();
            let cof = pfaffian_cofactors(&b)?;
            let mut cof_ok = true;
            for (i, row) in cof.iter().enumerate() {
                for j in 0..b.size() {
                    let s = row
                        .iter()
                        .enumerate()
                        .fold(Polynomial::zero(w.ring()), |acc, (k, c)| &acc + &(c * b.entry(k, j)));
                    cof_ok &= s == if i == j { pf.clone() } else { Polynomial::zero(w.ring()) };
                }
            }
            Ok(Report::new(
                "form pfaffian",
                format!("Pf(B) = {pf}\nPf^2 = det B: {det_ok}\ncofactor identity: {cof_ok}\n"),
                json!({ "pfaffian": pf.to_string(), "square_is_det": det_ok, "cofactor_identity": cof_ok }),
            )
            .with_ok(det_ok && cof_ok))
        }
        FormOp::TangentFields { form } => {
            let w = session.form(&form)?;
            let fields = w.constant_tangent_fields()?;
            let text: String = fields.iter().map(|v| format!("{}\n", tuple(v))).collect();
            let js: Vec<Value> = fields.iter().map(|v| rationals_json(v)).collect();
            Ok(Report::new("form tangent-fields", text, json!({ "fields": js })))
        }
    }
}

fn probe_text(outcome: &ProbeOutcome) -> (String, Value) {
    match outcome {
        ProbeOutcome::Equal => ("EQUAL\n".into(), json!({ "outcome": "EQUAL" })),
        ProbeOutcome::Larger {
            hilbert_polynomial,
            common_factor,
            vanishes,
        } => {
            let mut text = format!("LARGER\nhilbert polynomial: {hilbert_polynomial}\n");
            if let Some(g) = common_factor {
                writeln!(text, "common factor: {g}").expect("string write");
            }
            if *vanishes {
                text.push_str("the specialized form vanishes\n");
            }
            let js = json!({
                "outcome": "LARGER",
                "hilbert_polynomial": hilbert_polynomial.to_string(),
                "common_factor": common_factor.as_ref().map(ToString::to_string),
                "vanishes": vanishes,
            });
            (text, js)
        }
    }
}

fn dist_report_text(r: &syzdist::distributions::DistributionReport) -> (String, Value) {
    let bucket = r.bucket.map(|(a, b)| format!("({a},{b})"));
    let mut text = format!(
        "degree: {}\nsingular scheme: {}\nhilbert polynomial: {}\nprojective dimension: {}\nbetti: {}\nintegrable: {}\n",
        r.degree, r.singular_ideal, r.hilbert_poly, r.projective_dim, r.betti.compact(), r.integrable
    );
    if let Some(b) = &bucket {
        writeln!(text, "bucket: {b}").expect("string write");
    }
    for v in &r.tangent_fields {
        writeln!(text, "tangent field: {}", tuple(v)).expect("string write");
    }
    let js = json!({
        "degree": r.degree,
        "singular_ideal": polys_json(r.singular_ideal.gens()),
        "hilbert_polynomial": r.hilbert_poly.to_string(),
        "projective_dimension": r.projective_dim,
        "betti": betti_json(&r.betti),
        "integrable": r.integrable,
        "bucket": r.bucket.map(|(a, b)| json!([a, b])),
        "tangent_fields": r.tangent_fields.iter().map(|v| rationals_json(v)).collect::<Vec<_>>(),
    });
    (text, js)
}

fn run_dist(session: &Session, op: DistOp) -> CliResult<Report> {
    match op {
        DistOp::Sing(FormArg { form }) => {
            let w = session.form(&form)?;
            let s = singular_scheme(&w)?;
            let gens = s.minimal_generators()?;
            Ok(Report::new(
                "dist sing",
                lines(&gens),
                json!({ "generators": polys_json(&gens) }),
            ))
        }
        DistOp::Genform(IdealDegree { ideal, degree }) => {
            let i = session.ideal(&ideal)?;
            let fam = generic_form(&i, degree)?;
            Ok(Report::new(
                "dist genform",
                format!(
                    "{}\nparameters: {}\nprojective fiber dimension: {}\n",
                    fam.form,
                    fam.fiber_linear_dim,
                    fam.projective_fiber_dim()
                ),
                json!({
                    "form": fam.form.to_string(),
                    "ring": fam.form.ring().header(),
                    "fiber_linear_dim": fam.fiber_linear_dim,
                    "projective_fiber_dim": fam.projective_fiber_dim(),
                }),
            ))
        }
        DistOp::Fiberdim(IdealDegree { ideal, degree }) => {
            let i = session.ideal(&ideal)?;
            let linear = fiber_dimension(&i, degree)?;
            let projective = linear as i64 - 1;
            Ok(Report::new(
                "dist fiberdim",
                format!("linear {linear}\nprojective {projective}\n"),
                json!({ "linear": linear, "projective": projective }),
            ))
        }
        DistOp::VerifyThm2(FormArg { form }) => {
            let w = session.form(&form)?;
            let r = verify_main_theorem2(&w)?;
            let mut checks: Vec<(String, bool, String)> = r
                .checks
                .iter()
                .map(|c| (c.name.clone(), c.pass, c.detail.clone()))
                .collect();
            if r.degree == 1 {
                let cert = reducedness_certificate(&r.singular_ideal, DEFAULT_SEED)?;
                checks.push((
                    "reduced".into(),
                    cert.is_reduced(),
                    format!(
                        "eliminant {} of degree {} for length {}",
                        cert.eliminant,
                        cert.eliminant.degree().unwrap_or(0),
                        cert.length
                    ),
                ));
            }
            let ok = checks.iter().all(|c| c.1);
            let mut text = format!(
                "singular scheme: {}\npfaffian: {}\nbetti: {}\n",
                r.singular_ideal,
                r.pfaffian,
                r.betti.compact()
            );
            for (name, pass, detail) in &checks {
                writeln!(text, "[{}] {name}: {detail}", if *pass { "pass" } else { "FAIL" }).expect("string write");
            }
            let js_checks: Vec<Value> = checks
                .iter()
                .map(|(n, p, d)| json!({ "name": n, "pass": p, "detail": d }))
                .collect();
            Ok(Report::new(
                "dist verify-thm2",
                text,
                json!({
                    "singular_ideal": polys_json(r.singular_ideal.gens()),
                    "pfaffian": r.pfaffian.to_string(),
                    "length": r.length,
                    "betti": betti_json(&r.betti),
                    "fiber_linear_dim": r.fiber_linear_dim,
                    "checks": js_checks,
                }),
            )
            .with_ok(ok))
        }
        DistOp::Classify(FormArg { form }) => {
            let w = session.form(&form)?;
            let r = classify_degree1(&w)?;
            let (text, js) = dist_report_text(&r);
            Ok(Report::new("dist classify", text, js))
        }
        DistOp::Probe {
            form,
            ideal,
            degree,
            values,
        } => {
            let i = session.ideal(&ideal)?;
            let t = values
                .iter()
                .map(|v| parse_rational(v.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            let outcome = match form {
                Some(f) => probe_form(&session.form(&f)?, &i, &t)?,
                None => degeneration_probe(&generic_form(&i, degree)?, &t)?,
            };
            let (text, js) = probe_text(&outcome);
            Ok(Report::new("dist probe", text, js))
        }
    }
}

fn run_chern(op: ChernOp) -> CliResult<Report> {
    match op {
        ChernOp::Chi {
            rank_e,
            c_e,
            rank_f,
            c_f,
            n,
            ext1,
        } => {
            let e = chern_to_character(&ChernClassVector::new(rank_e, &c_e), n)?;
            let f = chern_to_character(&ChernClassVector::new(rank_f, &c_f), n)?;
            let chi = chi_pair(&e, &f, n)?;
            let mut text = format!("{chi}\n");
            let mut js = json!({
                "chi": chi.to_string(),
                "ch_e_dual": rationals_json(character_dual(&e).coeffs()),
                "ch_f": rationals_json(f.coeffs()),
            });
            if let Some(x) = ext1 {
                let hom = dim_hom(&chi, x);
                text = format!("chi = {chi}\ndim Hom = {chi} + {x} = {hom}\n");
                js["ext1"] = json!(x);
                js["dim_hom"] = json!(hom.to_string());
            }
            Ok(Report::new("chern chi", text, js))
        }
        ChernOp::Phi { d, n } => {
            let closed = phi(d, n);
            let integral = phi_top_chern(d, n);
            let ok = closed == integral;
            Ok(Report::new(
                "chern phi",
                format!("{closed}\n"),
                json!({ "phi": closed.to_string(), "top_chern": integral.to_string() }),
            )
            .with_ok(ok))
        }
        ChernOp::Ch { rank, c, n, dual } => {
            let mut ch = chern_to_character(&ChernClassVector::new(rank, &c), n)?;
            if dual {
                ch = character_dual(&ch);
            }
            Ok(Report::new(
                "chern ch",
                format!("{ch}\n"),
                json!({ "character": rationals_json(ch.coeffs()) }),
            ))
        }
        ChernOp::Todd { n } => {
            let td = todd_projective(n)?;
            Ok(Report::new(
                "chern todd",
                format!("{td}\n"),
                json!({ "todd": rationals_json(td.coeffs()) }),
            ))
        }
    }
}

fn run_corpus(op: CorpusOp, json_flag: bool) -> CliResult<Report> {
    let corpus = load_corpus()?;
    match op {
        CorpusOp::List => {
            let mut text = String::new();
            let mut ids = Vec::new();
            for r in &corpus.rows {
                writeln!(text, "{}  {}", r.id(), r.description).expect("string write");
                ids.push(r.id());
            }
            for e in &corpus.excluded {
                writeln!(text, "{}  excluded", e.id()).expect("string write");
                ids.push(e.id());
            }
            Ok(Report::new("corpus list", text, json!({ "entries": ids })))
        }
        CorpusOp::Run {
            table,
            case,
            check,
            format,
            output,
        } => {
            let table = table
                .map(|t| {
                    TableId::parse(&t)
                        .ok_or_else(|| CliError::Usage(format!("unknown table `{t}` (expected T2, T3 or T4)")))
                })
                .transpose()?;
            let filter = Filter { table, case, check };
            let reports = run_regressions(&corpus, &filter);
            if reports.is_empty() {
                return Err(CliError::Usage("the filter selects no corpus entries".into()));
            }
            let ok = reports.iter().all(|r| r.passed());
            let format = format.unwrap_or(if json_flag {
                ReportFormat::Json
            } else {
                ReportFormat::Text
            });
            let body = match format {
                ReportFormat::Text => reports_to_text(&reports),
                ReportFormat::Json => {
                    serde_json::to_string_pretty(&reports_to_json(&reports)).expect("serializable") + "\n"
                }
                ReportFormat::Junit => reports_to_junit(&reports),
            };
            let text = match &output {
                Some(path) => {
                    fs::write(path, &body).map_err(|e| CliError::Usage(format!("cannot write {path}: {e}")))?;
                    let failed = reports.iter().filter(|r| !r.passed()).count();
                    format!(
                        "{} entries, {failed} failing; report written to {path}\n",
                        reports.len()
                    )
                }
                None => body,
            };
            let mut report = Report::new("corpus run", text, reports_to_json(&reports)).with_ok(ok);
            // the report format governs standard output
            report.json = Value::Null;
            Ok(report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_flag = cli.json;
    match run(cli) {
        Ok(report) => {
            if json_flag && !report.json.is_null() {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let msg = match &e {
                CliError::Usage(m) | CliError::Compute(m) => m,
            };
            if json_flag {
                println!("{}", json!({ "schema": SCHEMA, "error": msg }));
            }
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
