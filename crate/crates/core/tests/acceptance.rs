//! One line per acceptance criterion; runs without the libtest harness so
//! the lines always appear in `cargo test` output.

mod common;

use std::time::{Duration, Instant};

use common::{cyclic_form, ideal, ring4, run_property_suite};
use syzdist::chern::{chern_to_character, chi_pair, dim_hom, phi, phi_top_chern, ChernClassVector};
use syzdist::corpus::{load_corpus, run_regressions, Filter, RowReport};
use syzdist::distributions::{reducedness_certificate, verify_main_theorem2, DEFAULT_SEED};
use syzdist::poly::{parse_ring, q, qf};
use syzdist::syzygy::{ext_top_cyclic, tensor_length};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn failing_checks(reports: &[RowReport]) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| {
            r.checks
                .iter()
                .filter(|c| !c.pass)
                .map(move |c| format!("{} {}: {}", r.id, c.name, c.detail))
        })
        .collect()
}

fn regression_reports() -> Vec<RowReport> {
    let corpus = load_corpus().unwrap();
    run_regressions(&corpus, &Filter::default())
        .into_iter()
        .filter(|r| !r.id.contains('('))
        .collect()
}

fn table_regression(reports: &[RowReport]) -> Outcome {
    let failing = failing_checks(reports);
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    if failing.is_empty() {
        outcome(true, format!("{} rows, {total} checks", reports.len()))
    } else {
        outcome(
            false,
            format!("{} of {total} checks fail: {}", failing.len(), failing.join("; ")),
        )
    }
}

fn structure_theorem(d: u32, limit: Duration) -> Outcome {
    let start = Instant::now();
    let w = cyclic_form(d);
    let report = match verify_main_theorem2(&w) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let mut pass = report.all_pass();
    let mut detail = format!(
        "length {}, betti {}, fiber linear dim {}",
        report.length.map_or("?".into(), |l| l.to_string()),
        report.betti.compact(),
        report.fiber_linear_dim
    );
    if d == 1 {
        let reduced = reducedness_certificate(&report.singular_ideal, DEFAULT_SEED)
            .map(|c| c.is_reduced())
            .unwrap_or(false);
        pass &= reduced && report.length == Some(5) && report.betti.compact() == "2^5 | 3^5 | 5";
        detail.push_str(&format!(", reduced {reduced}"));
    }
    for c in report.checks.iter().filter(|c| !c.pass) {
        detail.push_str(&format!("; {} failed: {}", c.name, c.detail));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < limit;
    outcome(pass, format!("{detail}, {} ms", elapsed.as_millis()))
}

fn riemann_roch() -> Outcome {
    let e = ChernClassVector::new(2, &[1, 2, 2]);
    let f = ChernClassVector::new(1, &[3, 1, -5]);
    let ch_e = chern_to_character(&e, 3).unwrap();
    let ch_f = chern_to_character(&f, 3).unwrap();
    let dual_e = syzdist::chern::character_dual(&ch_e);
    let characters =
        dual_e.coeffs() == [q(2), q(-1), qf(-3, 2), qf(-1, 6)] && ch_f.coeffs() == [q(1), q(3), qf(7, 2), qf(1, 2)];
    let chi = chi_pair(&ch_e, &ch_f, 3).unwrap();
    let r3 = parse_ring("ring x,y,z").unwrap();
    let lengths: Vec<u64> = ["x, y, z", "x^2, x*z, y", "x, y, z^2"]
        .iter()
        .map(|src| {
            let i = ideal(&r3, src);
            tensor_length(&ext_top_cyclic(&i).unwrap(), &i).unwrap()
        })
        .collect();
    let hom = dim_hom(&chi, lengths[2]);
    let pass = characters && chi == q(9) && lengths == [3, 3, 6] && hom == q(15);
    outcome(
        pass,
        format!("ch(E)^dual {dual_e}, ch(F) {ch_f}, chi {chi}, ext lengths {lengths:?}, dim Hom {hom}"),
    )
}

fn phi_consistency() -> Outcome {
    let mut pass = phi(1, 2) == 3.into() && phi(1, 3) == 5.into();
    let mut mismatches = Vec::new();
    for d in 0..=4 {
        for n in 2..=3 {
            if phi(d, n) != phi_top_chern(d, n) {
                mismatches.push(format!("({d},{n})"));
            }
        }
    }
    pass &= mismatches.is_empty();
    outcome(
        pass,
        format!(
            "phi(1,2) = {}, phi(1,3) = {}, route mismatches {mismatches:?}",
            phi(1, 2),
            phi(1, 3)
        ),
    )
}

fn graded_pieces() -> Outcome {
    let r = ring4();
    let mut pass = true;
    let mut notes = Vec::new();
    for src in ["z*w, y*w, x*w, x*y - z^2", "z*w, y*w, x*w, x*y"] {
        let i = ideal(&r, src);
        let dims = (i.ideal_piece_dim(3).unwrap(), i.ideal_piece_dim(4).unwrap());
        pass &= dims == (12, 25);
        notes.push(format!("({src}) -> {dims:?}"));
    }
    let corpus = load_corpus().unwrap();
    let mut guarded = 0;
    for row in &corpus.rows {
        let parsed = row.parse().unwrap();
        let ok = (0..=row.degree).all(|k| parsed.ideal.ideal_piece_dim(k).unwrap() == 0);
        if ok {
            guarded += 1;
        } else {
            notes.push(format!(
                "{} lies on a hypersurface of degree <= {}",
                row.id(),
                row.degree
            ));
        }
    }
    pass &= guarded == corpus.rows.len();
    notes.push(format!("guard holds on {guarded}/{} rows", corpus.rows.len()));
    outcome(pass, notes.join(", "))
}

fn properties() -> Outcome {
    let tally = run_property_suite();
    let mut detail = tally.summary();
    for (p, bad) in tally.failures.iter().filter(|(_, b)| !b.is_empty()) {
        detail.push_str(&format!("; {p} fails on {}", bad.join(" | ")));
    }
    outcome(tally.passed(), detail)
}

fn excluded_cases() -> Outcome {
    let corpus = load_corpus().unwrap();
    let reports = run_regressions(&corpus, &Filter::default());
    let excluded: Vec<&RowReport> = reports.iter().filter(|r| r.id.contains('(')).collect();
    let pass = excluded.len() == corpus.excluded.len() && excluded.iter().all(|r| r.passed());
    let names: Vec<String> = excluded
        .iter()
        .map(|r| format!("{} {}", r.id, if r.passed() { "flagged" } else { "missed" }))
        .collect();
    let mut detail = names.join(", ");
    for f in failing_checks(&excluded.into_iter().cloned().collect::<Vec<_>>()) {
        detail.push_str(&format!("; {f}"));
    }
    outcome(pass, detail)
}

fn main() {
    let reports = regression_reports();
    let results = [
        table_regression(&reports),
        structure_theorem(1, Duration::from_secs(10)),
        structure_theorem(2, Duration::from_secs(60)),
        riemann_roch(),
        phi_consistency(),
        graded_pieces(),
        properties(),
        excluded_cases(),
    ];
    for (k, r) in results.iter().enumerate() {
        println!(
            "criterion {}: {} - {}",
            k + 1,
            if r.pass { "PASS" } else { "FAIL" },
            r.detail
        );
    }
    for (k, r) in results.iter().enumerate().skip(1) {
        assert!(r.pass, "criterion {} failed: {}", k + 1, r.detail);
    }
    // The table regression fails on one sub-claim: the stated integrability
    // locus t0 = t1 = 0 of the conic-and-point family is necessary but not
    // sufficient. Everything else in the regression must pass.
    let failing = failing_checks(&reports);
    assert!(!results[0].pass);
    assert_eq!(failing.len(), 1, "{failing:?}");
    assert!(
        failing[0].starts_with("T4.1 integrability sufficient"),
        "{}",
        failing[0]
    );
    let t41 = reports.iter().find(|r| r.id == "T4.1").unwrap();
    assert!(t41.check("integrability necessary").unwrap().pass);
}
