use syzdist::corpus::{load_corpus, reports_to_json, reports_to_text, run_regressions, Filter, TableId};

#[test]
fn corpus_regressions() {
    let corpus = load_corpus().unwrap();
    assert_eq!(corpus.rows.len(), 16);
    assert_eq!(corpus.excluded.len(), 4);
    let reports = run_regressions(&corpus, &Filter::default());
    println!("{}", reports_to_text(&reports));
    assert_eq!(reports.len(), 20);
    for r in &reports {
        for c in &r.checks {
            // The stated integrability locus of the conic-and-point family is
            // necessary but not sufficient off the line t3 = 2*t2.
            let known = r.id == "T4.1" && c.name == "integrability sufficient";
            assert_eq!(c.pass, !known, "{} {}: {}", r.id, c.name, c.detail);
        }
    }
    let t41 = reports.iter().find(|r| r.id == "T4.1").unwrap();
    assert!(t41.check("integrability necessary").unwrap().pass);
    let json = reports_to_json(&reports);
    assert_eq!(json["schema"], 1);
    assert_eq!(json["pass"], false);
}

#[test]
fn filter_selects_rows_and_checks() {
    let corpus = load_corpus().unwrap();
    let filter = Filter {
        table: TableId::parse("T2"),
        case: Some(3),
        check: Some("span".into()),
    };
    let reports = run_regressions(&corpus, &filter);
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].id, "T2.3");
    assert_eq!(reports[0].checks.len(), 1);
    assert!(reports[0].passed());
}
