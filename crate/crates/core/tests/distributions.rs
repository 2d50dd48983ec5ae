use num_rational::BigRational;
use syzdist::distributions::{
    classify_degree1, degeneration_probe, fiber_dimension, generic_betti_shape, generic_form, is_gorenstein_symmetric,
    rationals, reducedness_certificate, singular_scheme, verify_main_theorem2, ProbeOutcome, DEFAULT_SEED,
};
use syzdist::forms::TwistedOneForm;
use syzdist::groebner::Ideal;
use syzdist::poly::{parse_ideal, parse_poly, parse_ring, Polynomial, RingRef, UniPoly};
use syzdist::syzygy::{linear_syzygy_space, BettiTable, SyzygyRoute};
use syzdist::Error;

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn ring4() -> RingRef {
    parse_ring("ring x,y,z,w").unwrap()
}

fn ideal(ring: &RingRef, src: &str) -> Ideal {
    Ideal::new(ring, parse_ideal(src, ring).unwrap()).unwrap()
}

fn cyclic_form(d: u32) -> TwistedOneForm {
    let r = parse_ring("ring x0..x3").unwrap();
    let coeffs = (0..4)
        .map(|j| {
            let src = format!("x{}*x{}^{} - x{}^{}", (j + 1) % 4, j, d, (j + 3) % 4, d + 1);
            parse_poly(&src, &r).unwrap()
        })
        .collect();
    TwistedOneForm::from_polys(&r, coeffs).unwrap()
}

#[test]
fn five_point_singular_scheme_is_reduced_pfaffian_gorenstein() {
    let w = cyclic_form(1);
    let report = verify_main_theorem2(&w).unwrap();
    for c in &report.checks {
        assert!(c.pass, "{}: {}", c.name, c.detail);
    }
    assert_eq!(report.length, Some(5));
    assert_eq!(report.betti, BettiTable::from_shape(&[&[(2, 5)], &[(3, 5)], &[(5, 1)]]));
    assert_eq!(report.fiber_linear_dim, 5);
    let cert = reducedness_certificate(&report.singular_ideal, DEFAULT_SEED).unwrap();
    assert_eq!(cert.length, 5);
    assert!(cert.is_reduced(), "eliminant {}", cert.eliminant);
}

#[test]
fn degree_two_structure_theorem() {
    let w = cyclic_form(2);
    let sat = singular_scheme(&w).unwrap();
    assert_eq!(sat.krull_dimension().unwrap(), 0);
    let report = verify_main_theorem2(&w).unwrap();
    for c in &report.checks {
        assert!(c.pass, "{}: {}", c.name, c.detail);
    }
    assert_eq!(
        report.betti,
        BettiTable::from_shape(&[&[(3, 4), (4, 1)], &[(4, 1), (5, 4)], &[(8, 1)]])
    );
    assert_eq!(report.fiber_linear_dim, 1);
}

fn corpus_row(id: &str) -> syzdist::corpus::ParsedRow {
    let corpus = syzdist::corpus::load_corpus().unwrap();
    corpus.rows.iter().find(|r| r.id() == id).unwrap().parse().unwrap()
}

#[test]
fn singular_scheme_of_three_line_member() {
    let row = corpus_row("T2.3");
    let w = row.form.specialize(&rationals(&[1, 1])).unwrap();
    let sing = singular_scheme(&w).unwrap();
    let r = ring4();
    assert!(sing.same_ideal(&ideal(&r, "x*w, x*y, y*z")).unwrap());
}

#[test]
fn singular_scheme_rejects_non_twisted_and_codimension_one() {
    let r = ring4();
    let radial = TwistedOneForm::parse("x*dx", &r).unwrap();
    assert!(matches!(singular_scheme(&radial), Err(Error::Precondition(_))));
    let w = TwistedOneForm::parse("(y + x)*y*dx - (y + x)*x*dy", &r).unwrap();
    match singular_scheme(&w) {
        Err(Error::CommonFactor { gcd }) => {
            let g = parse_poly("x + y", &r).unwrap();
            assert!(gcd == g || gcd == g.scale(&q(-1)), "gcd {gcd}");
        }
        other => panic!("expected a common factor, got {other:?}"),
    }
}

#[test]
fn generic_form_reproduces_corpus_spans() {
    for id in ["T2.1", "T3.1", "T4.1"] {
        let row = corpus_row(id);
        let fam = generic_form(&row.ideal, 1).unwrap();
        assert_eq!(fam.span(), syzdist::distributions::form_span(&row.form), "{id}");
        assert_eq!(fam.span(), fam.oracle_span().unwrap(), "{id}");
    }
}

#[test]
fn degree_two_family_is_the_cyclic_form() {
    let w = cyclic_form(2);
    let sing = singular_scheme(&w).unwrap();
    let fam = generic_form(&sing, 2).unwrap();
    assert_eq!(fam.fiber_linear_dim, 1);
    assert_eq!(fam.projective_fiber_dim(), 0);
    assert_eq!(fam.span(), syzdist::distributions::form_span(&w));
}

#[test]
fn fiber_dimensions() {
    assert_eq!(fiber_dimension(&corpus_row("T2.1").ideal, 1).unwrap(), 2);
    assert_eq!(fiber_dimension(&corpus_row("T3.1").ideal, 1).unwrap(), 6);
    assert_eq!(fiber_dimension(&corpus_row("T4.2").ideal, 1).unwrap(), 4);
    let five = singular_scheme(&cyclic_form(1)).unwrap();
    assert_eq!(fiber_dimension(&five, 1).unwrap(), 5);
    let gens = five.minimal_generators().unwrap();
    assert_eq!(linear_syzygy_space(&gens, SyzygyRoute::Oracle).unwrap().dim(), 5);
}

#[test]
fn generic_form_refuses_low_degree_hypersurfaces() {
    let r = ring4();
    let planar = ideal(&r, "w, x*z - y^2");
    assert!(generic_form(&planar, 1).is_err());
}

#[test]
fn degree_one_buckets() {
    let five = classify_degree1(&cyclic_form(1)).unwrap();
    assert_eq!(five.bucket, Some((3, 5)));
    assert_eq!(five.hilbert_poly, UniPoly::constant(q(5)));
    let conic = corpus_row("T4.1").form.specialize(&rationals(&[0, 0, 1, 2])).unwrap();
    let report = classify_degree1(&conic).unwrap();
    assert_eq!(report.bucket, Some((1, 1)));
    assert!(report.integrable);
    let cubic = corpus_row("T2.1").form.specialize(&rationals(&[1, 1])).unwrap();
    let report = classify_degree1(&cubic).unwrap();
    assert_eq!(report.bucket, Some((0, 0)));
    assert!(matches!(classify_degree1(&cyclic_form(2)), Err(Error::Precondition(_))));
}

#[test]
fn report_is_invariant_under_rescaling_and_permutation() {
    let w = cyclic_form(1);
    let base = syzdist::distributions::distribution_report(&w).unwrap();
    for v in [w.scale(&q(-7)), w.permute_variables(&[2, 0, 3, 1]).unwrap()] {
        let r = syzdist::distributions::distribution_report(&v).unwrap();
        assert_eq!(r.hilbert_poly, base.hilbert_poly);
        assert_eq!(r.betti, base.betti);
        assert_eq!(r.bucket, base.bucket);
        assert_eq!(r.projective_dim, base.projective_dim);
    }
}

#[test]
fn probes_on_the_five_point_family() {
    let five = singular_scheme(&cyclic_form(1)).unwrap();
    let fam = generic_form(&five, 1).unwrap();
    let generic = degeneration_probe(&fam, &rationals(&[1, 2, 3, 5, 7])).unwrap();
    assert_eq!(generic, ProbeOutcome::Equal);
    let row = corpus_row("T2.3");
    for (values, equal) in [(vec![1, 1], true), (vec![1, 0], false), (vec![0, 1], false)] {
        let outcome = syzdist::distributions::probe_form(&row.form, &row.ideal, &rationals(&values)).unwrap();
        assert_eq!(outcome.is_equal(), equal, "{values:?}: {}", outcome.label());
    }
}

#[test]
fn betti_shape_of_the_structure_theorem() {
    for d in 1..=4 {
        let b = generic_betti_shape(d);
        assert!(is_gorenstein_symmetric(&b), "d = {d}");
    }
    assert!(!is_gorenstein_symmetric(&BettiTable::from_shape(&[
        &[(2, 3)],
        &[(3, 2)]
    ])));
}

#[test]
fn reducedness_detects_a_double_point() {
    let r = ring4();
    let double = ideal(&r, "x^2, y, z");
    let cert = reducedness_certificate(&double, DEFAULT_SEED).unwrap();
    assert_eq!(cert.length, 2);
    assert!(!cert.is_reduced());
    let two = ideal(&r, "x*(x - w), y, z");
    assert!(reducedness_certificate(&two, DEFAULT_SEED).unwrap().is_reduced());
}

#[test]
fn polynomial_gcd_of_products() {
    let r = ring4();
    let a = parse_poly("(x + y)*(z - w)*x", &r).unwrap();
    let b = parse_poly("(x + y)*(z - w)*y", &r).unwrap();
    let g = syzdist::distributions::polynomial_gcd(&a, &b).unwrap();
    let expected = parse_poly("(x + y)*(z - w)", &r).unwrap();
    assert!(g == expected || g == expected.scale(&q(-1)), "{g}");
    let _: Option<Polynomial> = syzdist::distributions::common_factor(&[a, parse_poly("z", &r).unwrap()]).unwrap();
}
