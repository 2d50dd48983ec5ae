mod common;

use common::{cyclic_form, ideal, ring4};
use syzdist::forms::pfaffian4;
use syzdist::groebner::{normal_form, Ideal};
use syzdist::poly::{parse_poly, parse_ring, MonomialOrder, Polynomial};

const CUBIC: &str = "x*z - y^2, x*w - y*z, y*w - z^2";

#[test]
fn normal_form_examples() {
    let r = ring4();
    let f = parse_poly("x*z - y^2", &r).unwrap();
    assert!(normal_form(&f, std::slice::from_ref(&f)).is_zero());
    let cubic = ideal(&r, CUBIC);
    let gb = cubic.groebner_basis().unwrap();
    let one = Polynomial::one(&r);
    assert_eq!(normal_form(&one, gb), one);
    let multiple = parse_poly("x*(y*w - z^2)", &r).unwrap();
    assert!(normal_form(&multiple, gb).is_zero());
    assert!(!cubic.contains(&parse_poly("x*y", &r).unwrap()).unwrap());
}

#[test]
fn groebner_basis_examples() {
    let r = ring4();
    let i = ideal(&r, "x^2, x");
    assert_eq!(i.groebner_basis().unwrap(), [parse_poly("x", &r).unwrap()]);
    assert_eq!(ideal(&r, CUBIC).groebner_basis().unwrap().len(), 3);
    assert!(ideal(&r, "x, 1").is_unit().unwrap());
    let lex: Vec<Polynomial> = ideal(&r, CUBIC)
        .groebner_basis_in(MonomialOrder::Lex)
        .unwrap()
        .iter()
        .map(|g| g.reorder(&r))
        .collect();
    assert!(ideal(&r, CUBIC).same_ideal(&Ideal::new(&r, lex).unwrap()).unwrap());
}

#[test]
fn basis_elements_lift_to_the_generators() {
    let r = ring4();
    for src in [CUBIC, "x*y - z^2, x^3 + w^3, y*z*w", "z*w, y*w, x*w, x*y - z^2"] {
        let i = ideal(&r, src);
        let lifted = i.lift_groebner_basis().unwrap();
        assert_eq!(lifted.len(), i.groebner_basis().unwrap().len());
        for (b, c) in lifted {
            let mut sum = Polynomial::zero(&r);
            for (ci, g) in c.iter().zip(i.gens()) {
                sum = &sum + &(ci * g);
            }
            assert_eq!(sum, b, "{src}");
        }
    }
}

#[test]
fn quotients() {
    let r = ring4();
    let xy = ideal(&r, "x*y");
    let y = parse_poly("y", &r).unwrap();
    assert!(xy.quotient_by(&y).unwrap().same_ideal(&ideal(&r, "x")).unwrap());
    let i = ideal(&r, "x^2, x*y");
    let q = i.quotient(&ideal(&r, "x, y")).unwrap();
    assert!(q.same_ideal(&ideal(&r, "x")).unwrap());
}

#[test]
fn saturation_examples() {
    // (x^2, xy) = (x) ∩ (x^2, y): the embedded component is irrelevant only
    // when x, y are all the variables
    let r2 = parse_ring("ring x,y").unwrap();
    let sat = ideal(&r2, "x^2, x*y").saturation().unwrap();
    assert!(sat.ideal.same_ideal(&ideal(&r2, "x")).unwrap());
    let r = ring4();
    let i = ideal(&r, "x^2, x*y");
    assert!(i.saturate().unwrap().same_ideal(&i).unwrap());
    let cubic = ideal(&r, CUBIC);
    assert!(cubic.saturate().unwrap().same_ideal(&cubic).unwrap());
    let fat = ideal(&r, "x*z, y*z, z^2, z*w");
    assert!(fat.saturate().unwrap().same_ideal(&ideal(&r, "z")).unwrap());
    assert!(fat.saturate_fast().unwrap().same_ideal(&ideal(&r, "z")).unwrap());
}

#[test]
fn saturated_coefficient_ideal_of_the_cyclic_form() {
    let w = cyclic_form(1);
    let ring = w.ring().clone();
    let a = Ideal::new(&ring, w.polys().unwrap()).unwrap();
    let pf = pfaffian4(&w.skew_of_derivative().unwrap()).unwrap();
    let mut gens = w.polys().unwrap();
    gens.push(pf);
    let expected = Ideal::new(&ring, gens).unwrap();
    let sat = a.saturate().unwrap();
    assert!(sat.same_ideal(&expected).unwrap());
    assert_eq!(sat.krull_dimension().unwrap(), 0);
    assert_eq!(sat.ideal_piece_dim(1).unwrap(), 0);
}

#[test]
fn elimination() {
    let r = ring4();
    let e = ideal(&r, "x - y, x").eliminate(&[0]).unwrap();
    assert!(e.same_ideal(&ideal(&r, "y")).unwrap());
    assert!(e.gens().iter().all(|g| !g.uses_var(0)));
    assert!(ideal(&r, "x - y")
        .eliminate(&[0])
        .unwrap()
        .gens()
        .iter()
        .all(Polynomial::is_zero));
    // projecting the twisted cubic from its point (0:0:0:1) gives a conic
    let plane = ideal(&r, CUBIC).eliminate(&[3]).unwrap();
    assert!(plane.same_ideal(&ideal(&r, "x*z - y^2")).unwrap());
}

#[test]
fn intersection() {
    let r = ring4();
    let i = ideal(&r, "x").intersect(&ideal(&r, "y")).unwrap();
    assert!(i.same_ideal(&ideal(&r, "x*y")).unwrap());
    let i = ideal(&r, "x").intersect(&ideal(&r, "x^2, y")).unwrap();
    assert!(i.same_ideal(&ideal(&r, "x^2, x*y")).unwrap());
}

#[test]
fn graded_pieces_of_the_conic_and_point() {
    let r = ring4();
    for src in ["z*w, y*w, x*w, x*y - z^2", "z*w, y*w, x*w, x*y"] {
        let i = ideal(&r, src);
        assert_eq!(i.ideal_piece_dim(3).unwrap(), 12, "{src}");
        assert_eq!(i.ideal_piece_dim(4).unwrap(), 25, "{src}");
        assert_eq!(i.ideal_piece_dim(1).unwrap(), 0, "{src}");
        // hilbert function of a plane conic plus a point: 2k + 2
        for k in 2..=6 {
            assert_eq!(i.hilbert_function(k).unwrap(), 2 * k as u64 + 2);
        }
    }
}

#[test]
fn graded_pieces_agree_with_the_saturation_in_high_degree() {
    let r = ring4();
    for src in ["x^2, x*y", "x*z, y*z, z^2, z*w", "z*w, y*w, x*w^2, x*y - z^2, w^3"] {
        let i = ideal(&r, src);
        let sat = i.saturation().unwrap();
        let top = i.gens().iter().filter_map(|g| g.total_degree()).max().unwrap() as i64;
        for k in top + sat.steps as i64..top + sat.steps as i64 + 3 {
            assert_eq!(
                i.ideal_piece_dim(k).unwrap(),
                sat.ideal.ideal_piece_dim(k).unwrap(),
                "{src} at {k}"
            );
        }
    }
}

#[test]
fn krull_dimension_examples() {
    let r = ring4();
    assert_eq!(Ideal::irrelevant(&r).krull_dimension().unwrap(), -1);
    assert_eq!(ideal(&r, CUBIC).krull_dimension().unwrap(), 1);
    assert_eq!(ideal(&r, "x").krull_dimension().unwrap(), 2);
    assert_eq!(ideal(&r, "x, y, z").krull_dimension().unwrap(), 0);
    assert!(Ideal::unit(&r).krull_dimension().is_err());
}

#[test]
fn step_budget_is_enforced() {
    let r = ring4();
    let i = ideal(&r, CUBIC).with_budget(1);
    let e = i.groebner_basis().unwrap_err().to_string();
    assert!(e.contains("budget"), "{e}");
}
