use num_rational::BigRational;
use proptest::prelude::*;
use syzdist::corpus::load_corpus;
use syzdist::forms::TwistedOneForm;
use syzdist::poly::{parse_ideal, parse_param_poly, parse_poly, parse_ring, Monomial, Polynomial, RingRef};

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn ring4() -> RingRef {
    parse_ring("ring x,y,z,w").unwrap()
}

fn p(src: &str) -> Polynomial {
    parse_poly(src, &ring4()).unwrap()
}

#[test]
fn addition_examples() {
    assert_eq!(&p("x*z - y^2") + &p("y^2"), p("x*z"));
    assert_eq!(&p("x*z - y^2") + &Polynomial::zero(&ring4()), p("x*z - y^2"));
    assert!((&p("x*w - y*z") + &p("y*z - x*w")).is_zero());
}

#[test]
fn multiplication_examples() {
    let xy = &p("x") * &p("y");
    assert_eq!(xy, p("x*y"));
    assert_eq!(xy.leading_coeff(), Some(&q(1)));
    assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
    let r = parse_ring("ring x,y,z,w params t0,t1").unwrap();
    let t = parse_param_poly("t0", &r).unwrap();
    let scaled = t.mul_poly(&parse_poly("x*z - y^2", &r).unwrap()).unwrap();
    assert!(!scaled.is_parameter_free());
    assert!(t.try_mul(&t).is_err());
}

#[test]
fn big_coefficients_stay_exact() {
    let f = p("123456789*x + 987654321*y");
    let g = f.pow(6);
    let back = g.div_exact(&f.pow(5)).unwrap();
    assert_eq!(back, f);
}

#[test]
fn derivative_examples() {
    let f = p("x*z - y^2");
    assert_eq!(f.partial_derivative(0), p("z"));
    assert_eq!(f.partial_derivative(1), p("-2*y"));
    assert!(f.partial_derivative(3).is_zero());
}

#[test]
fn specialization_examples() {
    let r = parse_ring("ring x,y,z,w params t0,t1").unwrap();
    let f = parse_param_poly("t0*x + t1*y", &r).unwrap();
    let main = r.with_params(Vec::new()).unwrap();
    assert_eq!(
        f.specialize(&[q(1), q(0)]).unwrap().rebase(&main).unwrap(),
        parse_poly("x", &main).unwrap()
    );
    assert!(f.specialize(&[q(0), q(0)]).unwrap().is_zero());
    assert!(f.specialize(&[q(1)]).is_err());
    let w = TwistedOneForm::parse("t1*y*z*dx - t0*x*w*dy - t1*x*y*dz + t0*x*y*dw", &r).unwrap();
    let a0 = w.coeffs()[0].specialize(&[q(1), q(1)]).unwrap().rebase(&main).unwrap();
    assert_eq!(a0, parse_poly("y*z", &main).unwrap());
}

#[test]
fn ring_declarations() {
    let r = parse_ring("ring x,y,z,w").unwrap();
    assert_eq!(r.nvars(), 4);
    assert_eq!(r.order().tag(), "grevlex");
    let r = parse_ring("ring x0..x3 params t0..t4").unwrap();
    assert_eq!(r.vars(), ["x0", "x1", "x2", "x3"]);
    assert_eq!(r.nparams(), 5);
    assert!(parse_ring("ring x,x").is_err());
    assert!(parse_ring("ring x,y params x").is_err());
}

#[test]
fn parse_errors_carry_positions() {
    let e = parse_poly("(x +", &ring4()).unwrap_err().to_string();
    assert!(e.contains("column"), "{e}");
    assert!(parse_poly("2x", &ring4()).is_err());
    assert!(parse_poly("x*q", &ring4()).is_err());
    assert!(TwistedOneForm::parse("x*dx + y^2*dy", &ring4()).is_err());
}

#[test]
fn pretty_printing_round_trips_on_the_corpus() {
    let corpus = load_corpus().unwrap();
    for row in &corpus.rows {
        let parsed = row.parse().unwrap();
        let main = parsed.ideal.ring().clone();
        for g in parsed.ideal.gens() {
            assert_eq!(&parse_poly(&g.to_string(), &main).unwrap(), g, "{}", row.id());
        }
        let printed = parsed.form.to_string();
        let again = TwistedOneForm::parse(&printed, &parsed.ring).unwrap();
        assert_eq!(again.coeffs(), parsed.form.coeffs(), "{}", row.id());
        let h = parsed.h.to_string();
        assert_eq!(
            parse_param_poly(&h, parsed.h.ring())
                .map(|x| x.to_string())
                .unwrap_or(h.clone()),
            h
        );
    }
}

#[test]
fn printing_is_in_descending_order() {
    let f = p("y^2 + x*z + w^2 + x^2");
    // grevlex: y^2 > x*z since the last differing exponent (z) is smaller
    assert_eq!(f.to_string(), "x^2 + y^2 + x*z + w^2");
    let gens = parse_ideal("x*z - y^2,\n x*w - y*z", &ring4()).unwrap();
    assert_eq!(gens.len(), 2);
}

fn small_poly(ring: RingRef) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u16..3, 4), -4i64..=4), 0..5)
        .prop_map(move |terms| Polynomial::from_terms(&ring, terms.into_iter().map(|(e, c)| (Monomial::new(&e), q(c)))))
}

fn homogeneous_poly(ring: RingRef, degree: u32) -> impl Strategy<Value = Polynomial> {
    let monos = Monomial::all_of_degree(4, degree);
    prop::collection::vec((0..monos.len(), -4i64..=4), 1..4)
        .prop_map(move |terms| Polynomial::from_terms(&ring, terms.into_iter().map(|(i, c)| (monos[i].clone(), q(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in small_poly(ring4()), b in small_poly(ring4()), c in small_poly(ring4())) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn products_of_homogeneous_polynomials(a in homogeneous_poly(ring4(), 2), b in homogeneous_poly(ring4(), 3)) {
        let ab = &a * &b;
        if !a.is_zero() && !b.is_zero() {
            prop_assert_eq!(ab.homogeneous_degree(), Some(5));
        }
    }

    #[test]
    fn euler_identity(f in homogeneous_poly(ring4(), 3)) {
        let r = ring4();
        let mut acc = Polynomial::zero(&r);
        for i in 0..4 {
            acc = &acc + &(&Polynomial::var(&r, i) * &f.partial_derivative(i));
        }
        prop_assert_eq!(acc, f.scale(&q(3)));
    }

    #[test]
    fn print_parse_round_trip(f in small_poly(ring4())) {
        prop_assert_eq!(parse_poly(&f.to_string(), &ring4()).unwrap(), f);
    }
}
