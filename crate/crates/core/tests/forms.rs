use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use syzdist::forms::{pfaffian4, pfaffian_cofactors, SkewMatrix, TwistedOneForm};
use syzdist::groebner::Ideal;
use syzdist::poly::{parse_poly, parse_ring, Polynomial, RingRef};

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn ring4() -> RingRef {
    parse_ring("ring x,y,z,w").unwrap()
}

fn ring_x() -> RingRef {
    parse_ring("ring x0..x3").unwrap()
}

fn cyclic_form(d: u32) -> TwistedOneForm {
    // Σ (x_{j+1} x_j^d − x_{j−1}^{d+1}) dx_j, indices mod 4
    let r = ring_x();
    let coeffs = (0..4)
        .map(|j| {
            let src = format!("x{}*x{}^{} - x{}^{}", (j + 1) % 4, j, d, (j + 3) % 4, d + 1);
            parse_poly(&src, &r).unwrap()
        })
        .collect();
    TwistedOneForm::from_polys(&r, coeffs).unwrap()
}

#[test]
fn radial_contraction_examples() {
    let r = ring4();
    let rotation = TwistedOneForm::parse("y*dx - x*dy", &r).unwrap();
    assert!(rotation.contract_radial().is_zero());
    assert!(cyclic_form(1).contract_radial().is_zero());
    assert!(cyclic_form(2).contract_radial().is_zero());
    let radial = TwistedOneForm::parse("x*dx", &r).unwrap();
    assert_eq!(
        radial.contract_radial().as_polynomial().unwrap(),
        &parse_poly("x^2", &r).unwrap()
    );
}

#[test]
fn euler_relation_on_cyclic_forms() {
    for d in 1..=3 {
        let w = cyclic_form(d);
        assert_eq!(w.degree(), d as i64);
        assert!(w.satisfies_euler_relation().unwrap(), "d = {d}");
    }
}

#[test]
fn exact_part_has_no_derivative() {
    let r = ring4();
    // d(xy) = y dx + x dy is closed; its radial contraction is 2xy, so only
    // the skew matrix is checked here.
    let w = TwistedOneForm::parse("y*dx + x*dy", &r).unwrap();
    assert!(w.skew_of_derivative().unwrap().is_zero());
    assert!(!w.satisfies_euler_relation().unwrap());
}

#[test]
fn symbolic_pfaffian() {
    let r = parse_ring("ring a,b,c,d,e,f").unwrap();
    let upper: Vec<Polynomial> = ["a", "b", "c", "d", "e", "f"]
        .iter()
        .map(|s| parse_poly(s, &r).unwrap())
        .collect();
    let b = SkewMatrix::from_upper(&r, 4, &upper).unwrap();
    let pf = pfaffian4(&b).unwrap();
    assert_eq!(pf, parse_poly("a*f - b*e + c*d", &r).unwrap());
    assert_eq!(&pf * &pf, b.determinant());
    let cof = pfaffian_cofactors(&b).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let s = (0..4).fold(Polynomial::zero(&r), |acc, k| &acc + &(&cof[i][k] * b.entry(k, j)));
            let expected = if i == j { pf.clone() } else { Polynomial::zero(&r) };
            assert_eq!(s, expected);
        }
    }
}

#[test]
fn pfaffian_requires_four_by_four() {
    let r = ring4();
    let upper = vec![parse_poly("x", &r).unwrap(); 3];
    let b = SkewMatrix::from_upper(&r, 3, &upper).unwrap();
    assert!(pfaffian4(&b).is_err());
    assert!(pfaffian_cofactors(&b).is_err());
}

#[test]
fn cofactor_certificate_on_cyclic_form() {
    let w = cyclic_form(1);
    let r = w.ring().clone();
    let a = w.polys().unwrap();
    let b = w.skew_of_derivative().unwrap();
    let pf = pfaffian4(&b).unwrap();
    assert_eq!(pf.homogeneous_degree(), Some(2));
    let cof = pfaffian_cofactors(&b).unwrap();
    let ideal = Ideal::new(&r, a.clone()).unwrap();
    for i in 0..4 {
        let lhs = &pf * &Polynomial::var(&r, i);
        let rhs = (0..4)
            .fold(Polynomial::zero(&r), |acc, j| &acc + &(&cof[i][j] * &a[j]))
            .scale(&q(w.degree() + 2));
        assert_eq!(lhs, rhs);
        assert!(ideal.contains(&lhs).unwrap());
    }
    let zero = SkewMatrix::from_upper(&r, 4, &vec![Polynomial::zero(&r); 6]).unwrap();
    assert!(pfaffian_cofactors(&zero)
        .unwrap()
        .iter()
        .flatten()
        .all(Polynomial::is_zero));
}

#[test]
fn integrability_of_conic_and_point_family() {
    let r = parse_ring("ring x,y,z,w params t0..t3").unwrap();
    let w = TwistedOneForm::parse(
        "w*(t1*z + t2*y)*dx + w*(t0*z + (t3 - t2)*x)*dy - w*(t0*y + t1*x + t3*z)*dz + t3*(z^2 - x*y)*dw",
        &r,
    )
    .unwrap();
    let at = |v: [i64; 4]| w.specialize(&v.map(q)).unwrap().is_integrable().unwrap();
    // integrable with t3 != 0 exactly when t0 = t1 = 0 and t3 = 2 t2
    assert!(at([0, 0, 1, 2]));
    assert!(at([0, 0, 3, 6]));
    assert!(at([1, 2, 3, 0]));
    assert!(!at([0, 0, 1, 1]));
    assert!(!at([0, 0, 2, -3]));
    assert!(!at([1, 0, 0, 1]));
    assert!(!at([0, 1, 1, 1]));
}

#[test]
fn integrability_pattern_of_three_point_families() {
    let r = parse_ring("ring x,y,z,w params t0,t1").unwrap();
    let rows = [
        ("t1*y*z*dx - t0*x*w*dy - t1*x*y*dz + t0*x*y*dw", false),
        ("t0*y*z*dx + t1*x*z*dy - (t0 + t1)*x*y*dz", true),
        ("(t0*y*z + t1*x*z)*dx - t0*x*z*dy - t1*x^2*dz", true),
        (
            "(t0*x*w + t1*(y*w - x*z))*dx - t1*x*w*dy + t1*x^2*dz - t0*x^2*dw",
            false,
        ),
        ("(t0*z^2 + t1*x*z)*dx - t1*z^2*dy - (t0*x*z + t1*(x^2 - y*z))*dz", true),
    ];
    for (src, integrable) in rows {
        let w = TwistedOneForm::parse(src, &r).unwrap();
        let s = w.specialize(&[q(2), q(3)]).unwrap();
        assert!(s.contract_radial().is_zero(), "{src}");
        assert_eq!(s.is_integrable().unwrap(), integrable, "{src}");
    }
}

#[test]
fn tangent_fields() {
    let r = parse_ring("ring x,y,z,w params t0,t1").unwrap();
    let four = TwistedOneForm::parse("t0*y*z*dx + t1*x*z*dy - (t0 + t1)*x*y*dz", &r).unwrap();
    let f = four
        .specialize(&[q(2), q(5)])
        .unwrap()
        .constant_tangent_fields()
        .unwrap();
    assert_eq!(f, vec![vec![q(0), q(0), q(0), q(1)]]);
    assert!(cyclic_form(1).constant_tangent_fields().unwrap().is_empty());
}

#[test]
fn permuted_forms_stay_projective() {
    let w = cyclic_form(1);
    let p = w.permute_variables(&[2, 0, 3, 1]).unwrap();
    assert!(p.contract_radial().is_zero());
    assert!(p.satisfies_euler_relation().unwrap());
    assert!(w.permute_variables(&[0, 0, 1, 2]).is_err());
}

fn small_poly(r: &RingRef, coeffs: &[i64], deg: u32) -> Polynomial {
    let monos = syzdist::poly::Monomial::all_of_degree(r.nvars(), deg);
    Polynomial::from_terms(
        r,
        monos
            .into_iter()
            .zip(coeffs.iter().map(|&c| q(c)))
            .filter(|(_, c)| !c.is_zero()),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn pfaffian_squared_is_determinant(entries in proptest::collection::vec(-9i64..10, 6)) {
        let r = ring4();
        let upper: Vec<Polynomial> = entries.iter().map(|&e| Polynomial::constant(&r, q(e))).collect();
        let b = SkewMatrix::from_upper(&r, 4, &upper).unwrap();
        let pf = pfaffian4(&b).unwrap();
        prop_assert_eq!(&pf * &pf, b.determinant());
    }

    #[test]
    fn euler_relation_for_projective_forms(
        c in proptest::collection::vec(-3i64..4, 6 * 10),
    ) {
        // ω = Σ_{i<j} L_ij (x_j dx_i − x_i dx_j) is projective for any
        // linear forms L_ij; its skew matrix obeys B·x = 3·A.
        let r = ring4();
        let mut coeffs = vec![Polynomial::zero(&r); 4];
        let mut k = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                let l = small_poly(&r, &c[k * 4..k * 4 + 4], 1);
                k += 1;
                coeffs[i] = &coeffs[i] + &(&l * &Polynomial::var(&r, j));
                coeffs[j] = &coeffs[j] - &(&l * &Polynomial::var(&r, i));
            }
        }
        prop_assume!(coeffs.iter().any(|a| !a.is_zero()));
        let w = TwistedOneForm::from_polys(&r, coeffs).unwrap();
        prop_assert!(w.contract_radial().is_zero());
        let b = w.skew_of_derivative().unwrap();
        prop_assert!(SkewMatrix::new(b.entries().to_vec()).is_ok());
        prop_assert!(w.satisfies_euler_relation().unwrap());
        // scaling by s scales ω∧dω by s²
        let s = q(-2);
        let lhs = w.scale(&s).wedge_integrability().unwrap();
        let rhs = w.wedge_integrability().unwrap();
        for ((i, j, k), p) in rhs.components() {
            prop_assert_eq!(lhs.component(*i, *j, *k).unwrap(), &p.scale(&(&s * &s)));
        }
        prop_assert_eq!(lhs.is_zero(), rhs.is_zero());
        let _ = Q::one();
    }
}
