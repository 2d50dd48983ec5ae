use syzdist::groebner::Ideal;
use syzdist::poly::{parse_ideal, parse_poly, parse_ring, RingRef, UniPoly};
use syzdist::syzygy::{
    ext_top_cyclic, hilbert_polynomial, linear_syzygy_space, minimal_free_resolution, syzygies, tensor_length,
    BettiTable, SyzygyRoute,
};

fn ring4() -> RingRef {
    parse_ring("ring x,y,z,w").unwrap()
}

fn ring3() -> RingRef {
    parse_ring("ring x,y,z").unwrap()
}

fn ideal(ring: &RingRef, src: &str) -> Ideal {
    Ideal::new(ring, parse_ideal(src, ring).unwrap()).unwrap()
}

fn hp(src: &str) -> UniPoly {
    UniPoly::parse(src).unwrap()
}

#[test]
fn koszul_syzygy_of_two_variables() {
    let r = ring4();
    let gens = parse_ideal("x, y", &r).unwrap();
    let m = syzygies(&gens).unwrap();
    assert_eq!(m.ncols(), 1);
    let col = m.column_polys(0);
    let y = parse_poly("y", &r).unwrap();
    let x = parse_poly("x", &r).unwrap();
    assert!(col == vec![y.clone(), -&x] || col == vec![-&y, x]);
}

#[test]
fn twisted_cubic_syzygies_are_linear() {
    let r = ring4();
    let gens = parse_ideal("x*z - y^2, x*w - y*z, y*w - z^2", &r).unwrap();
    let m = syzygies(&gens).unwrap();
    assert_eq!(m.ncols(), 2);
    assert_eq!(m.source().twists, vec![3, 3]);
    let row = syzdist::syzygy::GradedMatrix::generator_row(&r, &gens).unwrap();
    assert!(row.compose(&m).is_zero());
    for route in [SyzygyRoute::Groebner, SyzygyRoute::Oracle] {
        assert_eq!(linear_syzygy_space(&gens, route).unwrap().dim(), 2);
    }
}

#[test]
fn resolution_of_line_and_two_points() {
    let r = ring4();
    let i = ideal(&r, "y*w, x*w, y*z, x*z, x*y");
    let res = minimal_free_resolution(&i).unwrap();
    assert!(res.is_complex());
    assert!(res.is_minimal());
    assert_eq!(res.euler_characteristic(), 0);
    assert_eq!(res.betti(), BettiTable::from_shape(&[&[(2, 5)], &[(3, 6)], &[(4, 2)]]));
    assert_eq!(hilbert_polynomial(&i).unwrap(), hp("t + 3"));
}

#[test]
fn resolution_of_conic_and_point() {
    let r = ring4();
    let i = ideal(&r, "z*w, y*w, x*w, x*y - z^2");
    let res = minimal_free_resolution(&i).unwrap();
    assert!(res.is_complex() && res.is_minimal());
    assert_eq!(res.betti(), BettiTable::from_shape(&[&[(2, 4)], &[(3, 4)], &[(4, 1)]]));
    assert_eq!(hilbert_polynomial(&i).unwrap(), hp("2*t + 2"));
}

#[test]
fn twisted_cubic_hilbert_polynomial_matches_series() {
    let r = ring4();
    let i = ideal(&r, "x*z - y^2, x*w - y*z, y*w - z^2");
    let p = hilbert_polynomial(&i).unwrap();
    assert_eq!(p, hp("3*t + 1"));
    assert_eq!(p, i.hilbert_polynomial_from_series().unwrap());
    let res = minimal_free_resolution(&i).unwrap();
    for k in res.max_twist()..res.max_twist() + 4 {
        assert_eq!(
            p.eval_int(k),
            num_rational::BigRational::from_integer(i.hilbert_function(k).unwrap().into())
        );
    }
}

#[test]
fn ext_of_appendix_ideals() {
    let r = ring3();
    for (src, expected) in [
        ("x, y, z", "x, y, z"),
        ("x^2, x*z, y", "x, y, z"),
        ("x, y, z^2", "x, y, z^2"),
    ] {
        let j = ext_top_cyclic(&ideal(&r, src)).unwrap();
        assert!(j.same_ideal(&ideal(&r, expected)).unwrap(), "{src}: got {j}");
    }
    assert!(ext_top_cyclic(&ideal(&r, "x, y")).is_err());
}

#[test]
fn tensor_lengths_of_appendix_ideals() {
    let r = ring3();
    let cases = [
        ("x, y, z", "x, y, z", 3),
        ("x, y, z", "x^2, x*z, y", 3),
        ("x, y, z^2", "x, y, z^2", 6),
    ];
    for (j, i, expected) in cases {
        assert_eq!(tensor_length(&ideal(&r, j), &ideal(&r, i)).unwrap(), expected);
    }
    assert!(tensor_length(&ideal(&r, "x"), &ideal(&r, "x, y")).is_err());
}
