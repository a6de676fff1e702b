use folia::birational::BirationalMap;
use folia::foliation::{foliation_from_involution, AffineVectorField};
use folia::parse::{parse_polynomial, Bindings};
use folia::{CyclotomicField, Field, MultiPoly};

fn k12() -> Field {
    CyclotomicField::new(12)
}

fn map(text: &str) -> BirationalMap {
    BirationalMap::parse(text, &k12(), &Bindings::new()).unwrap()
}

fn p(text: &str) -> MultiPoly {
    parse_polynomial(text, &k12()).unwrap()
}

fn field(a: &str, b: &str) -> AffineVectorField {
    AffineVectorField::new(p(a), p(b)).unwrap()
}

#[test]
fn jonquieres_involution_gives_degree_four() {
    let m = map("(y/(1 + x^2*y^2), x*(1 + x^2*y^2))");
    let out = foliation_from_involution(&m).unwrap();
    assert_eq!(out.degree, 4);
    assert!(out.degree_is_even);
    assert!(out.bound_holds);
    assert!(out.foliation.vector_field().is_proportional(&field("-1", "1 + x^2*y^2")));
}

#[test]
fn standard_involution_gives_degree_two() {
    let m = map("(1/x, 1/y)");
    let out = foliation_from_involution(&m).unwrap();
    assert_eq!(out.degree, 2);
    assert!(out.degree_is_even);
    assert!(out.bound_holds);
}

#[test]
fn fibre_involutions_give_the_vertical_pencil() {
    for r in ["x^3 + 1", "x^2 - 2", "x + 3", "x^5 - x"] {
        let m = map(&format!("(x, ({r})/y)"));
        assert!(m.verify_period(2).unwrap(), "{r}");
        let out = foliation_from_involution(&m).unwrap();
        assert!(out.foliation.vector_field().is_proportional(&field("0", "1")), "{r}");
        assert_eq!(out.degree, 0, "{r}");
        assert!(out.degree_is_even);
    }
}

#[test]
fn produced_degrees_are_even() {
    let maps = [
        "(y/(1 + x^2*y^2), x*(1 + x^2*y^2))",
        "(1/x, 1/y)",
        "(y*z : x*z : x*y)",
        "(x^3 : -x^2*y : x^2*z - 2*y^3)",
        "(-x^2 : x*y : x*z + 2*y^2)",
        "(x, (x^3 + 1)/y)",
        "(y, x)",
        "(-x, -y)",
    ];
    for text in maps {
        let m = map(text);
        assert!(m.verify_period(2).unwrap(), "{text}");
        let out = foliation_from_involution(&m).unwrap();
        assert!(out.degree_is_even, "{text}: degree {}", out.degree);
        assert_eq!(out.degree % 2, 0);
    }
}

#[test]
fn identity_is_rejected() {
    assert!(foliation_from_involution(&BirationalMap::identity(&k12())).is_err());
}
