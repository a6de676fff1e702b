use folia::birational::BirationalMap;
use folia::parse::{parse_polynomial, Bindings};
use folia::{CycNumber, CyclotomicField, Field, MultiPoly};

fn k12() -> Field {
    CyclotomicField::new(12)
}

fn map(text: &str) -> BirationalMap {
    BirationalMap::parse(text, &k12(), &Bindings::new()).unwrap()
}

fn p(text: &str) -> MultiPoly {
    parse_polynomial(text, &k12()).unwrap()
}

fn pt(a: i64, b: i64, c: i64) -> [CycNumber; 3] {
    let k = k12();
    [CycNumber::from_int(&k, a), CycNumber::from_int(&k, b), CycNumber::from_int(&k, c)]
}

#[test]
fn standard_quadratic_involution_squares_to_identity() {
    let sigma = map("(y*z : x*z : x*y)");
    assert_eq!(sigma.degree(), 2);
    assert!(!sigma.is_identity());
    assert!(sigma.compose(&sigma).unwrap().is_identity());
    assert!(sigma.verify_period(2).unwrap());
    assert!(!sigma.verify_period(3).unwrap());
}

#[test]
fn jacobian_of_sigma_is_the_triangle() {
    let sigma = map("(y*z : x*z : x*y)");
    assert!(sigma.jacobian().unwrap().is_proportional(&p("x*y*z")));
}

#[test]
fn sigma_indeterminacy_and_fixed_curve() {
    let sigma = map("(y*z : x*z : x*y)");
    assert!(sigma.is_indeterminate_at(&pt(1, 0, 0)).unwrap());
    assert!(sigma.is_indeterminate_at(&pt(0, 0, 1)).unwrap());
    assert!(!sigma.is_indeterminate_at(&pt(1, 1, 1)).unwrap());
    let fix = sigma.fixed_curve().unwrap();
    assert!(fix.total_degree().unwrap() <= 1);
}

#[test]
fn affine_and_projective_forms_agree() {
    let sigma = map("(y*z : x*z : x*y)");
    let affine = map("(1/x, 1/y)");
    assert!(sigma.projective_equal(&affine));
}

#[test]
fn i_f1_is_an_involution() {
    let f1 = map("(x^3 : -x^2*y : x^2*z - 2*y^3)");
    assert_eq!(f1.degree(), 3);
    assert!(f1.verify_period(2).unwrap());
}

#[test]
fn i_f5_is_an_involution() {
    let f5 = map("(-x^2 : x*y : x*z + 2*y^2)");
    assert!(f5.verify_period(2).unwrap());
}

#[test]
fn cube_field_trivolution_has_period_three() {
    let t = map("(j*x, y + (j - 1)/x^2)");
    assert!(t.verify_period(3).unwrap());
    let t2 = map("(j^2*x, y + (2*j + 1)/(j^2*x^2))");
    assert!(t.compose(&t).unwrap().projective_equal(&t2));
}

#[test]
fn triangular_map_is_not_periodic() {
    let f = map("(x + y^3, y)");
    assert!(!f.verify_period(2).unwrap());
    assert!(!f.verify_period(3).unwrap());
}

#[test]
fn jonquieres_map_is_an_involution_of_degree_nine() {
    let m = map("(y/(1 + x^2*y^2), x*(1 + x^2*y^2))");
    assert_eq!(m.degree(), 9);
    assert!(m.verify_period(2).unwrap());
    let fix = m.fixed_curve().unwrap();
    assert!(p("y*z^4 - x*z^4 - x^3*y^2").divides(&fix));
}

#[test]
fn chain_of_conjugation_returns_identity() {
    let sigma = map("(y*z : x*z : x*y)");
    let ell = map("(x + y : y : z)");
    let ell_inv = map("(x - y : y : z)");
    let conj = ell_inv.compose(&sigma).unwrap().compose(&ell).unwrap();
    assert!(conj.verify_period(2).unwrap());
    assert!(BirationalMap::chain_is_identity(&[&conj, &conj]));
    assert!(!BirationalMap::chain_is_identity(&[&conj, &ell]));
}

#[test]
fn identity_has_no_period() {
    assert!(BirationalMap::identity(&k12()).verify_period(2).is_err());
}
