use folia::birational::BirationalMap;
use folia::foliation::{
    tangency_of_components, tangency_q_discriminant, to_affine_field, to_homogeneous_form, AffineVectorField, Foliation,
};
use folia::parse::{parse_polynomial, Bindings};
use folia::resultant::discriminant;
use folia::{CycNumber, CyclotomicField, Field, MultiPoly, Var};

fn k12() -> Field {
    CyclotomicField::new(12)
}

fn p(text: &str) -> MultiPoly {
    parse_polynomial(text, &k12()).unwrap()
}

fn fol(a: &str, b: &str) -> Foliation {
    Foliation::from_components(p(a), p(b)).unwrap()
}

fn jouanolou() -> Foliation {
    fol("x^3 - y^2", "x^2*y - 1")
}

#[test]
fn jouanolou_degree_and_inflection_curve() {
    let f = jouanolou();
    assert_eq!(f.degree(), 2);
    assert_eq!(f.foliation_degree().unwrap(), 2);
    let h = f.inflection_polynomial().unwrap();
    assert!(h.is_proportional(&p("3*x^2*y^2*z^2 - x*y^5 - x^5*z - y*z^5")), "{h}");
    assert_eq!(f.flex_part().unwrap(), h);
}

#[test]
fn jouanolou_singular_points() {
    let f = jouanolou();
    let k = k12();
    let one = CycNumber::one(&k);
    assert!(f.is_singular_point(&[one.clone(), one.clone(), one.clone()]).unwrap());
    assert!(!f.is_singular_point(&[one.clone(), CycNumber::from_int(&k, 2), one.clone()]).unwrap());
    let (ex, ey) = f.singular_elimination().unwrap();
    assert!(p("x^7 - 1").divides(&ex));
    assert!(p("y^7 - 1").divides(&ey));
    let k84 = CyclotomicField::new(84);
    for j in 0..7 {
        let xi = CycNumber::root_of_unity(&k84, 7, j).unwrap();
        let point = [xi.clone(), xi.powi(-2).unwrap(), CycNumber::one(&k84)];
        assert!(f.is_singular_point(&point).unwrap());
    }
}

#[test]
fn jouanolou_isotropy() {
    let f = jouanolou();
    let cyc = BirationalMap::parse("(y : z : x)", &k12(), &Bindings::new()).unwrap();
    assert!(f.is_symmetry(&cyc).unwrap());
    let swap = BirationalMap::parse("(y : x : z)", &k12(), &Bindings::new()).unwrap();
    assert!(!f.is_symmetry(&swap).unwrap());
    let k84 = CyclotomicField::new(84);
    let f84 = Foliation::from_components(
        parse_polynomial("x^3 - y^2", &k84).unwrap(),
        parse_polynomial("x^2*y - 1", &k84).unwrap(),
    )
    .unwrap();
    let g = BirationalMap::parse("(zeta(84)^12*x : zeta(84)^(-24)*y : z)", &k84, &Bindings::new()).unwrap();
    assert!(f84.is_symmetry(&g).unwrap());
}

#[test]
fn field_and_form_round_trip() {
    for (a, b) in [("x^3 - y^2", "x^2*y - 1"), ("x*y^2", "y^3 - x^2"), ("x^3", "1"), ("x*y^2 + x^2", "y^3")] {
        let field = AffineVectorField::new(p(a), p(b)).unwrap();
        let form = to_homogeneous_form(&field).unwrap();
        assert!(to_affine_field(&form).unwrap().is_proportional(&field));
        let from_form = Foliation::from_form(form).unwrap();
        assert!(from_form.vector_field().is_proportional(&field));
    }
}

#[test]
fn conic_pencil_form() {
    let f = fol("x*y^2 + x^2", "y^3");
    assert_eq!(f.degree(), 2);
    let [u, v, w] = f.form().coefficients();
    let expected = [p("-y^3"), p("x*y^2 + x^2*z"), p("-x^2*y")];
    let scale = u.leading_coeff() * expected[0].leading_coeff().inverse().unwrap();
    assert_eq!(u, &expected[0].scale(&scale));
    assert_eq!(v, &expected[1].scale(&scale));
    assert_eq!(w, &expected[2].scale(&scale));
}

#[test]
fn radial_top_part_lowers_degree() {
    // x^3 d/dx + (1 + x^2 y) d/dy has top part x^2 (x, y).
    let f = fol("x^3", "1 + x^2*y");
    assert_eq!(f.foliation_degree().unwrap(), 2);
    let radial = fol("x", "y");
    assert_eq!(radial.degree(), 0);
    assert!(radial.inflection_polynomial().is_err());
}

#[test]
fn cubic_examples_have_degree_three() {
    for (a, b) in [
        ("x^3", "1"),
        ("x^3 - 1", "1"),
        ("x^3", "1 + x + x^2/3"),
        ("y^3", "x^3"),
        ("x^3", "y^3"),
        ("y^3 - x^4", "1 - x^3*y"),
    ] {
        let f = fol(a, b);
        assert_eq!(f.foliation_degree().unwrap(), 3, "{a}, {b}");
        let tan = f.tangency_polynomial().unwrap();
        assert_eq!(tan.coefficients.len(), 3);
    }
}

#[test]
fn q_discriminant_is_c_squared_times_p_discriminant() {
    for (a, b) in [("x^3", "1"), ("x^3 - 1", "1"), ("x^3", "1 + x + x^2/3"), ("y^3", "x^3"), ("x^3", "y^3")] {
        let tan = fol(a, b).tangency_polynomial().unwrap();
        let c = &tan.coefficients[2];
        let dp = discriminant(&tan.p, Var::T).unwrap();
        assert_eq!(dp, tan.discriminant().unwrap());
        assert_eq!(tangency_q_discriminant(&tan).unwrap(), &(c * c) * &dp);
    }
}

#[test]
fn tangency_is_invariant_under_polynomial_rescaling() {
    let (a, b) = (p("x^3"), p("1 + x + x^2/3"));
    let h = p("1 + x*y");
    let base = tangency_of_components(&a, &b);
    let scaled = tangency_of_components(&(&h * &a), &(&h * &b));
    assert!(!scaled.q.is_zero());
    let t = MultiPoly::var(&k12(), Var::T);
    let xs = &MultiPoly::var(&k12(), Var::X) + &(&t * &(&h * &a));
    let ys = &MultiPoly::var(&k12(), Var::Y) + &(&t * &(&h * &b));
    let hs = h.substitute_all(&[Some(&xs), Some(&ys), None, None]);
    let base_at_ht = base.q.substitute(Var::T, &(&t * &h));
    assert_eq!(scaled.q, &(&hs * &h) * &base_at_ht);
}

#[test]
fn invariant_curves_and_pencil_tangency() {
    let f = fol("x^3", "y^3");
    assert!(f.is_invariant_curve(&p("x")));
    assert!(f.is_invariant_curve(&p("y")));
    assert!(f.is_invariant_curve(&p("z")));
    assert!(!f.is_invariant_curve(&p("x - y + z")));
    let k = k12();
    let origin = [CycNumber::zero(&k), CycNumber::zero(&k), CycNumber::one(&k)];
    let tang = f.tangency_with_pencil(&origin);
    assert!(tang.is_proportional(&f.form().coefficients()[2]));
}

#[test]
fn symmetry_requires_linear_map() {
    let sigma = BirationalMap::parse("(y*z : x*z : x*y)", &k12(), &Bindings::new()).unwrap();
    assert!(jouanolou().is_symmetry(&sigma).is_err());
}
