use folia::gcd::{gcd, lcm};
use folia::squarefree::perfect_square_decompose;
use folia::{CycNumber, CyclotomicField, Field, Monomial, MultiPoly};
use num_rational::BigRational;
use proptest::prelude::*;

fn k12() -> Field {
    CyclotomicField::new(12)
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn number(field: Field) -> impl Strategy<Value = CycNumber> {
    let degree = field.degree();
    prop::collection::vec(rational(), degree).prop_map(move |coords| CycNumber::from_coords(&field, coords).unwrap())
}

/// Polynomial in x, y, z with at most `terms` monomials of degree at most `degree` in each variable.
fn poly(degree: u16, terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0..=degree, 0..=degree, 0..=degree), -4i64..=4), 1..=terms).prop_map(|terms| {
        let k = k12();
        MultiPoly::from_terms(
            &k,
            terms.into_iter().map(|((a, b, c), v)| (Monomial::xyz(a, b, c), CycNumber::from_int(&k, v))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_and_multiplication_axioms(a in number(k12()), b in number(k12()), c in number(k12())) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &CycNumber::zero(&k12()), a.clone());
        prop_assert_eq!(&a * &CycNumber::one(&k12()), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn nonzero_elements_are_invertible(a in number(k12())) {
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert_eq!(inv.inverse().unwrap(), a);
    }

    #[test]
    fn axioms_in_a_larger_field(a in number(CyclotomicField::new(84)), b in number(CyclotomicField::new(84))) {
        prop_assert_eq!(&(&a * &b) - &(&b * &a), CycNumber::zero(a.field()));
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gcd_divides_and_is_divisible_by_common_factors(a in poly(2, 3), b in poly(2, 3), c in poly(1, 3)) {
        prop_assume!(!c.is_zero());
        let (p, q) = (&a * &c, &b * &c);
        let g = gcd(&p, &q);
        prop_assert!(g.divides(&p));
        prop_assert!(g.divides(&q));
        if !p.is_zero() || !q.is_zero() {
            prop_assert!(c.divides(&g));
            let l = lcm(&p, &q);
            if !p.is_zero() && !q.is_zero() {
                prop_assert!((&g * &l).is_proportional(&(&p * &q)));
            }
        }
    }

    #[test]
    fn perfect_square_round_trip(s in poly(2, 4), kappa in -9i64..=9) {
        prop_assume!(kappa != 0 && !s.is_constant());
        let k = k12();
        let d = (&s * &s).scale(&CycNumber::from_int(&k, kappa));
        let (found_kappa, found) = perfect_square_decompose(&d).expect("a square");
        prop_assert_eq!((&found * &found).scale(&found_kappa), d);
        prop_assert!(found.is_proportional(&s));
    }

    #[test]
    fn squares_times_a_nonsquare_factor_are_rejected(s in poly(1, 3)) {
        prop_assume!(!s.is_zero());
        let k = k12();
        let x = MultiPoly::monomial(&k, Monomial::xyz(1, 0, 0), CycNumber::one(&k));
        let y = MultiPoly::monomial(&k, Monomial::xyz(0, 1, 0), CycNumber::one(&k));
        let d = &(&s * &s) * &(&(&x * &y) + &MultiPoly::one(&k));
        prop_assert!(perfect_square_decompose(&d).is_none());
    }
}
