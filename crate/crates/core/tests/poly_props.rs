use std::collections::BTreeMap;

use pforge_core::field::{CoefficientField, Scalar};
use pforge_core::poly::{Monomial, Polynomial};
use pforge_core::rng::stream;
use proptest::prelude::*;

const VARS: usize = 3;

fn field_strategy() -> impl Strategy<Value = CoefficientField> {
    prop_oneof![
        Just(CoefficientField::Rationals),
        Just(CoefficientField::prime(7).unwrap()),
        Just(CoefficientField::prime(101).unwrap()),
        Just(CoefficientField::quadratic(5).unwrap()),
    ]
}

fn poly_in(field: CoefficientField) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..3, VARS), -20i64..20), 0..6).prop_map(
        move |terms| {
            let terms = terms
                .into_iter()
                .map(|(e, c)| (Monomial::new(e), field.from_i64(c)));
            Polynomial::from_terms(&field, VARS, terms).unwrap()
        },
    )
}

fn triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    field_strategy().prop_flat_map(|f| (poly_in(f.clone()), poly_in(f.clone()), poly_in(f)))
}

/// Schoolbook product with the monomial table kept as plain exponent vectors.
fn naive_product(a: &Polynomial, b: &Polynomial) -> BTreeMap<Vec<u32>, Scalar> {
    let mut out: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let e: Vec<u32> = ma
                .exponents()
                .iter()
                .zip(mb.exponents())
                .map(|(x, y)| x + y)
                .collect();
            let c = ca * cb;
            let slot = out.entry(e).or_insert_with(|| a.field().zero());
            *slot = &*slot + &c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_matches_naive((a, b, _) in triple()) {
        let fast: BTreeMap<Vec<u32>, Scalar> =
            (&a * &b).terms().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect();
        prop_assert_eq!(fast, naive_product(&a, &b));
    }

    #[test]
    fn exact_division_recovers_factor((a, b, _) in triple()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_divide(&b).unwrap(), a);
    }

    #[test]
    fn text_round_trip((a, _, _) in triple()) {
        let back = Polynomial::parse(a.field(), VARS, &a.to_text()).unwrap();
        prop_assert_eq!(&back, &a);
        let json = serde_json::to_string(&a).unwrap();
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn evaluation_is_a_ring_map((a, b, _) in triple(), seed in 0u64..1000) {
        let f = a.field().clone();
        let mut rng = stream(seed, 0);
        let x: Vec<Scalar> = (0..VARS).map(|_| f.random(&mut rng)).collect();
        let (ea, eb) = (a.eval(&x).unwrap(), b.eval(&x).unwrap());
        prop_assert_eq!((&a * &b).eval(&x).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval(&x).unwrap(), &ea + &eb);
    }

    #[test]
    fn euler_relation(seed in 0u64..1000, degree in 1u32..5) {
        // sum x_i df/dx_i = deg * f for homogeneous f
        let f = CoefficientField::prime(101).unwrap();
        let p = Polynomial::random_form(&f, VARS, degree, &mut stream(seed, 1));
        prop_assert!(p.is_homogeneous());
        let mut acc = Polynomial::zero(&f, VARS);
        for i in 0..VARS {
            acc = &acc + &(&Polynomial::var(&f, VARS, i) * &p.partial(i).unwrap());
        }
        prop_assert_eq!(acc, p.scale(&f.from_i64(degree as i64)));
    }

    #[test]
    fn products_of_forms_are_homogeneous(seed in 0u64..1000, d1 in 0u32..4, d2 in 0u32..4) {
        let f = CoefficientField::quadratic(7).unwrap();
        let mut rng = stream(seed, 2);
        let p = Polynomial::random_form(&f, VARS, d1, &mut rng);
        let q = Polynomial::random_form(&f, VARS, d2, &mut rng);
        let pq = &p * &q;
        prop_assert!(pq.is_homogeneous());
        if !pq.is_zero() {
            prop_assert_eq!(pq.degree(), Some(d1 + d2));
        }
    }
}

#[test]
fn composition_with_linear_change() {
    let f = CoefficientField::Rationals;
    let x = Polynomial::parse(&f, 2, "1*x0^2 + -1*x1^2").unwrap();
    let images = [
        Polynomial::parse(&f, 2, "1*x0 + 1*x1").unwrap(),
        Polynomial::parse(&f, 2, "1*x0 + -1*x1").unwrap(),
    ];
    assert_eq!(
        x.compose(&images).unwrap(),
        Polynomial::parse(&f, 2, "4*x0*x1").unwrap()
    );
}

#[test]
fn mixed_arity_is_an_error() {
    let f = CoefficientField::Rationals;
    assert!(Polynomial::var(&f, 2, 0)
        .try_add(&Polynomial::var(&f, 3, 0))
        .is_err());
    let g = CoefficientField::prime(7).unwrap();
    assert!(Polynomial::var(&f, 2, 0)
        .try_mul(&Polynomial::var(&g, 2, 0))
        .is_err());
}
