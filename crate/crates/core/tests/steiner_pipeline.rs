mod common;

use pforge_core::field::CoefficientField;
use pforge_core::pfaffian::{kernel_vector, pfaffian, sub_pfaffian};
use pforge_core::poly::Polynomial;
use pforge_core::rng::stream;
use pforge_core::steiner::{
    assemble, construction_for, contraction_matrix, coordinate_embedding, extract_cubic,
    lift_to_coble, linear_section, AlternatingThreeForm, Cofactor, SteinerData, SteinerKind,
};

use common::{bareiss_det, dense, eval_matrix, random_point};

fn f101() -> CoefficientField {
    CoefficientField::prime(101).unwrap()
}

fn coordinates(field: &CoefficientField, n: usize) -> Vec<Polynomial> {
    (0..n).map(|i| Polynomial::var(field, n, i)).collect()
}

#[test]
fn contraction_annihilates_x() {
    let f = f101();
    for seed in 0..5 {
        let w = AlternatingThreeForm::random(&f, 9, &mut stream(seed, 0));
        let m = contraction_matrix(&w);
        assert!(m
            .mul_vector(&coordinates(&f, 9))
            .iter()
            .all(Polynomial::is_zero));
    }
}

#[test]
fn symbolic_kernel_vector_of_contraction() {
    let f = f101();
    let w = AlternatingThreeForm::random(&f, 9, &mut stream(77, 0));
    let m = contraction_matrix(&w);
    let v = kernel_vector(&m).unwrap();
    assert!(v.iter().any(|p| !p.is_zero()));
    assert!(m.mul_vector(&v).iter().all(Polynomial::is_zero));
}

#[test]
fn linear_pfaffian_cubic_matches_determinant_at_points() {
    let f = f101();
    let kind = SteinerKind::LinearPfaffian { degree: 3 };
    let c = construction_for(kind);
    let mut rng = stream(7, 0);
    let data = c.sample(&f, &mut rng);
    let p = assemble(kind, &data).unwrap();
    assert!(p.kernels().is_empty());
    let inst = extract_cubic(&p).unwrap();
    assert_eq!(inst.degree, 3);
    assert!(inst.form.is_homogeneous());
    let raw = pfaffian(p.matrix()).unwrap();
    for _ in 0..10 {
        let x = random_point(&f, 6, &mut rng);
        let pf = raw.eval(&x).unwrap();
        let det = bareiss_det(dense(&eval_matrix(p.matrix(), &x)), &f);
        assert_eq!(&pf * &pf, det);
    }
}

#[test]
fn coble_restriction_raw_forms_agree_across_indices() {
    let f = f101();
    let c = construction_for(SteinerKind::CobleRestriction);
    let data = c.sample(&f, &mut stream(3, 0));
    let p = c.assemble(&data).unwrap();
    let choices = p.cofactor_choices();
    assert_eq!(
        choices,
        (0..6).map(Cofactor::Single).collect::<Vec<_>>(),
        "padded kernel entries are zero"
    );
    let a = p.raw_form(Cofactor::Single(0)).unwrap();
    let b = p.raw_form(Cofactor::Single(1)).unwrap();
    let e = p.raw_form(Cofactor::Single(5)).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, e);
    assert_eq!(a.degree(), Some(3));
}

#[test]
fn two_tangent_raw_forms_agree_across_pairs() {
    let f = f101();
    let c = construction_for(SteinerKind::TwoTangent);
    let data = c.sample(&f, &mut stream(4, 0));
    let p = c.assemble(&data).unwrap();
    let choices = p.cofactor_choices();
    assert_eq!(&choices[..2], &[Cofactor::Pair(0, 6), Cofactor::Pair(0, 7)]);
    let base = p.raw_form(Cofactor::Pair(0, 6)).unwrap();
    assert_eq!(base.degree(), Some(3));
    for pair in [(0, 7), (1, 6), (2, 9), (5, 11)] {
        assert_eq!(
            p.raw_form(Cofactor::Pair(pair.0, pair.1)).unwrap(),
            base,
            "{pair:?}"
        );
    }
    let inst = extract_cubic(&p).unwrap();
    assert_eq!(inst.form, base.normalized());
    assert_eq!(
        inst.provenance.cofactors,
        vec![Cofactor::Pair(0, 6), Cofactor::Pair(0, 7)]
    );
}

#[test]
fn corank_one_numeric_spot_check() {
    let f = f101();
    let c = construction_for(SteinerKind::CobleFull);
    let mut rng = stream(12, 0);
    let data = c.sample(&f, &mut rng);
    let p = c.assemble(&data).unwrap();
    let raw = p.raw_form(Cofactor::Single(0)).unwrap();
    for _ in 0..5 {
        let x = random_point(&f, 9, &mut rng);
        let mx = eval_matrix(p.matrix(), &x);
        let cx = raw.eval(&x).unwrap();
        for i in 0..9 {
            let s = sub_pfaffian(&mx, &[i]).unwrap();
            let vi = p.kernels()[0][i].eval(&x).unwrap();
            let expected = &vi * &cx;
            let expected = if i % 2 == 0 { expected } else { -&expected };
            assert_eq!(s, expected, "index {i}");
        }
    }
}

#[test]
fn lift_round_trip_and_lambda_independence() {
    let f = f101();
    let restriction = construction_for(SteinerKind::CobleRestriction);
    let full = construction_for(SteinerKind::CobleFull);
    for seed in 0..3 {
        let data = restriction.sample(&f, &mut stream(100 + seed, 0));
        let p = restriction.assemble(&data).unwrap();
        let restricted_cubic = extract_cubic(&p).unwrap().form;
        let mut sections = Vec::new();
        for lambda in [0, 1, 57] {
            let lambda = f.from_i64(lambda);
            let w = lift_to_coble(&p, &lambda).unwrap();
            // only the /\^3 V_3 component carries lambda
            assert_eq!(w.get(6, 7, 8), lambda);
            let again = restriction
                .assemble(&SteinerData::ThreeForms(vec![w.clone()]))
                .unwrap();
            assert_eq!(again.matrix(), p.matrix());
            let coble =
                extract_cubic(&full.assemble(&SteinerData::ThreeForms(vec![w])).unwrap()).unwrap();
            let section = linear_section(&coble.form, &coordinate_embedding(&f)).unwrap();
            assert_eq!(section, restricted_cubic);
            sections.push(section);
        }
        assert!(sections.windows(2).all(|s| s[0] == s[1]));
    }
}

#[test]
fn lift_of_random_form_recovers_all_but_the_v3_cube() {
    let f = f101();
    let w = AlternatingThreeForm::random(&f, 9, &mut stream(8, 1));
    let p = assemble(
        SteinerKind::CobleRestriction,
        &SteinerData::ThreeForms(vec![w.clone()]),
    )
    .unwrap();
    let lambda = w.get(6, 7, 8);
    assert_eq!(lift_to_coble(&p, &lambda).unwrap(), w);
    let block = [6, 7, 8];
    let other = lift_to_coble(&p, &f.zero()).unwrap();
    for count in 0..3 {
        assert_eq!(other.component(&block, count), w.component(&block, count));
    }
    assert_ne!(other.component(&block, 3), w.component(&block, 3));
}

#[test]
fn lift_rejects_other_kinds() {
    let f = f101();
    let c = construction_for(SteinerKind::CobleFull);
    let p = c.assemble(&c.sample(&f, &mut stream(1, 0))).unwrap();
    assert!(lift_to_coble(&p, &f.zero()).is_err());
}

#[test]
fn extraction_over_rationals() {
    let q = CoefficientField::Rationals;
    let c = construction_for(SteinerKind::CobleRestriction);
    let p = c.assemble(&c.sample(&q, &mut stream(2, 0))).unwrap();
    let inst = extract_cubic(&p).unwrap();
    assert_eq!(inst.degree, 3);
    assert!(inst.form.leading_term().unwrap().1.is_one());
}
