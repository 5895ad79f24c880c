use std::collections::HashSet;

use pforge_core::error::SmoothError;
use pforge_core::field::CoefficientField;
use pforge_core::poly::Polynomial;
use pforge_core::smooth::{
    count_points, enumerate_points, projective_size, singular_points, ProjectivePoint,
    DEFAULT_BUDGET,
};

fn fermat(field: &CoefficientField, n: usize, d: u32) -> Polynomial {
    (0..n).fold(Polynomial::zero(field, n), |acc, i| {
        &acc + &Polynomial::var(field, n, i).pow(d)
    })
}

/// Independent re-check with the generic evaluator.
fn is_singular(f: &Polynomial, p: &ProjectivePoint) -> bool {
    f.eval(p.coords()).unwrap().is_zero()
        && (0..f.num_vars()).all(|i| f.partial(i).unwrap().eval(p.coords()).unwrap().is_zero())
}

#[test]
fn enumeration_is_a_bijection() {
    for (p, e, n, expected) in [
        (5, 1, 5, 3906),
        (7, 1, 5, 19608),
        (3, 1, 1, 4),
        (3, 2, 2, 91),
    ] {
        let f = CoefficientField::finite(p, e).unwrap();
        let pts: Vec<ProjectivePoint> = enumerate_points(&f, n, DEFAULT_BUDGET).unwrap().collect();
        assert_eq!(pts.len(), expected);
        assert_eq!(projective_size(f.size().unwrap(), n), expected as u128);
        let distinct: HashSet<_> = pts.iter().cloned().collect();
        assert_eq!(distinct.len(), expected);
        for pt in &pts {
            assert_eq!(
                ProjectivePoint::new(pt.coords().to_vec()).as_ref(),
                Some(pt)
            );
        }
    }
}

#[test]
fn fermat_cubic_has_no_singular_points() {
    let f7 = CoefficientField::prime(7).unwrap();
    let r = singular_points(&fermat(&f7, 6, 3), DEFAULT_BUDGET).unwrap();
    assert!(r.is_clean());
    assert_eq!(r.scanned, 19608);
    assert_eq!(r.field, "F_7");
    assert!(r.verdict().starts_with("no singular"));
}

#[test]
fn degenerate_cubic_is_singular_on_x0_zero() {
    let f5 = CoefficientField::prime(5).unwrap();
    let f = Polynomial::parse(&f5, 3, "1*x0^2*x1").unwrap();
    let r = singular_points(&f, DEFAULT_BUDGET).unwrap();
    // x0 = 0 is the whole singular locus: a P^1 with 6 points
    assert_eq!(r.singular.len(), 6);
    for p in &r.singular {
        assert!(p.coords()[0].is_zero());
        assert!(is_singular(&f, p));
    }
    // reports are sorted in scan order
    let again = singular_points(&f, DEFAULT_BUDGET).unwrap();
    assert_eq!(r, again);
}

#[test]
fn hyperplane_count() {
    let f5 = CoefficientField::prime(5).unwrap();
    assert_eq!(
        count_points(&Polynomial::var(&f5, 6, 0), DEFAULT_BUDGET).unwrap(),
        781
    );
}

#[test]
fn quadric_counts_match_classical_formula() {
    // smooth quadric in P^3 with a split form x0 x1 + x2 x3: (q + 1)^2 points;
    // smooth conic: q + 1; x0^2 + x1^2 + x2^2 + x3^2 in P^3 over F_q with
    // q = 1 mod 4 is split as well.
    for p in [5u64, 7, 11] {
        let f = CoefficientField::prime(p).unwrap();
        let split = Polynomial::parse(&f, 4, "1*x0*x1 + 1*x2*x3").unwrap();
        assert_eq!(
            count_points(&split, DEFAULT_BUDGET).unwrap(),
            (p + 1) * (p + 1)
        );
        let conic = Polynomial::parse(&f, 3, "1*x0^2 + 1*x1^2 + -1*x2^2").unwrap();
        assert_eq!(count_points(&conic, DEFAULT_BUDGET).unwrap(), p + 1);
    }
    // x0^2 + x1^2 + x2^2 + x3^2 over F_7 (q = 3 mod 4, discriminant a square)
    let f7 = CoefficientField::prime(7).unwrap();
    assert_eq!(
        count_points(&fermat(&f7, 4, 2), DEFAULT_BUDGET).unwrap(),
        64
    );
}

#[test]
fn smooth_cubic_fourfold_in_weil_window() {
    // |#X(F_q) - #P^4(F_q)| <= b_4^prim q^2 = 22 q^2 for a smooth cubic fourfold
    for p in [5u64, 7] {
        let f = CoefficientField::prime(p).unwrap();
        let x = fermat(&f, 6, 3);
        let r = singular_points(&x, DEFAULT_BUDGET).unwrap();
        assert!(r.is_clean());
        let center = (p.pow(5) - 1) / (p - 1);
        let width = 22 * p * p;
        assert!(r.count_on_hypersurface.abs_diff(center) <= width, "p = {p}");
    }
}

#[test]
fn quadratic_extension_scan() {
    let f = CoefficientField::quadratic(5).unwrap();
    let x = fermat(&f, 3, 3);
    let r = singular_points(&x, DEFAULT_BUDGET).unwrap();
    assert!(r.is_clean());
    assert_eq!(r.field, "F_5^2");
    assert_eq!(r.scanned, 651);
    // a smooth plane cubic over F_25: |N - 26| <= 2 * 5
    assert!(r.count_on_hypersurface.abs_diff(26) <= 10);
    let cusp = Polynomial::parse(&f, 3, "1*x0^3 + -1*x1^2*x2").unwrap();
    let r = singular_points(&cusp, DEFAULT_BUDGET).unwrap();
    assert_eq!(r.singular.len(), 1);
    assert!(is_singular(&cusp, &r.singular[0]));
}

#[test]
fn input_errors() {
    let f3 = CoefficientField::prime(3).unwrap();
    assert!(matches!(
        singular_points(&fermat(&f3, 3, 3), DEFAULT_BUDGET),
        Err(SmoothError::UnsupportedField(_))
    ));
    let f5 = CoefficientField::prime(5).unwrap();
    assert_eq!(
        singular_points(&Polynomial::zero(&f5, 3), DEFAULT_BUDGET),
        Err(SmoothError::ZeroPolynomial)
    );
    let mixed = Polynomial::parse(&f5, 3, "1*x0^2 + 1*x1").unwrap();
    assert_eq!(
        singular_points(&mixed, DEFAULT_BUDGET),
        Err(SmoothError::NotHomogeneous)
    );
    assert_eq!(
        singular_points(&Polynomial::var(&f5, 3, 0), DEFAULT_BUDGET),
        Err(SmoothError::DegreeTooSmall(1))
    );
    assert!(matches!(
        singular_points(&fermat(&f5, 6, 3), 1000),
        Err(SmoothError::BudgetExceeded {
            points: 15625,
            budget: 1000
        })
    ));
}
