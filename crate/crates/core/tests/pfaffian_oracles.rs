mod common;

use pforge_core::field::{CoefficientField, Scalar};
use pforge_core::pfaffian::{
    kernel_vector, pfaffian, sub_pfaffian, PfaffianCache, PolyRing, SkewMatrix,
};
use pforge_core::poly::Polynomial;
use pforge_core::rng::stream;
use rand::Rng;

use common::{bareiss_det, dense, matching_pfaffian, random_skew};

fn fields() -> Vec<CoefficientField> {
    vec![
        CoefficientField::Rationals,
        CoefficientField::prime(7).unwrap(),
        CoefficientField::prime(2_147_483_647).unwrap(),
        CoefficientField::quadratic(5).unwrap(),
    ]
}

#[test]
fn square_is_determinant() {
    for f in fields() {
        for size in [2, 4, 6, 8, 10] {
            for seed in 0..4 {
                let m = random_skew(size, &f, &mut stream(seed, size as u64));
                let pf = pfaffian(&m).unwrap();
                assert_eq!(&pf * &pf, bareiss_det(dense(&m), &f), "{f} size {size}");
            }
        }
    }
}

#[test]
fn odd_size_has_zero_determinant() {
    let f = CoefficientField::Rationals;
    let m = random_skew(7, &f, &mut stream(1, 1));
    assert!(bareiss_det(dense(&m), &f).is_zero());
    assert!(pfaffian(&m).is_err());
}

#[test]
fn agrees_with_matching_expansion() {
    for f in fields() {
        for size in [2, 4, 6, 8] {
            let m = random_skew(size, &f, &mut stream(5, size as u64));
            assert_eq!(
                pfaffian(&m).unwrap(),
                matching_pfaffian(&m, &f),
                "{f} size {size}"
            );
        }
    }
}

#[test]
fn congruence_scales_by_determinant() {
    for f in fields() {
        let mut rng = stream(9, 0);
        let n = 6;
        let m = random_skew(n, &f, &mut rng);
        let p: Vec<Vec<Scalar>> = (0..n)
            .map(|_| (0..n).map(|_| f.random(&mut rng)).collect())
            .collect();
        // (P^T M P)_ij = sum_kl P_ki M_kl P_lj
        let conj = SkewMatrix::from_fn(n, f.clone(), |i, j| {
            let mut acc = f.zero();
            for k in 0..n {
                for l in 0..n {
                    acc = &acc + &(&(&p[k][i] * &m.get(k, l)) * &p[l][j]);
                }
            }
            acc
        })
        .unwrap();
        let lhs = pfaffian(&conj).unwrap();
        let rhs = &bareiss_det(p.clone(), &f) * &pfaffian(&m).unwrap();
        assert_eq!(lhs, rhs, "{f}");
    }
}

#[test]
fn sub_pfaffians_match_principal_submatrices() {
    let f = CoefficientField::prime(7).unwrap();
    let m = random_skew(9, &f, &mut stream(21, 0));
    let mut cache = PfaffianCache::new(&m).unwrap();
    for i in 0..9 {
        let keep: Vec<usize> = (0..9).filter(|&k| k != i).collect();
        let direct = matching_pfaffian(&m.principal_submatrix(&keep), &f);
        assert_eq!(cache.sub_pfaffian(&[i]).unwrap(), direct);
        assert_eq!(sub_pfaffian(&m, &[i]).unwrap(), direct);
    }
    for (a, b, c) in [(0, 1, 2), (0, 4, 8), (3, 5, 6)] {
        let keep: Vec<usize> = (0..9).filter(|&k| k != a && k != b && k != c).collect();
        let direct = matching_pfaffian(&m.principal_submatrix(&keep), &f);
        assert_eq!(cache.sub_pfaffian(&[a, b, c]).unwrap(), direct);
    }
    assert!(cache.cached_subproblems() > 0);
    assert!(cache.sub_pfaffian(&[0, 1]).is_err());
    assert!(cache.sub_pfaffian(&[2, 1, 0]).is_err());
}

#[test]
fn kernel_vector_over_rationals() {
    let f = CoefficientField::Rationals;
    let mut rng = stream(33, 0);
    for _ in 0..5 {
        let m =
            SkewMatrix::from_fn(5, f.clone(), |_, _| f.from_i64(rng.gen_range(-9..=9))).unwrap();
        let v = kernel_vector(&m).unwrap();
        assert!(m.mul_vector(&v).iter().all(Scalar::is_zero));
    }
}

#[test]
fn symbolic_kernel_vector_nine_by_nine() {
    let f = CoefficientField::prime(101).unwrap();
    let mut rng = stream(34, 0);
    let ring = PolyRing::new(&f, 3);
    let m =
        SkewMatrix::from_fn(9, ring, |_, _| Polynomial::random_form(&f, 3, 1, &mut rng)).unwrap();
    let v = kernel_vector(&m).unwrap();
    assert!(v.iter().all(|p| p.is_zero() || p.degree() == Some(4)));
    assert!(m.mul_vector(&v).iter().all(Polynomial::is_zero));
}

#[test]
fn symbolic_pfaffian_specializes() {
    let f = CoefficientField::prime(101).unwrap();
    let mut rng = stream(35, 0);
    let ring = PolyRing::new(&f, 4);
    let m =
        SkewMatrix::from_fn(6, ring, |_, _| Polynomial::random_form(&f, 4, 1, &mut rng)).unwrap();
    let pf = pfaffian(&m).unwrap();
    assert_eq!(pf.degree(), Some(3));
    for _ in 0..5 {
        let x: Vec<Scalar> = (0..4).map(|_| f.random(&mut rng)).collect();
        let mx = common::eval_matrix(&m, &x);
        assert_eq!(pf.eval(&x).unwrap(), matching_pfaffian(&mx, &f));
    }
}

#[test]
fn json_round_trip() {
    let f = CoefficientField::quadratic(7).unwrap();
    let m = random_skew(6, &f, &mut stream(36, 0));
    let json = serde_json::to_string(&m.to_json()).unwrap();
    let back = SkewMatrix::<Scalar>::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
    assert_eq!(back, m);
}
