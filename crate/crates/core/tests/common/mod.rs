//! Test-only oracles, independent of the library's Pfaffian engine.

#![allow(dead_code)]

use pforge_core::field::{CoefficientField, Scalar};
use pforge_core::pfaffian::SkewMatrix;
use pforge_core::poly::Polynomial;
use pforge_core::rng::InstanceRng;

/// Determinant by Bareiss fraction-free elimination.
pub fn bareiss_det(mut a: Vec<Vec<Scalar>>, field: &CoefficientField) -> Scalar {
    let n = a.len();
    if n == 0 {
        return field.one();
    }
    let mut sign_flip = false;
    let mut prev = field.one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign_flip = !sign_flip;
                }
                None => return field.zero(),
            }
        }
        let inv_prev = prev.inverse().expect("previous pivot is nonzero");
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = &num * &inv_prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign_flip {
        -&d
    } else {
        d
    }
}

pub fn dense(m: &SkewMatrix<Scalar>) -> Vec<Vec<Scalar>> {
    let n = m.size();
    (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j)).collect())
        .collect()
}

/// Sum over perfect matchings, with the sign of the matching permutation.
pub fn matching_pfaffian(m: &SkewMatrix<Scalar>, field: &CoefficientField) -> Scalar {
    fn rec(m: &SkewMatrix<Scalar>, left: &mut Vec<usize>, field: &CoefficientField) -> Scalar {
        if left.is_empty() {
            return field.one();
        }
        let mut acc = field.zero();
        let first = left.remove(0);
        for idx in 0..left.len() {
            let j = left.remove(idx);
            // pairing `first` with the idx-th remaining element moves it past
            // idx others
            let sub = rec(m, left, field);
            let t = &m.get(first, j) * &sub;
            acc = if idx % 2 == 0 { &acc + &t } else { &acc - &t };
            left.insert(idx, j);
        }
        left.insert(0, first);
        acc
    }
    rec(m, &mut (0..m.size()).collect(), field)
}

pub fn random_skew(
    size: usize,
    field: &CoefficientField,
    rng: &mut InstanceRng,
) -> SkewMatrix<Scalar> {
    SkewMatrix::from_fn(size, field.clone(), |_, _| field.random(rng)).unwrap()
}

pub fn random_point(field: &CoefficientField, n: usize, rng: &mut InstanceRng) -> Vec<Scalar> {
    (0..n).map(|_| field.random(rng)).collect()
}

pub fn eval_matrix(m: &SkewMatrix<Polynomial>, point: &[Scalar]) -> SkewMatrix<Scalar> {
    m.map(m.ring().field.clone(), |p| p.eval(point).unwrap())
}
