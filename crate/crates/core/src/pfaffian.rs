//! Pfaffians and sub-Pfaffians of skew-symmetric matrices over any
//! supported commutative ring.
//!
//! Sign convention: `Pf([[0, a], [-a, 0]]) = a`, and
//! `Pf(M) = sum_j (-1)^j a_{1j} Pf(M with rows/cols 1, j removed)` with
//! 1-based `j` running over the remaining indices. Sub-problems are memoized
//! on the bitmask of surviving indices.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PfaffianError, PolyError};
use crate::field::{CoefficientField, Scalar};
use crate::poly::Polynomial;

pub const MAX_SIZE: usize = 32;

/// Ring operations the Pfaffian engine needs.
pub trait RingElement: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Ring: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero_of(ring: &Self::Ring) -> Self;
    fn one_of(ring: &Self::Ring) -> Self;
    fn ring_of(&self) -> Self::Ring;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn is_zero_element(&self) -> bool;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
}

impl RingElement for Scalar {
    type Ring = CoefficientField;

    fn zero_of(ring: &CoefficientField) -> Self {
        ring.zero()
    }
    fn one_of(ring: &CoefficientField) -> Self {
        ring.one()
    }
    fn ring_of(&self) -> CoefficientField {
        self.field()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
}

/// `field[x0..x{num_vars-1}]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub field: CoefficientField,
    pub num_vars: usize,
}

impl PolyRing {
    pub fn new(field: &CoefficientField, num_vars: usize) -> Self {
        Self {
            field: field.clone(),
            num_vars,
        }
    }
}

impl RingElement for Polynomial {
    type Ring = PolyRing;

    fn zero_of(ring: &PolyRing) -> Self {
        Polynomial::zero(&ring.field, ring.num_vars)
    }
    fn one_of(ring: &PolyRing) -> Self {
        Polynomial::one(&ring.field, ring.num_vars)
    }
    fn ring_of(&self) -> PolyRing {
        PolyRing::new(self.field(), self.num_vars())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
}

/// Skew-symmetric matrix storing only the strict upper triangle.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix<R: RingElement> {
    size: usize,
    ring: R::Ring,
    upper: Vec<R>,
}

fn upper_index(size: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < size);
    // rows 0..i contribute (size-1) + (size-2) + ... + (size-i) entries
    i * (2 * size - i - 1) / 2 + (j - i - 1)
}

impl<R: RingElement> SkewMatrix<R> {
    pub fn zeros(size: usize, ring: R::Ring) -> Self {
        let zero = R::zero_of(&ring);
        Self {
            size,
            upper: vec![zero; size * size.saturating_sub(1) / 2],
            ring,
        }
    }

    /// Build from `entry(i, j)` for `i < j`.
    pub fn from_fn<F>(size: usize, ring: R::Ring, mut entry: F) -> Result<Self, PfaffianError>
    where
        F: FnMut(usize, usize) -> R,
    {
        let mut m = Self::zeros(size, ring);
        for i in 0..size {
            for j in i + 1..size {
                m.set(i, j, entry(i, j))?;
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ring(&self) -> &R::Ring {
        &self.ring
    }

    /// Entry `(i, j)` of the full matrix.
    pub fn get(&self, i: usize, j: usize) -> R {
        assert!(i < self.size && j < self.size, "index out of range");
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper[upper_index(self.size, i, j)].clone(),
            std::cmp::Ordering::Greater => self.upper[upper_index(self.size, j, i)].negated(),
            std::cmp::Ordering::Equal => R::zero_of(&self.ring),
        }
    }

    /// Set entry `(i, j)` and, implicitly, `(j, i) = -value`.
    pub fn set(&mut self, i: usize, j: usize, value: R) -> Result<(), PfaffianError> {
        if value.ring_of() != self.ring {
            return Err(PfaffianError::RingMismatch);
        }
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper[upper_index(self.size, i, j)] = value,
            std::cmp::Ordering::Greater => {
                self.upper[upper_index(self.size, j, i)] = value.negated()
            }
            std::cmp::Ordering::Equal => {
                if !value.is_zero_element() {
                    return Err(PfaffianError::Malformed("nonzero diagonal entry".into()));
                }
            }
        }
        Ok(())
    }

    /// Principal submatrix on `keep` (in the given order).
    pub fn principal_submatrix(&self, keep: &[usize]) -> Self {
        let mut m = Self::zeros(keep.len(), self.ring.clone());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate().skip(a + 1) {
                m.upper[upper_index(keep.len(), a, b)] = self.get(i, j);
            }
        }
        m
    }

    /// `M * v`.
    pub fn mul_vector(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.size, "vector length");
        (0..self.size)
            .map(|i| {
                (0..self.size).fold(R::zero_of(&self.ring), |acc, j| {
                    if i == j || v[j].is_zero_element() {
                        acc
                    } else {
                        acc.plus(&self.get(i, j).times(&v[j]))
                    }
                })
            })
            .collect()
    }

    /// Apply `f` entrywise (e.g. evaluate a matrix of forms at a point).
    pub fn map<S: RingElement, F>(&self, ring: S::Ring, f: F) -> SkewMatrix<S>
    where
        F: Fn(&R) -> S,
    {
        SkewMatrix {
            size: self.size,
            ring,
            upper: self.upper.iter().map(f).collect(),
        }
    }

    /// Upper-triangle entries `(i, j, a_ij)` with `a_ij != 0`.
    pub fn nonzero_upper(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        (0..self.size)
            .flat_map(move |i| (i + 1..self.size).map(move |j| (i, j)))
            .zip(self.upper.iter())
            .filter(|(_, v)| !v.is_zero_element())
            .map(|((i, j), v)| (i, j, v))
    }
}

/// Memoized first-row expansion over one matrix. Sub-Pfaffians of the same
/// matrix share the cache.
pub struct PfaffianCache<'a, R: RingElement> {
    matrix: &'a SkewMatrix<R>,
    memo: HashMap<u32, R>,
}

impl<'a, R: RingElement> PfaffianCache<'a, R> {
    pub fn new(matrix: &'a SkewMatrix<R>) -> Result<Self, PfaffianError> {
        if matrix.size > MAX_SIZE {
            return Err(PfaffianError::TooLarge(matrix.size));
        }
        Ok(Self {
            matrix,
            memo: HashMap::new(),
        })
    }

    pub fn cached_subproblems(&self) -> usize {
        self.memo.len()
    }

    /// Pfaffian of the principal submatrix on the indices set in `mask`.
    fn of_mask(&mut self, mask: u32) -> R {
        if mask == 0 {
            return R::one_of(&self.matrix.ring);
        }
        if mask.count_ones() % 2 == 1 {
            return R::zero_of(&self.matrix.ring);
        }
        if let Some(v) = self.memo.get(&mask) {
            return v.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << first);
        let mut acc = R::zero_of(&self.matrix.ring);
        let mut bits = rest;
        let mut position = 0usize;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            position += 1;
            let a = &self.matrix.upper[upper_index(self.matrix.size, first, j)];
            if a.is_zero_element() {
                continue;
            }
            let minor = self.of_mask(rest & !(1 << j));
            if minor.is_zero_element() {
                continue;
            }
            let term = a.times(&minor);
            acc = if position % 2 == 1 {
                acc.plus(&term)
            } else {
                acc.minus(&term)
            };
        }
        self.memo.insert(mask, acc.clone());
        acc
    }

    fn full_mask(&self) -> u32 {
        if self.matrix.size == 32 {
            u32::MAX
        } else {
            (1u32 << self.matrix.size) - 1
        }
    }

    pub fn pfaffian(&mut self) -> Result<R, PfaffianError> {
        if self.matrix.size % 2 == 1 {
            return Err(PfaffianError::OddSize(self.matrix.size));
        }
        let mask = self.full_mask();
        Ok(self.of_mask(mask))
    }

    pub fn sub_pfaffian(&mut self, removed: &[usize]) -> Result<R, PfaffianError> {
        let size = self.matrix.size;
        if removed.windows(2).any(|w| w[0] >= w[1]) || removed.iter().any(|&i| i >= size) {
            return Err(PfaffianError::BadIndexSet { size });
        }
        if (size - removed.len()) % 2 == 1 {
            return Err(PfaffianError::ParityError {
                size,
                removed: removed.len(),
            });
        }
        let mask = removed.iter().fold(self.full_mask(), |m, &i| m & !(1 << i));
        Ok(self.of_mask(mask))
    }
}

pub fn pfaffian<R: RingElement>(m: &SkewMatrix<R>) -> Result<R, PfaffianError> {
    PfaffianCache::new(m)?.pfaffian()
}

/// Pfaffian of the principal submatrix on the complement of `removed`
/// (strictly increasing indices).
pub fn sub_pfaffian<R: RingElement>(
    m: &SkewMatrix<R>,
    removed: &[usize],
) -> Result<R, PfaffianError> {
    PfaffianCache::new(m)?.sub_pfaffian(removed)
}

/// For odd size: `v_i = (-1)^i * Pf(M with row/col i removed)` (0-based
/// `i`), which satisfies `M v = 0`.
pub fn kernel_vector<R: RingElement>(m: &SkewMatrix<R>) -> Result<Vec<R>, PfaffianError> {
    if m.size.is_multiple_of(2) {
        return Err(PfaffianError::EvenSize(m.size));
    }
    let mut cache = PfaffianCache::new(m)?;
    (0..m.size)
        .map(|i| {
            let s = cache.sub_pfaffian(&[i])?;
            Ok(if i % 2 == 0 { s } else { s.negated() })
        })
        .collect()
}

/// Ring elements that have a text form, so matrices of them can be
/// written as JSON.
pub trait TextEntry: RingElement {
    fn ring_name(ring: &Self::Ring) -> String;
    fn parse_ring(name: &str) -> Result<Self::Ring, PfaffianError>;
    fn entry_text(&self) -> String;
    fn parse_entry(ring: &Self::Ring, text: &str) -> Result<Self, PfaffianError>;
}

impl TextEntry for Scalar {
    fn ring_name(ring: &CoefficientField) -> String {
        ring.to_string()
    }
    fn parse_ring(name: &str) -> Result<CoefficientField, PfaffianError> {
        name.parse()
            .map_err(|e| PfaffianError::Poly(PolyError::Field(e)))
    }
    fn entry_text(&self) -> String {
        self.to_string()
    }
    fn parse_entry(ring: &CoefficientField, text: &str) -> Result<Self, PfaffianError> {
        ring.parse_scalar(text)
            .map_err(|e| PfaffianError::Poly(PolyError::Field(e)))
    }
}

impl TextEntry for Polynomial {
    /// `F_101[x0..x5]`.
    fn ring_name(ring: &PolyRing) -> String {
        format!("{}[x0..x{}]", ring.field, ring.num_vars.saturating_sub(1))
    }
    fn parse_ring(name: &str) -> Result<PolyRing, PfaffianError> {
        let bad = || PfaffianError::Malformed(format!("bad polynomial ring {name:?}"));
        let (field, vars) = name.split_once('[').ok_or_else(bad)?;
        let last = vars
            .strip_prefix("x0..x")
            .and_then(|v| v.strip_suffix(']'))
            .ok_or_else(bad)?;
        let last: usize = last.parse().map_err(|_| bad())?;
        Ok(PolyRing::new(&Scalar::parse_ring(field)?, last + 1))
    }
    fn entry_text(&self) -> String {
        self.to_text()
    }
    fn parse_entry(ring: &PolyRing, text: &str) -> Result<Self, PfaffianError> {
        Ok(Polynomial::parse(&ring.field, ring.num_vars, text)?)
    }
}

/// JSON shape `{size, ring, upper: [[i, j, "entry"], ...]}` with 0-based
/// `i < j`; omitted entries are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewMatrixJson {
    pub size: usize,
    pub ring: String,
    pub upper: Vec<(usize, usize, String)>,
}

impl<R: TextEntry> SkewMatrix<R> {
    pub fn to_json(&self) -> SkewMatrixJson {
        SkewMatrixJson {
            size: self.size,
            ring: R::ring_name(&self.ring),
            upper: self
                .nonzero_upper()
                .map(|(i, j, v)| (i, j, v.entry_text()))
                .collect(),
        }
    }

    pub fn from_json(json: &SkewMatrixJson) -> Result<Self, PfaffianError> {
        let ring = R::parse_ring(&json.ring)?;
        let mut m = Self::zeros(json.size, ring);
        for (i, j, text) in &json.upper {
            if i >= j || *j >= json.size {
                return Err(PfaffianError::Malformed(format!(
                    "entry ({i}, {j}) is not in the strict upper triangle of a {0}x{0} matrix",
                    json.size
                )));
            }
            let v = R::parse_entry(&m.ring, text)?;
            m.set(*i, *j, v)?;
        }
        Ok(m)
    }
}

/// A skew matrix read from JSON whose ring is only known at runtime.
#[derive(Clone, Debug, PartialEq)]
pub enum AnySkewMatrix {
    Scalar(SkewMatrix<Scalar>),
    Poly(SkewMatrix<Polynomial>),
}

impl AnySkewMatrix {
    pub fn from_json(json: &SkewMatrixJson) -> Result<Self, PfaffianError> {
        if json.ring.contains('[') {
            Ok(Self::Poly(SkewMatrix::from_json(json)?))
        } else {
            Ok(Self::Scalar(SkewMatrix::from_json(json)?))
        }
    }

    /// Pfaffian rendered as text.
    pub fn pfaffian_text(&self) -> Result<String, PfaffianError> {
        match self {
            Self::Scalar(m) => Ok(pfaffian(m)?.to_string()),
            Self::Poly(m) => Ok(pfaffian(m)?.to_text()),
        }
    }
}
