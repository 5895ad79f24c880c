//! Skew presentations of Steiner-Pfaffian hypersurfaces and extraction of
//! their defining forms.
//!
//! A presentation is a skew matrix of linear forms together with the
//! covectors it annihilates identically. Its hypersurface equation is read
//! off from sub-Pfaffians:
//!
//! - corank 0: the Pfaffian itself;
//! - corank 1 (odd size, kernel `v`): `(-1)^i Pf(M minus i) = v_i * F`;
//! - corank 2 (kernel `u`, `w`):
//!   `(-1)^(a+b+1) Pf(M minus {a, b}) = (u_a w_b - u_b w_a) * F`.
//!
//! `F` is recovered by exact division and normalized so that its leading
//! graded-lex coefficient is 1. Signs follow the Pfaffian module's
//! convention; with them the raw quotient does not depend on which index
//! (or pair) was removed.

mod registry;

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::SteinerError;
use crate::field::{CoefficientField, Scalar};
use crate::pfaffian::{PfaffianCache, PolyRing, SkewMatrix, SkewMatrixJson};
use crate::poly::{Monomial, Polynomial};

pub use registry::{
    construction_for, CobleFull, CobleRestriction, ConstructionOptions, LinearPfaffian, Registry,
    SteinerConstruction, TwoTangent,
};

/// Number of ambient coordinates of the Coble cubic.
pub const COBLE_VARS: usize = 9;
/// Number of coordinates of the fourfold's ambient `P^5`.
pub const FOURFOLD_VARS: usize = 6;

/// Alternating 3-form stored on strictly increasing index triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingThreeForm {
    field: CoefficientField,
    num_vars: usize,
    coeffs: BTreeMap<[usize; 3], Scalar>,
}

/// Sort a triple, returning the sign of the sorting permutation; `None` on a
/// repeated index.
fn sort_triple(i: usize, j: usize, k: usize) -> Option<([usize; 3], bool)> {
    let mut t = [i, j, k];
    let mut odd = false;
    for a in 0..3 {
        for b in 0..2 - a {
            if t[b] > t[b + 1] {
                t.swap(b, b + 1);
                odd = !odd;
            }
        }
    }
    if t[0] == t[1] || t[1] == t[2] {
        None
    } else {
        Some((t, odd))
    }
}

impl AlternatingThreeForm {
    pub fn zero(field: &CoefficientField, num_vars: usize) -> Self {
        Self {
            field: field.clone(),
            num_vars,
            coeffs: BTreeMap::new(),
        }
    }

    /// Every coefficient uniform in the field.
    pub fn random<R: Rng + ?Sized>(field: &CoefficientField, num_vars: usize, rng: &mut R) -> Self {
        let mut w = Self::zero(field, num_vars);
        for i in 0..num_vars {
            for j in i + 1..num_vars {
                for k in j + 1..num_vars {
                    w.set(i, j, k, field.random(rng));
                }
            }
        }
        w
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Set `w(e_i, e_j, e_k)`; the other orderings follow by antisymmetry.
    pub fn set(&mut self, i: usize, j: usize, k: usize, c: Scalar) {
        assert!(i.max(j).max(k) < self.num_vars, "index out of range");
        let (t, odd) = sort_triple(i, j, k).expect("alternating forms vanish on repeated indices");
        let c = if odd { -&c } else { c };
        if c.is_zero() {
            self.coeffs.remove(&t);
        } else {
            self.coeffs.insert(t, c);
        }
    }

    /// `w(e_i, e_j, e_k)`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        match sort_triple(i, j, k) {
            None => self.field.zero(),
            Some((t, odd)) => match self.coeffs.get(&t) {
                None => self.field.zero(),
                Some(c) if odd => -c,
                Some(c) => c.clone(),
            },
        }
    }

    /// Stored `(i < j < k, coefficient)` pairs.
    pub fn coefficients(&self) -> impl Iterator<Item = (&[usize; 3], &Scalar)> {
        self.coeffs.iter()
    }

    /// The part of the form whose triples have exactly `count` indices in
    /// `block`. With `block = {6, 7, 8}` in 9 variables, counts 0..=3 give
    /// the four summands of `/\^3 (V_6 + V_3)^*`.
    pub fn component(&self, block: &[usize], count: usize) -> Self {
        let mut out = Self::zero(&self.field, self.num_vars);
        for (t, c) in &self.coeffs {
            if t.iter().filter(|i| block.contains(i)).count() == count {
                out.coeffs.insert(*t, c.clone());
            }
        }
        out
    }

    pub fn to_json(&self) -> ThreeFormJson {
        ThreeFormJson {
            field: self.field.clone(),
            num_vars: self.num_vars,
            coeffs: self
                .coeffs
                .iter()
                .map(|(t, c)| (t[0], t[1], t[2], c.to_string()))
                .collect(),
        }
    }

    pub fn from_json(json: &ThreeFormJson) -> Result<Self, SteinerError> {
        let mut w = Self::zero(&json.field, json.num_vars);
        for (i, j, k, c) in &json.coeffs {
            if *i.max(j).max(k) >= json.num_vars || sort_triple(*i, *j, *k).is_none() {
                return Err(SteinerError::ShapeMismatch(format!(
                    "bad 3-form index triple ({i}, {j}, {k})"
                )));
            }
            w.set(*i, *j, *k, json.field.parse_scalar(c)?);
        }
        Ok(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeFormJson {
    pub field: CoefficientField,
    pub num_vars: usize,
    pub coeffs: Vec<(usize, usize, usize, String)>,
}

/// `M(x)_ij = sum_k w(e_k, e_i, e_j) x_k`. Satisfies `M(x) x = 0`.
pub fn contraction_matrix(form: &AlternatingThreeForm) -> SkewMatrix<Polynomial> {
    contraction_in(form, form.num_vars)
}

/// Contraction keeping only the first `kept` coordinates (the others set
/// to zero), as a matrix of forms in `kept` variables.
fn contraction_in(form: &AlternatingThreeForm, kept: usize) -> SkewMatrix<Polynomial> {
    let n = form.num_vars;
    let ring = PolyRing::new(&form.field, kept);
    SkewMatrix::from_fn(n, ring, |i, j| {
        let coeffs: Vec<Scalar> = (0..kept).map(|k| form.get(k, i, j)).collect();
        Polynomial::linear(&form.field, &coeffs)
    })
    .expect("entries share the form's field")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "name")]
pub enum SteinerKind {
    /// `2d x 2d` matrix of linear forms on `P^5`.
    LinearPfaffian { degree: usize },
    /// Contraction of a 3-form in 9 variables, `T(-2) -> Omega(1)` on `P^8`.
    CobleFull,
    /// The same contraction restricted to `x6 = x7 = x8 = 0`.
    CobleRestriction,
    /// Block matrix `[[M1, M2], [M2, M3]]` of three contractions in 6
    /// variables, `Omega(1)^2` type.
    TwoTangent,
}

impl SteinerKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::LinearPfaffian { .. } => "linear-pfaffian",
            Self::CobleFull => "coble-full",
            Self::CobleRestriction => "coble-restriction",
            Self::TwoTangent => "two-tangent",
        }
    }

    pub fn matrix_size(&self) -> usize {
        match *self {
            Self::LinearPfaffian { degree } => 2 * degree,
            Self::CobleFull | Self::CobleRestriction => 9,
            Self::TwoTangent => 12,
        }
    }

    pub fn num_vars(&self) -> usize {
        match self {
            Self::CobleFull => COBLE_VARS,
            _ => FOURFOLD_VARS,
        }
    }

    pub fn corank(&self) -> usize {
        match self {
            Self::LinearPfaffian { .. } => 0,
            Self::CobleFull | Self::CobleRestriction => 1,
            Self::TwoTangent => 2,
        }
    }

    pub fn expected_degree(&self) -> u32 {
        match *self {
            Self::LinearPfaffian { degree } => degree as u32,
            _ => 3,
        }
    }
}

impl fmt::Display for SteinerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::LinearPfaffian { degree } => write!(f, "linear-pfaffian({degree})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Raw input for [`assemble`].
#[derive(Clone, Debug, PartialEq)]
pub enum SteinerData {
    Matrix(SkewMatrix<Polynomial>),
    ThreeForms(Vec<AlternatingThreeForm>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SkewPresentation {
    kind: SteinerKind,
    matrix: SkewMatrix<Polynomial>,
    kernels: Vec<Vec<Polynomial>>,
}

fn is_linear_or_zero(p: &Polynomial) -> bool {
    p.is_zero() || (p.is_homogeneous() && p.degree() == Some(1))
}

impl SkewPresentation {
    /// Validate shape, linearity of entries, kernel count, and that each
    /// kernel is annihilated identically.
    pub fn new(
        kind: SteinerKind,
        matrix: SkewMatrix<Polynomial>,
        kernels: Vec<Vec<Polynomial>>,
    ) -> Result<Self, SteinerError> {
        if matrix.size() != kind.matrix_size() {
            return Err(SteinerError::ShapeMismatch(format!(
                "{kind} needs a {0}x{0} matrix, got {1}x{1}",
                kind.matrix_size(),
                matrix.size()
            )));
        }
        if matrix.ring().num_vars != kind.num_vars() {
            return Err(SteinerError::ShapeMismatch(format!(
                "{kind} lives in {} variables, matrix has {}",
                kind.num_vars(),
                matrix.ring().num_vars
            )));
        }
        if let Some((i, j, _)) = matrix
            .nonzero_upper()
            .find(|(_, _, e)| !is_linear_or_zero(e))
        {
            return Err(SteinerError::ShapeMismatch(format!(
                "entry ({i}, {j}) is not a linear form"
            )));
        }
        if kernels.len() != kind.corank() {
            return Err(SteinerError::ShapeMismatch(format!(
                "{kind} has {} kernel covectors, got {}",
                kind.corank(),
                kernels.len()
            )));
        }
        for v in &kernels {
            if v.len() != matrix.size() {
                return Err(SteinerError::ShapeMismatch("kernel covector length".into()));
            }
            if !matrix.mul_vector(v).iter().all(Polynomial::is_zero) {
                return Err(SteinerError::ShapeMismatch(
                    "kernel covector is not annihilated by the matrix".into(),
                ));
            }
        }
        Ok(Self {
            kind,
            matrix,
            kernels,
        })
    }

    pub fn kind(&self) -> SteinerKind {
        self.kind
    }

    pub fn matrix(&self) -> &SkewMatrix<Polynomial> {
        &self.matrix
    }

    pub fn kernels(&self) -> &[Vec<Polynomial>] {
        &self.kernels
    }

    pub fn field(&self) -> &CoefficientField {
        &self.matrix.ring().field
    }

    /// Cofactor choices with a nonzero kernel factor, in preference order
    /// (smallest index, or lexicographically smallest pair, first).
    pub fn cofactor_choices(&self) -> Vec<Cofactor> {
        let n = self.matrix.size();
        match self.kernels.as_slice() {
            [] => vec![Cofactor::Whole],
            [v] => (0..n)
                .filter(|&i| !v[i].is_zero())
                .map(Cofactor::Single)
                .collect(),
            [u, w] => {
                let mut out = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        if !pair_factor(u, w, a, b).is_zero() {
                            out.push(Cofactor::Pair(a, b));
                        }
                    }
                }
                out
            }
            _ => Vec::new(),
        }
    }

    /// Signed sub-Pfaffian of `choice` divided by its kernel factor, before
    /// normalization.
    pub fn raw_form(&self, choice: Cofactor) -> Result<Polynomial, SteinerError> {
        let mut cache = PfaffianCache::new(&self.matrix)?;
        self.raw_form_cached(choice, &mut cache)
    }

    fn raw_form_cached(
        &self,
        choice: Cofactor,
        cache: &mut PfaffianCache<'_, Polynomial>,
    ) -> Result<Polynomial, SteinerError> {
        let degenerate = |why: String| SteinerError::DegenerateInstance(why);
        let (sub, factor) = match (choice, self.kernels.as_slice()) {
            (Cofactor::Whole, []) => (cache.pfaffian()?, None),
            (Cofactor::Single(i), [v]) => {
                let s = cache.sub_pfaffian(&[i])?;
                let s = if i % 2 == 0 { s } else { -&s };
                (s, Some(v[i].clone()))
            }
            (Cofactor::Pair(a, b), [u, w]) => {
                let s = cache.sub_pfaffian(&[a, b])?;
                let s = if (a + b) % 2 == 1 { s } else { -&s };
                (s, Some(pair_factor(u, w, a, b)))
            }
            _ => {
                return Err(SteinerError::ShapeMismatch(format!(
                    "cofactor {choice:?} does not fit a corank-{} presentation",
                    self.kernels.len()
                )))
            }
        };
        if sub.is_zero() {
            return Err(degenerate(format!(
                "sub-Pfaffian for {choice:?} vanishes identically"
            )));
        }
        match factor {
            None => Ok(sub),
            Some(f) => sub.exact_divide(&f).map_err(|e| {
                degenerate(format!(
                    "sub-Pfaffian for {choice:?} not divisible by its kernel factor: {e}"
                ))
            }),
        }
    }
}

fn pair_factor(u: &[Polynomial], w: &[Polynomial], a: usize, b: usize) -> Polynomial {
    &(&u[a] * &w[b]) - &(&u[b] * &w[a])
}

/// Which sub-Pfaffian carries the form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cofactor {
    Whole,
    Single(usize),
    Pair(usize, usize),
}

impl fmt::Display for Cofactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Whole => write!(f, "pfaffian"),
            Self::Single(i) => write!(f, "remove {{{i}}}"),
            Self::Pair(a, b) => write!(f, "remove {{{a}, {b}}}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub attempt: Option<u64>,
    /// Cofactor choices used for extraction and for the consistency check.
    pub cofactors: Vec<Cofactor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicInstance {
    pub kind: SteinerKind,
    pub degree: u32,
    pub form: Polynomial,
    pub text: String,
    pub provenance: Provenance,
}

impl CubicInstance {
    fn new(kind: SteinerKind, form: Polynomial, provenance: Provenance) -> Self {
        Self {
            kind,
            degree: form.degree().unwrap_or(0),
            text: form.to_text(),
            form,
            provenance,
        }
    }
}

/// Assemble the presentation for `kind` using the registered construction.
pub fn assemble(kind: SteinerKind, data: &SteinerData) -> Result<SkewPresentation, SteinerError> {
    construction_for(kind).assemble(data)
}

/// Extract and normalize the form of `presentation`, checking that a second
/// cofactor choice (when one exists) yields the same normalized form.
pub fn extract_cubic(presentation: &SkewPresentation) -> Result<CubicInstance, SteinerError> {
    let kind = presentation.kind;
    let choices = presentation.cofactor_choices();
    let Some(&first) = choices.first() else {
        return Err(SteinerError::DegenerateInstance(
            "no kernel entry is a nonzero form".into(),
        ));
    };
    let mut cache = PfaffianCache::new(&presentation.matrix)?;
    let raw = presentation.raw_form_cached(first, &mut cache)?;
    let expected = kind.expected_degree();
    if !raw.is_homogeneous() || raw.degree() != Some(expected) {
        return Err(SteinerError::DegenerateInstance(format!(
            "extracted form has degree {:?}, expected {expected}",
            raw.degree()
        )));
    }
    let form = raw.normalized();
    let mut used = vec![first];
    if let Some(&second) = choices.get(1) {
        let other = presentation
            .raw_form_cached(second, &mut cache)?
            .normalized();
        if other != form {
            return Err(SteinerError::DegenerateInstance(format!(
                "{first} and {second} give different forms"
            )));
        }
        used.push(second);
    }
    Ok(CubicInstance::new(
        kind,
        form,
        Provenance {
            cofactors: used,
            ..Provenance::default()
        },
    ))
}

/// Recover a 3-form in 9 variables whose restricted contraction is the
/// matrix of `presentation` (a coble-restriction presentation), with
/// `w(e6, e7, e8) = lambda`.
///
/// Triples meeting `{0..5}` are read off the linear coefficients of the
/// matrix; they must be consistent with full antisymmetry.
pub fn lift_to_coble(
    presentation: &SkewPresentation,
    lambda: &Scalar,
) -> Result<AlternatingThreeForm, SteinerError> {
    if presentation.kind != SteinerKind::CobleRestriction {
        return Err(SteinerError::ShapeMismatch(format!(
            "lift needs a coble-restriction presentation, got {}",
            presentation.kind
        )));
    }
    let field = presentation.field().clone();
    if lambda.field() != field {
        return Err(SteinerError::ShapeMismatch(
            "lambda is not in the matrix field".into(),
        ));
    }
    let m = &presentation.matrix;
    let mut form = AlternatingThreeForm::zero(&field, COBLE_VARS);
    let mut seen: BTreeMap<[usize; 3], Scalar> = BTreeMap::new();
    for i in 0..COBLE_VARS {
        for j in i + 1..COBLE_VARS {
            let entry = m.get(i, j);
            for k in 0..FOURFOLD_VARS {
                let c = entry.coefficient(&Monomial::var(FOURFOLD_VARS, k));
                // w(k, i, j) = c
                let Some((t, odd)) = sort_triple(k, i, j) else {
                    if !c.is_zero() {
                        return Err(SteinerError::ShapeMismatch(format!(
                            "entry ({i}, {j}) involves x{k}, which a 3-form contraction cannot"
                        )));
                    }
                    continue;
                };
                let c = if odd { -&c } else { c };
                match seen.get(&t) {
                    Some(prev) if *prev != c => {
                        return Err(SteinerError::ShapeMismatch(format!(
                            "matrix coefficients are not antisymmetric on {t:?}"
                        )))
                    }
                    Some(_) => {}
                    None => {
                        seen.insert(t, c.clone());
                        form.set(t[0], t[1], t[2], c);
                    }
                }
            }
        }
    }
    form.set(6, 7, 8, lambda.clone());
    Ok(form)
}

/// Rank of a dense matrix over a field, by Gaussian elimination.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut a: Vec<Vec<Scalar>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        let inv = a[r][c].inverse().expect("nonzero pivot");
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            let (head, tail) = a.split_at_mut(i);
            for (x, p) in tail[0][c..cols].iter_mut().zip(&head[r][c..cols]) {
                *x = &*x - &(&f * p);
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Restrict a form in 9 variables along `x_i <- sum_j embedding[i][j] y_j`
/// (a rank-6 embedding of `P^5`), normalized.
pub fn linear_section(
    form: &Polynomial,
    embedding: &[Vec<Scalar>],
) -> Result<Polynomial, SteinerError> {
    if embedding.len() != form.num_vars() || embedding.iter().any(|r| r.len() != FOURFOLD_VARS) {
        return Err(SteinerError::ShapeMismatch(format!(
            "embedding must be {}x{FOURFOLD_VARS}",
            form.num_vars()
        )));
    }
    let rk = rank(embedding);
    if rk != FOURFOLD_VARS {
        return Err(SteinerError::RankDeficient {
            rank: rk,
            expected: FOURFOLD_VARS,
        });
    }
    let images: Vec<Polynomial> = embedding
        .iter()
        .map(|row| Polynomial::linear(form.field(), row))
        .collect();
    Ok(form.compose(&images)?.normalized())
}

/// The embedding `y -> (y0, ..., y5, 0, 0, 0)`.
pub fn coordinate_embedding(field: &CoefficientField) -> Vec<Vec<Scalar>> {
    (0..COBLE_VARS)
        .map(|i| {
            (0..FOURFOLD_VARS)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect()
}

/// JSON input `{kind, degree?, seed?, three_forms: [...], matrix?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationInput {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default)]
    pub three_forms: Vec<ThreeFormJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<SkewMatrixJson>,
}

impl PresentationInput {
    /// Serializable form of `data` for `kind`.
    pub fn from_data(kind: SteinerKind, seed: Option<u64>, data: &SteinerData) -> Self {
        let degree = match kind {
            SteinerKind::LinearPfaffian { degree } => Some(degree),
            _ => None,
        };
        let (three_forms, matrix) = match data {
            SteinerData::Matrix(m) => (Vec::new(), Some(m.to_json())),
            SteinerData::ThreeForms(ws) => {
                (ws.iter().map(AlternatingThreeForm::to_json).collect(), None)
            }
        };
        Self {
            kind: kind.name().to_string(),
            degree,
            seed,
            three_forms,
            matrix,
        }
    }

    pub fn kind(&self) -> Result<SteinerKind, SteinerError> {
        let opts = ConstructionOptions {
            degree: self.degree,
        };
        Ok(Registry::builtin().create(&self.kind, &opts)?.kind())
    }

    pub fn data(&self) -> Result<SteinerData, SteinerError> {
        match &self.matrix {
            Some(m) => Ok(SteinerData::Matrix(SkewMatrix::from_json(m)?)),
            None => Ok(SteinerData::ThreeForms(
                self.three_forms
                    .iter()
                    .map(AlternatingThreeForm::from_json)
                    .collect::<Result<_, _>>()?,
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream;

    fn f101() -> CoefficientField {
        CoefficientField::prime(101).unwrap()
    }

    #[test]
    fn cross_product_contraction() {
        let q = CoefficientField::Rationals;
        let mut w = AlternatingThreeForm::zero(&q, 3);
        w.set(0, 1, 2, q.one());
        let m = contraction_matrix(&w);
        let x = |i| Polynomial::var(&q, 3, i);
        assert_eq!(m.get(0, 1), x(2));
        assert_eq!(m.get(0, 2), -&x(1));
        assert_eq!(m.get(1, 2), x(0));
        let xs: Vec<_> = (0..3).map(x).collect();
        assert!(m.mul_vector(&xs).iter().all(Polynomial::is_zero));
    }

    #[test]
    fn zero_form_gives_zero_matrix() {
        let w = AlternatingThreeForm::zero(&f101(), 5);
        assert_eq!(contraction_matrix(&w).nonzero_upper().count(), 0);
    }

    #[test]
    fn antisymmetric_access() {
        let f = f101();
        let mut w = AlternatingThreeForm::zero(&f, 4);
        w.set(2, 0, 1, f.from_i64(5));
        assert_eq!(w.get(0, 1, 2), f.from_i64(5));
        assert_eq!(w.get(1, 0, 2), f.from_i64(-5));
        assert!(w.get(1, 1, 2).is_zero());
    }

    #[test]
    fn presentation_rejects_wrong_kernel() {
        let f = f101();
        let mut rng = stream(5, 0);
        let w = AlternatingThreeForm::random(&f, 9, &mut rng);
        let m = contraction_matrix(&w);
        let bad = vec![Polynomial::var(&f, 9, 0); 9];
        assert!(matches!(
            SkewPresentation::new(SteinerKind::CobleFull, m.clone(), vec![bad]),
            Err(SteinerError::ShapeMismatch(_))
        ));
        assert!(matches!(
            SkewPresentation::new(SteinerKind::CobleFull, m, vec![]),
            Err(SteinerError::ShapeMismatch(_))
        ));
    }

    #[test]
    fn two_tangent_with_zero_blocks_is_degenerate() {
        let f = f101();
        let mut rng = stream(9, 0);
        let data = SteinerData::ThreeForms(vec![
            AlternatingThreeForm::random(&f, 6, &mut rng),
            AlternatingThreeForm::zero(&f, 6),
            AlternatingThreeForm::zero(&f, 6),
        ]);
        let p = assemble(SteinerKind::TwoTangent, &data).unwrap();
        assert!(p.matrix().get(0, 7).is_zero());
        assert!(p.matrix().get(6, 7).is_zero());
        assert!(matches!(
            extract_cubic(&p),
            Err(SteinerError::DegenerateInstance(_))
        ));
    }

    #[test]
    fn rank_of_coordinate_embedding() {
        let f = f101();
        assert_eq!(rank(&coordinate_embedding(&f)), 6);
        let mut e = coordinate_embedding(&f);
        e[5][5] = f.zero();
        assert_eq!(rank(&e), 5);
        let c = Polynomial::parse(&f, 9, "x0^3").unwrap();
        assert!(matches!(
            linear_section(&c, &e),
            Err(SteinerError::RankDeficient { rank: 5, .. })
        ));
    }

    #[test]
    fn section_of_zero_is_zero() {
        let f = f101();
        let z = Polynomial::zero(&f, 9);
        assert!(linear_section(&z, &coordinate_embedding(&f))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn coordinate_section_keeps_cubic_in_first_six() {
        let f = f101();
        let c9 = Polynomial::parse(&f, 9, "x0^3 + 2*x1*x2*x5 + x4^2*x3").unwrap();
        let c6 = Polynomial::parse(&f, 6, "x0^3 + 2*x1*x2*x5 + x4^2*x3").unwrap();
        assert_eq!(linear_section(&c9, &coordinate_embedding(&f)).unwrap(), c6);
    }

    #[test]
    fn three_form_json_round_trip() {
        let f = f101();
        let w = AlternatingThreeForm::random(&f, 6, &mut stream(1, 0));
        let back = AlternatingThreeForm::from_json(&w.to_json()).unwrap();
        assert_eq!(back, w);
        let mut bad = w.to_json();
        bad.coeffs.push((1, 1, 2, "3".into()));
        assert!(AlternatingThreeForm::from_json(&bad).is_err());
    }
}
