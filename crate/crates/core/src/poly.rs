//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is the
//! graded lexicographic order (total degree first, then lex with
//! `x0 > x1 > ...`). The largest key is the leading term; text and JSON
//! output list terms from the leading term down.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::PolyError;
use crate::field::{CoefficientField, Scalar};

/// Exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Self(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self(e)
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of total degree `degree` in `num_vars` variables,
/// in descending graded-lex order.
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Monomial>) {
        if slots == 1 {
            prefix.push(left);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=left).rev() {
            prefix.push(e);
            rec(prefix, left - e, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if num_vars == 0 {
        if degree == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(
        &mut Vec::with_capacity(num_vars),
        degree,
        num_vars,
        &mut out,
    );
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: CoefficientField,
    num_vars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(field: &CoefficientField, num_vars: usize) -> Self {
        Self {
            field: field.clone(),
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &CoefficientField, num_vars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(field, num_vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(num_vars), c);
        }
        p
    }

    pub fn one(field: &CoefficientField, num_vars: usize) -> Self {
        Self::constant(field, num_vars, field.one())
    }

    /// The variable `x_i`.
    pub fn var(field: &CoefficientField, num_vars: usize, i: usize) -> Self {
        assert!(i < num_vars, "variable x{i} out of range");
        let mut p = Self::zero(field, num_vars);
        p.terms.insert(Monomial::var(num_vars, i), field.one());
        p
    }

    /// `sum_i coeffs[i] * x_i`.
    pub fn linear(field: &CoefficientField, coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            field,
            n,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
        .expect("well-formed linear form")
    }

    /// Build from `(monomial, coefficient)` pairs; repeated monomials are
    /// summed and zero coefficients dropped.
    pub fn from_terms<I>(
        field: &CoefficientField,
        num_vars: usize,
        terms: I,
    ) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = Self::zero(field, num_vars);
        for (m, c) in terms {
            if m.num_vars() != num_vars {
                return Err(PolyError::ArityMismatch {
                    expected: num_vars,
                    got: m.num_vars(),
                });
            }
            if c.field() != *field {
                return Err(PolyError::FieldMismatch {
                    left: field.to_string(),
                    right: c.field().to_string(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Uniformly random homogeneous form of the given degree.
    pub fn random_form<R: Rng + ?Sized>(
        field: &CoefficientField,
        num_vars: usize,
        degree: u32,
        rng: &mut R,
    ) -> Self {
        let terms: Vec<_> = monomials_of_degree(num_vars, degree)
            .into_iter()
            .map(|m| (m, field.random(rng)))
            .collect();
        Self::from_terms(field, num_vars, terms).expect("consistent field")
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), PolyError> {
        if self.field != other.field {
            return Err(PolyError::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        if self.num_vars != other.num_vars {
            return Err(PolyError::ArityMismatch {
                expected: self.num_vars,
                got: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&-other)
    }

    /// Term convolution with hash aggregation.
    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field, self.num_vars));
        }
        let mut acc: HashMap<Monomial, Scalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(slot) => *slot = &*slot + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Self {
            field: self.field.clone(),
            num_vars: self.num_vars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.field, self.num_vars);
        }
        Self {
            field: self.field.clone(),
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field, self.num_vars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar, PolyError> {
        if point.len() != self.num_vars {
            return Err(PolyError::ArityMismatch {
                expected: self.num_vars,
                got: point.len(),
            });
        }
        if let Some(bad) = point.iter().find(|x| x.field() != self.field) {
            return Err(PolyError::FieldMismatch {
                left: self.field.to_string(),
                right: bad.field().to_string(),
            });
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = &t * &x.pow(e as u64);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn partial(&self, i: usize) -> Result<Self, PolyError> {
        if i >= self.num_vars {
            return Err(PolyError::ArityMismatch {
                expected: self.num_vars,
                got: i + 1,
            });
        }
        let mut out = Self::zero(&self.field, self.num_vars);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c.scale_int(e as u64));
        }
        Ok(out)
    }

    /// Exact quotient `r` with `q * r = self`, by multivariate division in
    /// graded-lex order.
    pub fn exact_divide(&self, q: &Self) -> Result<Self, PolyError> {
        self.check_compatible(q)?;
        let (lm_q, lc_q) = q.leading_term().ok_or(PolyError::DivisionByZero)?;
        let inv = lc_q.inverse().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.field, self.num_vars);
        while let Some((lm, lc)) = rem.leading_term() {
            let m = lm.div(lm_q).ok_or(PolyError::NotDivisible)?;
            let c = lc * &inv;
            for (mq, cq) in &q.terms {
                rem.add_term(m.mul(mq), -&(&c * cq));
            }
            quot.add_term(m, c);
        }
        Ok(quot)
    }

    /// Divide by the leading coefficient so the leading graded-lex term is
    /// monic. The zero polynomial is returned unchanged.
    pub fn normalized(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Substitute `x_i <- images[i]`; all images share a field and arity.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Self, PolyError> {
        if images.len() != self.num_vars {
            return Err(PolyError::ArityMismatch {
                expected: self.num_vars,
                got: images.len(),
            });
        }
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        let target_vars = first.num_vars;
        for img in images {
            if img.field != self.field {
                return Err(PolyError::FieldMismatch {
                    left: self.field.to_string(),
                    right: img.field.to_string(),
                });
            }
            if img.num_vars != target_vars {
                return Err(PolyError::ArityMismatch {
                    expected: target_vars,
                    got: img.num_vars,
                });
            }
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|img| vec![Polynomial::one(&self.field, target_vars), img.clone()])
            .collect();
        let mut out = Self::zero(&self.field, target_vars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&self.field, target_vars, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Text form: `c*x0^a0*...` terms in descending graded-lex order joined
    /// by ` + `. Exponent 1 is written bare and zero exponents are omitted.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(field: &CoefficientField, num_vars: usize, text: &str) -> Result<Self, PolyError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(PolyError::Parse("empty polynomial".into()));
        }
        let mut out = Self::zero(field, num_vars);
        for raw in compact.split('+') {
            if raw.is_empty() {
                return Err(PolyError::Parse(format!("empty term in {text:?}")));
            }
            let mut factors = raw.split('*').peekable();
            let first = *factors.peek().expect("split yields one item");
            let coeff = if first.starts_with("-x") {
                -&field.one()
            } else if first.starts_with('x') {
                field.one()
            } else {
                factors.next();
                field.parse_scalar(first)?
            };
            let mut exps = vec![0u32; num_vars];
            for f in factors {
                let f = f.strip_prefix('-').unwrap_or(f);
                let body = f
                    .strip_prefix('x')
                    .ok_or_else(|| PolyError::Parse(format!("bad factor {f:?}")))?;
                let (idx, e) = match body.split_once('^') {
                    Some((i, e)) => (i, e),
                    None => (body, "1"),
                };
                let idx: usize = idx
                    .parse()
                    .map_err(|_| PolyError::Parse(format!("bad variable {f:?}")))?;
                let e: u32 = e
                    .parse()
                    .map_err(|_| PolyError::Parse(format!("bad exponent {f:?}")))?;
                if idx >= num_vars {
                    return Err(PolyError::ArityMismatch {
                        expected: num_vars,
                        got: idx + 1,
                    });
                }
                exps[idx] += e;
            }
            out.add_term(Monomial(exps), coeff);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            field: self.field.clone(),
            num_vars: self.num_vars,
            terms: self
                .terms()
                .map(|(m, c)| (m.exponents().to_vec(), c.to_string()))
                .collect(),
        }
    }

    pub fn from_json(json: &PolynomialJson) -> Result<Self, PolyError> {
        let mut out = Self::zero(&json.field, json.num_vars);
        for (exps, c) in &json.terms {
            if exps.len() != json.num_vars {
                return Err(PolyError::ArityMismatch {
                    expected: json.num_vars,
                    got: exps.len(),
                });
            }
            out.add_term(Monomial(exps.clone()), json.field.parse_scalar(c)?);
        }
        Ok(out)
    }
}

/// JSON shape `{field, num_vars, terms: [[exponents, "coefficient"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub field: CoefficientField,
    pub num_vars: usize,
    pub terms: Vec<(Vec<u32>, String)>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = PolynomialJson::deserialize(deserializer)?;
        Self::from_json(&json).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    _ => write!(f, "*x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_add(rhs).expect("incompatible polynomials")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("incompatible polynomials")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("incompatible polynomials")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            field: self.field.clone(),
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}
