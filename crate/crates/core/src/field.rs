//! Coefficient fields: the rationals, prime fields `F_p` and quadratic
//! extensions `F_{p^2} = F_p[t]/(t^2 - r)`.
//!
//! Every [`Scalar`] carries enough of its field to do arithmetic on its own,
//! so scalars can be used as plain ring elements by the Pfaffian engine.
//! Mixing scalars from different fields is a logic error and panics; the
//! polynomial layer checks field compatibility before it gets that far.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::FieldError;

/// Largest admissible characteristic (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Rationals,
    PrimeField(u32),
    /// `F_p[t]/(t^2 - non_residue)`.
    QuadraticExtension {
        p: u32,
        non_residue: u32,
    },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Euler's criterion; `p` must be an odd prime.
pub fn is_quadratic_residue(a: u64, p: u64) -> bool {
    let a = a % p;
    a == 0 || pow_mod(a, (p - 1) / 2, p) == 1
}

impl CoefficientField {
    /// `F_p`. Characteristic 2 is rejected: skew-symmetry and Pfaffian
    /// sign conventions need `2` invertible.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p == 2 {
            return Err(FieldError::CharacteristicTwo);
        }
        Ok(Self::PrimeField(p as u32))
    }

    /// `F_{p^2}` presented with the smallest quadratic non-residue.
    pub fn quadratic(p: u64) -> Result<Self, FieldError> {
        Self::prime(p)?;
        let r = (2..p)
            .find(|&r| !is_quadratic_residue(r, p))
            .expect("odd primes have non-residues");
        Self::quadratic_with(p, r)
    }

    pub fn quadratic_with(p: u64, non_residue: u64) -> Result<Self, FieldError> {
        Self::prime(p)?;
        let r = non_residue % p;
        if is_quadratic_residue(r, p) {
            return Err(FieldError::NotNonResidue { p, r: non_residue });
        }
        Ok(Self::QuadraticExtension {
            p: p as u32,
            non_residue: r as u32,
        })
    }

    /// `F_{p^e}` for `e` in {1, 2}.
    pub fn finite(p: u64, extension_degree: u32) -> Result<Self, FieldError> {
        match extension_degree {
            1 => Self::prime(p),
            2 => Self::quadratic(p),
            e => Err(FieldError::UnsupportedExtension(e)),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            Self::Rationals => 0,
            Self::PrimeField(p) => p as u64,
            Self::QuadraticExtension { p, .. } => p as u64,
        }
    }

    pub fn extension_degree(&self) -> u32 {
        match self {
            Self::QuadraticExtension { .. } => 2,
            _ => 1,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn size(&self) -> Option<u64> {
        match *self {
            Self::Rationals => None,
            Self::PrimeField(p) => Some(p as u64),
            Self::QuadraticExtension { p, .. } => Some(p as u64 * p as u64),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            Self::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            Self::PrimeField(p) => Scalar::Prime {
                value: reduce_bigint(n, p),
                p,
            },
            Self::QuadraticExtension { p, non_residue } => Scalar::Quadratic {
                re: reduce_bigint(n, p),
                im: 0,
                p,
                r: non_residue,
            },
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, FieldError> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        let inv = den.inverse().ok_or(FieldError::DivisionByZero)?;
        Ok(&num * &inv)
    }

    /// Element number `index` in the fixed enumeration of a finite field:
    /// `index = re + im * p`.
    pub fn element(&self, index: u64) -> Scalar {
        match *self {
            Self::Rationals => panic!("the rationals are not enumerable"),
            Self::PrimeField(p) => {
                assert!(index < p as u64);
                Scalar::Prime {
                    value: index as u32,
                    p,
                }
            }
            Self::QuadraticExtension { p, non_residue } => {
                let q = p as u64;
                assert!(index < q * q);
                Scalar::Quadratic {
                    re: (index % q) as u32,
                    im: (index / q) as u32,
                    p,
                    r: non_residue,
                }
            }
        }
    }

    /// Uniform element (rejection-sampled by `Rng::gen_range`). Over the
    /// rationals draws a small integer in `[-9, 9]`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self.size() {
            Some(q) => self.element(rng.gen_range(0..q)),
            None => self.from_i64(rng.gen_range(-9..=9)),
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Parse a coefficient string in this field: an integer, `a/b`, or
    /// `[re,im]` for quadratic extensions.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, FieldError> {
        let text = text.trim();
        let bad = || FieldError::BadScalar(text.to_string());
        if let Some(inner) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let Self::QuadraticExtension { p, non_residue } = *self else {
                return Err(bad());
            };
            let (re, im) = inner.split_once(',').ok_or_else(bad)?;
            let re = BigInt::from_str(re.trim()).map_err(|_| bad())?;
            let im = BigInt::from_str(im.trim()).map_err(|_| bad())?;
            return Ok(Scalar::Quadratic {
                re: reduce_bigint(&re, p),
                im: reduce_bigint(&im, p),
                p,
                r: non_residue,
            });
        }
        let q = if let Some((n, d)) = text.split_once('/') {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(FieldError::DivisionByZero);
            }
            BigRational::new(n, d)
        } else {
            BigRational::from_integer(BigInt::from_str(text).map_err(|_| bad())?)
        };
        self.from_rational(&q)
    }
}

fn reduce_bigint(n: &BigInt, p: u32) -> u32 {
    let m = BigInt::from(p);
    let mut r = n % &m;
    if r.is_negative() {
        r += &m;
    }
    r.to_u32().expect("residue fits in u32")
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Rationals => write!(f, "Q"),
            Self::PrimeField(p) => write!(f, "F_{p}"),
            Self::QuadraticExtension { p, non_residue } => {
                let canonical = (2..p as u64)
                    .find(|&r| !is_quadratic_residue(r, p as u64))
                    .map(|r| r as u32);
                if canonical == Some(non_residue) {
                    write!(f, "F_{p}^2")
                } else {
                    write!(f, "F_{p}^2/{non_residue}")
                }
            }
        }
    }
}

impl FromStr for CoefficientField {
    type Err = FieldError;

    /// Accepts `Q`, `F_p`, `F_p^1`, `F_p^2`, `F_p^2/r`, or a bare prime.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(Self::Rationals);
        }
        let bad = || FieldError::BadFieldName(s.to_string());
        let body = s.strip_prefix("F_").unwrap_or(s);
        let (p, rest) = match body.split_once('^') {
            Some((p, rest)) => (p, Some(rest)),
            None => (body, None),
        };
        let p: u64 = p.parse().map_err(|_| bad())?;
        match rest {
            None | Some("1") => Self::prime(p),
            Some("2") => Self::quadratic(p),
            Some(rest) => {
                let (e, r) = rest.split_once('/').ok_or_else(bad)?;
                if e != "2" {
                    return Err(bad());
                }
                Self::quadratic_with(p, r.parse().map_err(|_| bad())?)
            }
        }
    }
}

impl Serialize for CoefficientField {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CoefficientField {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime {
        value: u32,
        p: u32,
    },
    /// `re + im * t` with `t^2 = r`.
    Quadratic {
        re: u32,
        im: u32,
        p: u32,
        r: u32,
    },
}

impl Scalar {
    pub fn field(&self) -> CoefficientField {
        match *self {
            Self::Rational(_) => CoefficientField::Rationals,
            Self::Prime { p, .. } => CoefficientField::PrimeField(p),
            Self::Quadratic { p, r, .. } => {
                CoefficientField::QuadraticExtension { p, non_residue: r }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::Rational(q) => q.is_zero(),
            Self::Prime { value, .. } => *value == 0,
            Self::Quadratic { re, im, .. } => *re == 0 && *im == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Self::Rational(q) => q.is_one(),
            Self::Prime { value, .. } => *value == 1,
            Self::Quadratic { re, im, .. } => *re == 1 && *im == 0,
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match *self {
            Self::Rational(ref q) => Self::Rational(q.recip()),
            Self::Prime { value, p } => Self::Prime {
                value: pow_mod(value as u64, p as u64 - 2, p as u64) as u32,
                p,
            },
            Self::Quadratic { re, im, p, r } => {
                // (a + bt)^{-1} = (a - bt) / (a^2 - r b^2)
                let q = p as u64;
                let (a, b) = (re as u64, im as u64);
                let norm = (a * a % q + q - (r as u64) * (b * b % q) % q) % q;
                let inv = pow_mod(norm, q - 2, q);
                Self::Quadratic {
                    re: (a * inv % q) as u32,
                    im: ((q - b) % q * inv % q) as u32,
                    p,
                    r,
                }
            }
        })
    }

    pub fn pow(&self, mut exp: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Index of a finite-field element in the enumeration used by
    /// [`CoefficientField::element`].
    pub fn index(&self) -> Option<u64> {
        match *self {
            Self::Rational(_) => None,
            Self::Prime { value, .. } => Some(value as u64),
            Self::Quadratic { re, im, p, .. } => Some(re as u64 + im as u64 * p as u64),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Self::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// Multiply by the integer `n`, reduced in the field.
    pub fn scale_int(&self, n: u64) -> Scalar {
        self * &self.field().from_bigint(&BigInt::from(n))
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (&Scalar::Prime { value: a, p }, &Scalar::Prime { value: b, p: q }) if p == q => {
                Scalar::Prime {
                    value: ((a as u64 + b as u64) % p as u64) as u32,
                    p,
                }
            }
            (
                &Scalar::Quadratic { re: a, im: b, p, r },
                &Scalar::Quadratic {
                    re: c,
                    im: d,
                    p: q,
                    r: s,
                },
            ) if p == q && r == s => {
                let m = p as u64;
                Scalar::Quadratic {
                    re: ((a as u64 + c as u64) % m) as u32,
                    im: ((b as u64 + d as u64) % m) as u32,
                    p,
                    r,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match *self {
            Scalar::Rational(ref a) => Scalar::Rational(-a),
            Scalar::Prime { value, p } => Scalar::Prime {
                value: ((p - value) % p),
                p,
            },
            Scalar::Quadratic { re, im, p, r } => Scalar::Quadratic {
                re: (p - re) % p,
                im: (p - im) % p,
                p,
                r,
            },
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (&Scalar::Prime { value: a, p }, &Scalar::Prime { value: b, p: q }) if p == q => {
                Scalar::Prime {
                    value: ((a as u64 * b as u64) % p as u64) as u32,
                    p,
                }
            }
            (
                &Scalar::Quadratic { re: a, im: b, p, r },
                &Scalar::Quadratic {
                    re: c,
                    im: d,
                    p: q,
                    r: s,
                },
            ) if p == q && r == s => {
                let m = p as u64;
                let (a, b, c, d) = (a as u64, b as u64, c as u64, d as u64);
                Scalar::Quadratic {
                    re: ((a * c % m + (r as u64) * (b * d % m)) % m) as u32,
                    im: ((a * d + b * c) % m) as u32,
                    p,
                    r,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Self::Prime { value, .. } => write!(f, "{value}"),
            Self::Quadratic { re, im, .. } => {
                if *im == 0 {
                    write!(f, "{re}")
                } else {
                    write!(f, "[{re},{im}]")
                }
            }
        }
    }
}
