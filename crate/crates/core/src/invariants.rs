//! Closed-form numerics for instantons, the surfaces they cut out, Pfaffian
//! lattices and Ulrich moduli.
//!
//! Everything is evaluated over `BigRational` and converted to `i64` only
//! at the boundary, where a non-integral value is an error rather than
//! being rounded.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::InvariantError;
use crate::steiner::SteinerKind;

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn poly_eval(coeffs: &[Q], x: &Q) -> Q {
    coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

fn to_i64(quantity: &'static str, v: &Q) -> Result<i64, InvariantError> {
    if !v.is_integer() {
        return Err(InvariantError::NonIntegralResult {
            quantity,
            value: v.to_string(),
        });
    }
    v.to_integer()
        .to_i64()
        .ok_or_else(|| InvariantError::Overflow(v.to_string()))
}

fn big_to_i64(v: &BigInt) -> Result<i64, InvariantError> {
    v.to_i64()
        .ok_or_else(|| InvariantError::Overflow(v.to_string()))
}

/// `C(m, n)` as a polynomial in `m`, so negative `m` is allowed.
pub fn binomial(m: i64, n: u32) -> Q {
    let mut num = Q::one();
    for i in 0..n as i64 {
        num = num * q(m - i) / q(i + 1);
    }
    num
}

/// A smooth hypersurface of degree `d` in `P^N`, of dimension `n = N - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypersurfaceParams {
    pub ambient_dim: i64,
    pub degree: i64,
}

impl HypersurfaceParams {
    pub fn new(ambient_dim: i64, degree: i64) -> Result<Self, InvariantError> {
        if degree < 2 {
            return Err(InvariantError::InvalidParameter(format!(
                "degree {degree} < 2"
            )));
        }
        if ambient_dim < 4 {
            return Err(InvariantError::InvalidParameter(format!(
                "ambient dimension {ambient_dim} < 4"
            )));
        }
        Ok(Self {
            ambient_dim,
            degree,
        })
    }

    /// A fourfold of degree `d` in `P^5`.
    pub fn fourfold(degree: i64) -> Result<Self, InvariantError> {
        Self::new(5, degree)
    }

    pub fn dim(&self) -> i64 {
        self.ambient_dim - 1
    }

    /// `c1(T_X) = (N + 1 - d) h`.
    pub fn c1_tangent(&self) -> i64 {
        self.ambient_dim + 1 - self.degree
    }

    /// `c2(T_X) = (C(N+1, 2) - d(N+1) + d^2) h^2`.
    pub fn c2_tangent(&self) -> i64 {
        let n1 = self.ambient_dim + 1;
        n1 * (n1 - 1) / 2 - self.degree * n1 + self.degree * self.degree
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstantonNumerics {
    pub rank: i64,
    pub charge: i64,
    pub twist: i64,
}

/// Coefficient of `h` in `c1` of an instanton of rank `r` on a hypersurface
/// of degree `d`.
pub fn instanton_c1(r: i64, d: i64) -> Q {
    frac(r * (d - 1), 2)
}

/// `chi(E(t))` for an instanton of rank `r` and charge `k` on an
/// `n`-dimensional hypersurface of degree `d` (so `h^n = d`).
pub fn chi_twist(r: i64, k: i64, n: i64, d: i64, t: i64) -> Result<i64, InvariantError> {
    let n_u = u32::try_from(n).map_err(|_| InvariantError::InvalidParameter(format!("n = {n}")))?;
    let v = q(r * d + 2 * k) * binomial(t + n, n_u)
        - q(k) * binomial(t + n + 1, n_u)
        - q(k) * binomial(t + n - 1, n_u);
    to_i64("chi(E(t))", &v)
}

/// `c2(E) . h^{n-2}` from the instanton Chern identity, with `h^n = d`.
pub fn instanton_c2_h2(r: i64, k: i64, x: &HypersurfaceParams) -> Q {
    let d = q(x.degree);
    let n = x.dim();
    let c1 = instanton_c1(r, x.degree);
    let c1x = q(x.c1_tangent());
    let c2x = q(x.c2_tangent());
    let top = frac((3 * n + 2) * (n + 1), 2);
    q(k) + frac(1, 2) * &c1 * (&c1 + &c1x) * &d + frac(r, 12) * (&c1x * &c1x + c2x - top) * d
}

/// Degree of the zero locus of a section of `E(s)`, for rank 2, computed
/// from `c2(E(s)) = c2 + s c1 + s^2`.
pub fn degree_via_chern(x: &HypersurfaceParams, s: i64, k: i64) -> Result<i64, InvariantError> {
    let d = q(x.degree);
    let c1 = instanton_c1(2, x.degree);
    let v = instanton_c2_h2(2, k, x) + q(s) * c1 * &d + q(s * s) * d;
    to_i64("deg Y", &v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub deg_y: i64,
    pub chi_o_y: i64,
    pub y_squared: i64,
    /// `omega_Y = O_Y(canonical_twist)`.
    pub canonical_twist: i64,
}

/// Invariants of the surface `Y` cut by a section of `E(s)`, `E` a rank-2
/// instanton of charge `k` on a fourfold of degree `d`.
pub fn surface_invariants(d: i64, s: i64, k: i64) -> Result<SurfaceInvariants, InvariantError> {
    if d < 2 {
        return Err(InvariantError::InvalidParameter(format!("degree {d} < 2")));
    }
    if s < 0 || k < 0 {
        return Err(InvariantError::InvalidParameter(format!(
            "s = {s}, k = {k} must be >= 0"
        )));
    }
    let (dq, sq, kq) = (q(d), q(s), q(k));

    let deg = poly_eval(
        &[
            &dq / q(6) * q(2 * d * d - 3 * d + 1) + &kq,
            q(d * (d - 1)),
            dq.clone(),
        ],
        &sq,
    );

    let chi = poly_eval(
        &[
            &dq / q(120) * poly_eval(&[q(118), q(-425), q(460), q(-175), q(22)], &dq),
            &dq / q(12) * poly_eval(&[q(-78), q(137), q(-70), q(11)], &dq),
            &dq / q(12) * poly_eval(&[q(115), q(-102), q(22)], &dq),
            &dq / q(6) * q(10 * d - 25),
            frac(7, 12) * &dq,
        ],
        &sq,
    ) + frac(1, 2) * &kq * poly_eval(&[q(d * d - 7 * d + 12), q(2 * d - 7), q(1)], &sq);

    let self_int = poly_eval(
        &[
            &dq / q(30) * poly_eval(&[q(1), q(-5), q(10), q(-10), q(4)], &dq),
            &dq / q(3) * poly_eval(&[q(-1), q(4), q(-5), q(2)], &dq),
            &dq / q(3) * poly_eval(&[q(4), q(-9), q(5)], &dq),
            q(2 * d * (d - 1)),
            dq.clone(),
        ],
        &sq,
    ) + &kq * poly_eval(&[q(d * d - d - 1), q(2 * (d - 1)), q(2)], &sq);

    Ok(SurfaceInvariants {
        deg_y: to_i64("deg Y", &deg)?,
        chi_o_y: to_i64("chi(O_Y)", &chi)?,
        y_squared: to_i64("Y^2", &self_int)?,
        canonical_twist: 2 * d + 2 * s - 7,
    })
}

/// Where a discriminant value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeltaSource {
    Gram,
    ChargePolynomial,
    PfaffianFormula,
    Ulrich,
}

/// The lattice spanned by `h^2` and `Y`, with `h^4 = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub d: i64,
    pub h2y: i64,
    pub y2: i64,
    pub delta: i64,
    pub source: DeltaSource,
}

impl LatticeReport {
    pub fn from_gram(d: i64, h2y: i64, y2: i64) -> Result<Self, InvariantError> {
        let delta = BigInt::from(d) * y2 - BigInt::from(h2y) * h2y;
        Ok(Self {
            d,
            h2y,
            y2,
            delta: big_to_i64(&delta)?,
            source: DeltaSource::Gram,
        })
    }

    /// The lattice of the surface at `s = k`.
    pub fn of_surface(d: i64, k: i64) -> Result<Self, InvariantError> {
        let inv = surface_invariants(d, k, k)?;
        Self::from_gram(d, inv.deg_y, inv.y_squared)
    }
}

/// `4d^6 - 5d^4 + d^2 + 60d(d^2-4)k - 180k^2`, which is `180` times the
/// Gram discriminant at `s = k`.
pub fn charge_discriminant(d: i64, k: i64) -> BigInt {
    charge_discriminant_big(&BigInt::from(d), &BigInt::from(k))
}

/// Largest `k >= 0` with `charge_discriminant(d, k) >= 0`.
pub fn charge_bound(d: i64) -> Result<i64, InvariantError> {
    if d < 2 {
        return Err(InvariantError::InvalidParameter(format!("degree {d} < 2")));
    }
    let db = BigInt::from(d);
    let d2: BigInt = &db * &db;
    // larger root of 180k^2 - Bk - C: (B + sqrt(B^2 + 720 C)) / 360
    let b: BigInt = BigInt::from(60) * &db * (&d2 - BigInt::from(4));
    let c: BigInt = BigInt::from(4) * &d2 * &d2 * &d2 - BigInt::from(5) * &d2 * &d2 + &d2;
    let disc: BigInt = &b * &b + BigInt::from(720) * c;
    let root: BigInt = disc.sqrt();
    let mut k: BigInt = ((&b + root) / BigInt::from(360)).max(BigInt::zero());
    while !charge_discriminant_big(&db, &(&k + 1)).is_negative() {
        k += 1;
    }
    while k.is_positive() && charge_discriminant_big(&db, &k).is_negative() {
        k -= 1;
    }
    big_to_i64(&k)
}

fn charge_discriminant_big(d: &BigInt, k: &BigInt) -> BigInt {
    let d2 = d * d;
    let d4 = &d2 * &d2;
    BigInt::from(4) * &d4 * &d2 - BigInt::from(5) * &d4
        + &d2
        + BigInt::from(60) * d * (&d2 - BigInt::from(4)) * k
        - BigInt::from(180) * k * k
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CiCheck {
    /// `(3k^2 + 7k + 5) / 3`, as `"p"` or `"p/q"`.
    pub lambda: String,
    pub lambda_is_integral: bool,
    /// `-k^2 + 5k + 14 = 0`.
    pub is_ci_compatible: bool,
}

/// Whether `Y` on a cubic fourfold could be homologous to `lambda h^2`.
pub fn ci_class_check(k: i64) -> CiCheck {
    let lambda = frac(3 * k * k + 7 * k + 5, 3);
    CiCheck {
        lambda: lambda.to_string(),
        lambda_is_integral: lambda.is_integer(),
        is_ci_compatible: -k * k + 5 * k + 14 == 0,
    }
}

/// A Pfaffian hypersurface of type `(F^vee, l)`: `F` has rank `2r` and
/// `c_i(F) = e_i h^i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfaffianTypeParams {
    pub half_rank: i64,
    pub twist: i64,
    pub chern: [i64; 5],
    pub degree: i64,
}

impl PfaffianTypeParams {
    /// Degree from the first Chern class: `d = r l - e1`.
    pub fn with_expected_degree(half_rank: i64, twist: i64, chern: [i64; 5]) -> Self {
        Self {
            half_rank,
            twist,
            chern,
            degree: half_rank * twist - chern[0],
        }
    }

    /// The trivial bundle of rank `2d` with `l = 1`.
    pub fn linear(d: i64) -> Self {
        Self::with_expected_degree(d, 1, [0; 5])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfaffianDiscriminant {
    pub c2_h2: i64,
    pub c2_sq: i64,
    pub delta: i64,
}

/// Discriminant of the lattice spanned by `h^2` and `c2(E)` on a Pfaffian
/// fourfold of type `(F^vee, l)`.
pub fn pfaffian_discriminant(
    p: &PfaffianTypeParams,
) -> Result<PfaffianDiscriminant, InvariantError> {
    let (c2h2, c2sq, delta) = pfaffian_discriminant_raw(p);
    let gram = q(p.degree) * &c2sq - &c2h2 * &c2h2;
    if gram != delta {
        return Err(InvariantError::InconsistentFormula {
            delta: delta.to_string(),
            gram: gram.to_string(),
        });
    }
    Ok(PfaffianDiscriminant {
        c2_h2: to_i64("c2.h^2", &c2h2)?,
        c2_sq: to_i64("c2^2", &c2sq)?,
        delta: to_i64("delta", &delta)?,
    })
}

/// The three sums, unchecked.
pub fn pfaffian_discriminant_raw(p: &PfaffianTypeParams) -> (Q, Q, Q) {
    let (r, l, d) = (q(p.half_rank), q(p.twist), q(p.degree));
    let e = |i: usize| q(p.chern[i - 1]);
    let l2 = &l * &l;
    let l3 = &l2 * &l;
    let l4 = &l3 * &l;
    let l5 = &l4 * &l;
    let l6 = &l5 * &l;
    let rr = &r * (&r - q(1));
    let r2m1 = q(2) * &r - q(1);

    let u = [&rr * &r2m1 * &l3 / q(6), -&rr * &l2, (&r - q(1)) * &l];
    let c2h2 = poly_eval(&u, &d) + (&d + &l - &l * &r) * e(2) + e(3);

    let v = [
        -(&rr * &r2m1 * (q(3) * &r * &r - q(3) * &r - q(1)) * &l5) / q(30),
        &rr * (q(6) * &r * &r - q(8) * &r + q(1)) * &l4 / q(6),
        -(&rr * (q(10) * &r - q(11)) * &l3) / q(6),
        (&r - q(1)) * (&r - q(1)) * &l2,
    ];
    let w2 = (q(2) * &d * &d * (&r - q(1)) - &d * (&r - q(1)) * (q(3) * &r - q(2)) * &l
        + &r * (&r - q(1)) * (&r - q(1)) * &l2)
        * &l;
    let w3 = ((q(2) * &r - q(3)) * &d - (&r - q(1)) * (&r - q(1)) * &l) * &l;
    let w4 = &l * &r - &d - q(2) * &l;
    let w5 = q(-1);
    let w22 = -(&l * &r) + &d + &l;
    let w23 = q(1);
    let c2sq = poly_eval(&v, &d)
        + w2 * e(2)
        + w3 * e(3)
        + w4 * e(4)
        + w5 * e(5)
        + w22 * e(2) * e(2)
        + w23 * e(2) * e(3);

    let a = [
        -(&r * &r * (&r - q(1)) * (&r - q(1)) * &r2m1 * &r2m1 * &l6) / q(36),
        &rr * &r2m1 * (q(7) * &r * &r - q(7) * &r + q(1)) * &l5 / q(30),
        -(&rr * &r2m1 * &r2m1 * &l4) / q(6),
        &rr * &r2m1 * &l3 / q(6),
    ];
    let b2 = &rr * (&l * &r - &d - &l) * (q(2) * &l * &r - q(3) * &d - &l) * &l2 / q(3);
    let b3 = -(&rr * &r2m1 * &l3 + q(3) * &d * (&d + &l - &l * &r * &r) * &l) / q(3);
    let b4 = &d * (&l * &r - &d - q(2) * &l);
    let b5 = -d.clone();
    let b22 = -((&r - q(1)) * (&l * &r - &d - &l) * &l);
    let b23 = q(2) * &l * &r - &d - q(2) * &l;
    let b33 = q(-1);
    let delta = poly_eval(&a, &d)
        + b2 * e(2)
        + b3 * e(3)
        + b4 * e(4)
        + b5 * e(5)
        + b22 * e(2) * e(2)
        + b23 * e(2) * e(3)
        + b33 * e(3) * e(3);

    (c2h2, c2sq, delta)
}

/// `d^2 (d^2 - 1)(4d^2 - 1) / 180`.
pub fn linear_pfaffian_delta(d: i64) -> Result<i64, InvariantError> {
    let v = frac(d * d * (d * d - 1) * (4 * d * d - 1), 180);
    to_i64("delta", &v)
}

/// Total Chern class truncated at `h^6`, as coefficients of `1, h, ..., h^5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernSeries {
    pub rank: i64,
    pub coeffs: [BigInt; 6],
}

impl ChernSeries {
    pub fn trivial(rank: i64) -> Self {
        let mut coeffs: [BigInt; 6] = Default::default();
        coeffs[0] = BigInt::one();
        Self { rank, coeffs }
    }

    /// `c(T_{P^5}) = (1 + h)^6` mod `h^6`.
    pub fn tangent_p5() -> Self {
        let mut coeffs: [BigInt; 6] = Default::default();
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = binomial(6, i as u32).to_integer();
        }
        Self { rank: 5, coeffs }
    }

    /// Whitney sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut coeffs: [BigInt; 6] = Default::default();
        for i in 0..6 {
            for j in 0..6 - i {
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        Self {
            rank: self.rank + other.rank,
            coeffs,
        }
    }

    /// Twist by `O(t)`: `c_k(E(t)) = sum_i C(rank - i, k - i) c_i(E) t^{k-i}`.
    pub fn twist(&self, t: i64) -> Self {
        let mut coeffs: [BigInt; 6] = Default::default();
        for (k, out) in coeffs.iter_mut().enumerate() {
            for i in 0..=k {
                let c = binomial(self.rank - i as i64, (k - i) as u32).to_integer();
                *out += c * &self.coeffs[i] * BigInt::from(t).pow((k - i) as u32);
            }
        }
        Self {
            rank: self.rank,
            coeffs,
        }
    }

    pub fn e_vector(&self) -> Result<[i64; 5], InvariantError> {
        let mut e = [0; 5];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = big_to_i64(&self.coeffs[i + 1])?;
        }
        Ok(e)
    }
}

/// Chern series of the bundle `F` behind a kind, on `P^5`.
pub fn steiner_bundle(kind: SteinerKind) -> Result<ChernSeries, InvariantError> {
    let t_minus_1 = ChernSeries::tangent_p5().twist(-1);
    match kind {
        SteinerKind::LinearPfaffian { degree } => Ok(ChernSeries::trivial(2 * degree as i64)),
        SteinerKind::CobleRestriction => Ok(ChernSeries::trivial(3).direct_sum(&t_minus_1)),
        SteinerKind::TwoTangent => Ok(t_minus_1.direct_sum(&t_minus_1)),
        SteinerKind::CobleFull => Err(InvariantError::UnsupportedKind(
            "coble-full (lives on P^8)".into(),
        )),
    }
}

/// `(e1, ..., e5)` with `c_i(F) = e_i h^i`.
pub fn chern_of_steiner(kind: SteinerKind) -> Result<[i64; 5], InvariantError> {
    steiner_bundle(kind)?.e_vector()
}

/// Pfaffian type of a kind with `l = 1`.
pub fn steiner_type_params(kind: SteinerKind) -> Result<PfaffianTypeParams, InvariantError> {
    let bundle = steiner_bundle(kind)?;
    Ok(PfaffianTypeParams::with_expected_degree(
        bundle.rank / 2,
        1,
        bundle.e_vector()?,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UlrichNumerics {
    pub r: i64,
    pub a: i64,
    /// Dimension of the moduli space, `2 + r^2(3r^2 - 2r + 3)/4 - a`.
    pub m: String,
    /// `-r^2(3r - 1)^2/4 + 3a`.
    pub delta: String,
    /// Coefficient `r(r+1)(r-2)/6` of `c3`.
    pub c3_coefficient: String,
    /// `(6a - 3r(r^3 + 4r - 3)) / 12`.
    pub c4: String,
    pub c4_is_integral: bool,
}

struct UlrichValues {
    m: Q,
    delta: Q,
    c3: Q,
    c4: Q,
}

fn ulrich_values(r: i64, a: i64) -> UlrichValues {
    let (rq, aq) = (q(r), q(a));
    let r2 = &rq * &rq;
    UlrichValues {
        m: q(2) + &r2 * q(3 * r * r - 2 * r + 3) / q(4) - &aq,
        delta: -(&r2 * q((3 * r - 1) * (3 * r - 1))) / q(4) + q(3) * &aq,
        c3: q(r * (r + 1) * (r - 2)) / q(6),
        c4: (q(6) * aq - q(3 * r * (r * r * r + 4 * r - 3))) / q(12),
    }
}

/// Numerics of a rank-`r` Ulrich bundle on a cubic fourfold with
/// `c2(U)^2 = a`.
pub fn ulrich_numerics(r: i64, a: i64) -> Result<UlrichNumerics, InvariantError> {
    if r < 1 {
        return Err(InvariantError::InvalidParameter(format!("rank {r} < 1")));
    }
    let v = ulrich_values(r, a);
    Ok(UlrichNumerics {
        r,
        a,
        m: v.m.to_string(),
        delta: v.delta.to_string(),
        c3_coefficient: v.c3.to_string(),
        c4_is_integral: v.c4.is_integer(),
        c4: v.c4.to_string(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Entry {
    pub r: i64,
    pub delta: i64,
    pub m: i64,
}

/// Admissible `(r, delta, m)` for the given rank: `m >= 0`, `delta >= 8`,
/// `c4` integral, and `c4 = 0` when `r < 4`.
pub fn table1_row(r: i64) -> Result<Vec<Table1Entry>, InvariantError> {
    if r < 1 {
        return Err(InvariantError::InvalidParameter(format!("rank {r} < 1")));
    }
    // delta >= 8 and m >= 0 bracket a
    let lo = (q(8) + q(r * r * (3 * r - 1) * (3 * r - 1)) / q(4)) / q(3);
    let hi = q(2) + q(r * r * (3 * r * r - 2 * r + 3)) / q(4);
    let lo = to_i64("lower bound", &lo.ceil())?;
    let hi = to_i64("upper bound", &hi.floor())?;
    let mut out = Vec::new();
    for a in lo..=hi {
        let v = ulrich_values(r, a);
        if !v.c4.is_integer() || (r < 4 && !v.c4.is_zero()) {
            continue;
        }
        if v.m.is_negative() || v.delta < q(8) {
            continue;
        }
        out.push(Table1Entry {
            r,
            delta: to_i64("delta", &v.delta)?,
            m: to_i64("m", &v.m)?,
        });
    }
    out.sort_by_key(|e| e.delta);
    Ok(out)
}

/// All admissible `(r, delta, m)` cells for `r = 2..=5`.
pub fn enumerate_table1() -> Vec<Table1Entry> {
    (2..=5)
        .flat_map(|r| table1_row(r).expect("small ranks stay in range"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Row {
    pub k: i64,
    pub delta: i64,
    pub h2y: i64,
    pub y2: i64,
}

/// `(k, delta, h^2 Y, Y^2)` on a cubic fourfold at `s = k`, `k = 0..=7`.
pub fn table2() -> Vec<Table2Row> {
    (0..=7)
        .map(|k| {
            let lat = LatticeReport::of_surface(3, k).expect("cubic parameters are valid");
            Table2Row {
                k,
                delta: lat.delta,
                h2y: lat.h2y,
                y2: lat.y2,
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusDimension {
    /// Skew `2d x 2d` matrices of linear forms in 6 variables, `12d^2 - 6d`.
    pub matrix_space: i64,
    /// Linear Pfaffians of degree `d`, `8d^2 - 6d`.
    pub locus: i64,
    /// All degree-`d` hypersurfaces in `P^5`, `C(d+5, 5) - 1`.
    pub hypersurfaces: i64,
}

pub fn pfaffian_locus_dimension(d: i64) -> Result<LocusDimension, InvariantError> {
    if d < 3 {
        return Err(InvariantError::InvalidParameter(format!("degree {d} < 3")));
    }
    Ok(LocusDimension {
        matrix_space: 12 * d * d - 6 * d,
        locus: 8 * d * d - 6 * d,
        hypersurfaces: to_i64("C(d+5,5)", &binomial(d + 5, 5))? - 1,
    })
}
