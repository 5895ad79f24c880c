use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("{r} is a quadratic residue mod {p}")]
    NotNonResidue { p: u64, r: u64 },
    #[error("extension degree {0} is not supported (use 1 or 2)")]
    UnsupportedExtension(u32),
    #[error("unrecognized field name {0:?}")]
    BadFieldName(String),
    #[error("unparsable coefficient {0:?}")]
    BadScalar(String),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PfaffianError {
    #[error("Pfaffian of an odd-size ({0}) matrix")]
    OddSize(usize),
    #[error("kernel vector needs an odd-size matrix, got size {0}")]
    EvenSize(usize),
    #[error("removing {removed} of {size} indices leaves an odd principal submatrix")]
    ParityError { size: usize, removed: usize },
    #[error("index set must be strictly increasing and below {size}")]
    BadIndexSet { size: usize },
    #[error("matrix of size {0} exceeds the supported maximum of 32")]
    TooLarge(usize),
    #[error("skew matrix entries must share one ring")]
    RingMismatch,
    #[error("malformed skew matrix: {0}")]
    Malformed(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SteinerError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("degenerate instance: {0}")]
    DegenerateInstance(String),
    #[error("embedding has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("unknown construction {0:?}")]
    UnknownKind(String),
    #[error(transparent)]
    Pfaffian(#[from] PfaffianError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("{quantity} is not an integer ({value}) for these parameters")]
    NonIntegralResult {
        quantity: &'static str,
        value: String,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("Gram identity fails: delta = {delta}, d*c2^2 - (c2.h^2)^2 = {gram}")]
    InconsistentFormula { delta: String, gram: String },
    #[error("Chern data not available for {0}")]
    UnsupportedKind(String),
    #[error("value {0} overflows a 64-bit integer")]
    Overflow(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SmoothError {
    #[error("scan of {points} candidate tuples exceeds the budget of {budget}")]
    BudgetExceeded { points: u128, budget: u128 },
    #[error("the zero polynomial has no singular-point search")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree {0} is too small for a singular-point search")]
    DegreeTooSmall(u32),
    #[error("field {0} is not supported for point scans")]
    UnsupportedField(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Crate-wide error for pipelines that cross module boundaries.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Pfaffian(#[from] PfaffianError),
    #[error(transparent)]
    Steiner(#[from] SteinerError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Smooth(#[from] SmoothError),
    #[error("no non-degenerate instance after {attempts} attempts: {last}")]
    RetriesExhausted { attempts: u32, last: String },
}
