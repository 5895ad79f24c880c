//! Exact-arithmetic kernels for Pfaffian and Steiner-Pfaffian hypersurfaces.
//!
//! - [`field`], [`poly`]: coefficient fields and sparse polynomials.
//! - [`pfaffian`]: memoized Pfaffians, sub-Pfaffians and kernel vectors.
//! - [`steiner`]: skew presentations built from alternating 3-forms, cubic
//!   extraction, and the registry of constructions selectable by name.
//! - [`invariants`]: closed-form surface, lattice and Ulrich numerics.
//! - [`smooth`]: finite-field point enumeration and singular-point search.
//! - [`forge`]: seeded instance generation tying the above together.

pub mod error;
pub mod field;
pub mod forge;
pub mod invariants;
pub mod pfaffian;
pub mod poly;
pub mod rng;
pub mod smooth;
pub mod steiner;
pub mod tables;

pub use error::Error;
pub use field::{CoefficientField, Scalar};
pub use pfaffian::{kernel_vector, pfaffian, sub_pfaffian, SkewMatrix};
pub use poly::{Monomial, Polynomial};
