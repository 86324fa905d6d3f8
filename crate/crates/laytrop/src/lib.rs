//! Exact-arithmetic kernel for layered (and standard supertropical)
//! max-plus algebra: scalars graded by a sorting semiring over an ordered
//! rational value monoid, with polynomial, matrix, linear-algebra,
//! bilinear-form, polynomial-identity, and valuation layers.
//!
//! Everything is computed exactly over arbitrary-precision rationals.
//! The `parallel` feature (on by default) runs the permutation
//! enumerations, grid searches, and sampling verdicts on rayon; the
//! sequential fallback produces bit-identical results because every
//! reduction in the crate is exactly commutative and associative.

pub mod error;
pub mod identities;
pub mod json;
pub mod linalg;
pub mod matrix;
pub mod par;
pub mod poly;
pub mod puiseux;
pub mod rat;
pub mod sample;
pub mod scalar;
pub mod semiring;

pub use error::{Error, Result};
pub use rat::Rat;
pub use scalar::{ExplodedScalar, LayeredScalar};
pub use semiring::{SortLayer, SortSemiring};
