//! Exact root subgroup factorization for the classical complex groups.
//!
//! Given a reduced word for the longest Weyl group element, a product of
//! embedded `SL(2)` blocks `g(ζ) = [[1, ζ⁺], [ζ⁻, 1 + ζ⁻ζ⁺]]` lands in the big
//! cell `N⁻HN⁺`. This crate computes that forward map, its rational inverse,
//! Jacobian and Haar densities, and the reduced-word combinatorics behind it,
//! all over exact Gaussian rationals.

// elimination loops index several rows at once
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod dual;
pub mod error;
pub mod factor;
pub mod field;
pub mod haar;
pub mod json;
pub mod matrep;
pub mod matrix;
pub mod modp;
pub mod rootsys;
pub mod scalar;
pub mod series;
pub mod surd;
pub mod weyl;

pub use error::{Error, Result};
pub use field::Field;
pub use matrix::Matrix;
pub use rootsys::{Family, Root, RootSystem};
pub use scalar::Scalar;
