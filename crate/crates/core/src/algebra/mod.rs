//! Exact arbitrary-precision polynomial and integer-matrix algebra.
//!
//! Everything here is over ℤ or ℚ: dense univariate polynomials, gcds and
//! resultants by subresultant remainder sequences, factorization over the
//! integers (squarefree split, Berlekamp mod p, Hensel lifting, subset
//! recombination), fraction-free determinants, and Smith normal form with
//! unimodular transforms.

mod factor;
mod intpoly;
mod matrix;
mod modp;
mod ratpoly;
mod snf;

pub use factor::{factor_integer_poly, IntFactorization};
pub use intpoly::IntPoly;
pub use matrix::IntMatrix;
pub use ratpoly::RatPoly;
pub use snf::{integer_kernel_basis, integer_solve, smith_normal_form, snf_full, SnfFull, SnfResult};

use thiserror::Error;

/// Errors from the exact-algebra layer.
#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("matrix dimensions mismatch: {0}")]
    DimensionMismatch(String),
}
