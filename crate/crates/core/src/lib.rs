//! Exact spectral analysis of continuous-time quantum walks.
//!
//! A graph's adjacency matrix A generates the walk U(t) = exp(itA). The
//! eigenvalues of A are usually irrational, so this crate does all of its
//! spectral reasoning in the splitting field of the minimal polynomial of A,
//! with arbitrary-precision integer and rational arithmetic throughout:
//!
//! - [`algebra`]: integer/rational polynomials, factorization over ℤ,
//!   resultants, Smith normal form, integer kernels.
//! - [`field`]: number fields ℚ\[α\] with certified real embeddings,
//!   factorization over extension fields, splitting-field construction.
//! - [`spectra`]: characteristic polynomials, exact spectral idempotents,
//!   strong cospectrality.
//! - [`walk`]: average mixing matrix, pretty good state transfer decision,
//!   frequency bases, rotational symmetry, even moments, supremum bounds.
//! - [`geometry`]: sampling of walk-entry curves, torus-grid images,
//!   caustics, hypocycloids, CSV/SVG emission.

pub mod algebra;
pub mod field;
pub mod geometry;
pub mod spectra;
pub mod walk;

pub use num_bigint;
pub use num_integer;
pub use num_rational;

pub use algebra::{IntMatrix, IntPoly, RatPoly, SnfResult};
pub use field::{AlgebraicNumber, NumberField, SplittingData};
pub use spectra::{Graph, PairDecomposition, SpectralDecomposition};
pub use walk::{AverageMixingMatrix, FrequencyBasis, PgstVerdict};
