//! Exact spectral data of graphs: characteristic polynomials, spectral
//! idempotents over the splitting field, vertex-pair decompositions, and
//! the strong-cospectrality test.

mod charpoly;
mod decomp;
mod graph;
mod pair;

pub use charpoly::char_poly;
pub use decomp::{spectral_decomposition, SpectralDecomposition};
pub use graph::Graph;
pub use pair::{pair_minpolys, strong_cospectrality, strong_cospectrality_with, PairDecomposition};

use thiserror::Error;

use crate::algebra::{AlgebraError, IntPoly};
use crate::field::FieldError;

#[derive(Debug, Error)]
pub enum SpectraError {
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("operation requires two distinct vertices")]
    SameVertex,
    #[error("self-loops are not allowed")]
    SelfLoop,
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Characteristic polynomials of the one- and two-vertex-deleted subgraphs:
/// (φ_{G\a}, φ_{G\b}, φ_{G\ab}).
pub fn deleted_char_polys(
    g: &Graph,
    a: usize,
    b: usize,
) -> Result<(IntPoly, IntPoly, IntPoly), SpectraError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(SpectraError::SameVertex);
    }
    let ga = char_poly(&g.delete_vertices(&[a]));
    let gb = char_poly(&g.delete_vertices(&[b]));
    let gab = char_poly(&g.delete_vertices(&[a, b]));
    Ok((ga, gb, gab))
}

/// The polynomial φ_ab with φ_ab² = φ_{G\a}·φ_{G\b} − φ_G·φ_{G\ab}.
///
/// The square root exists for every graph; a failure indicates corrupted
/// input and is reported as an internal consistency error.
pub fn phi_ab_poly(g: &Graph, a: usize, b: usize) -> Result<IntPoly, SpectraError> {
    let (ga, gb, gab) = deleted_char_polys(g, a, b)?;
    let phi = char_poly(g);
    let expr = &(&ga * &gb) - &(&phi * &gab);
    let root = expr
        .to_rat()
        .square_root()
        .ok_or_else(|| SpectraError::Internal("deleted-polynomial expression is not a perfect square".into()))?;
    root.to_int()
        .ok_or_else(|| SpectraError::Internal("polynomial square root is not integral".into()))
}
