//! Walk-level analysis: average mixing matrix, frequency bases, pretty
//! good state transfer decision, rotational symmetry, even moments, and
//! supremum bounds for transfer probability.

mod classify;
mod freq;
mod moments;
mod pgst;

pub use classify::{classify_entry, Classification, EntryClass};
pub use freq::{
    frequency_basis, frequency_basis_for_pair, rotation_symmetry_order, FrequencyBasis,
    RotationOrder,
};
pub use moments::{even_moment, supremum_estimate, MomentConfig, SupBound};
pub use pgst::{decide_pgst, pgst_kernel, witness_checks, PgstResult, PgstVerdict, PgstWitness};

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::field::{AlgebraicNumber, FieldError};
use crate::spectra::{spectral_decomposition, Graph, SpectralDecomposition, SpectraError};

#[derive(Debug, Error)]
pub enum WalkError {
    #[error("eigenvalues must be pairwise distinct")]
    RepeatedEigenvalues,
    #[error("eigenvalues must live in one field")]
    MixedFields,
    #[error("enumeration bound {needed} exceeds the work ceiling {ceiling}")]
    ResourceExceeded { needed: u128, ceiling: u64 },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The time-averaged mixing matrix Σ_r E_r ∘ E_r: exact, symmetric, doubly
/// stochastic rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AverageMixingMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl AverageMixingMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, a: usize, b: usize) -> &BigRational {
        &self.entries[a * self.n + b]
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.entry(a, b).clone()).collect())
            .collect()
    }
}

/// Exact average mixing matrix from a spectral decomposition. Each entry is
/// Σ_r ⟨a|E_r|b⟩², computed in the splitting field; a nonzero irrational
/// residue is impossible and reported as an internal error.
pub fn average_mixing_matrix_with(
    sd: &SpectralDecomposition,
) -> Result<AverageMixingMatrix, WalkError> {
    let n = sd.graph().n();
    let field = sd.field().clone();
    let mut entries = vec![BigRational::zero(); n * n];
    for a in 0..n {
        for b in a..n {
            let mut sum = AlgebraicNumber::zero(field.clone());
            for r in 0..sd.num_eigenvalues() {
                let e = sd.projector_entry(r, a, b);
                sum = &sum + &(e * e);
            }
            let q = sum.as_rational().ok_or_else(|| {
                WalkError::Internal("average mixing entry has irrational residue".into())
            })?;
            entries[a * n + b] = q.clone();
            entries[b * n + a] = q;
        }
    }
    let amm = AverageMixingMatrix { n, entries };
    debug_assert!(is_doubly_stochastic(&amm));
    Ok(amm)
}

/// Exact average mixing matrix of a graph.
pub fn average_mixing_matrix(g: &Graph) -> Result<AverageMixingMatrix, WalkError> {
    let sd = spectral_decomposition(g)?;
    average_mixing_matrix_with(&sd)
}

fn is_doubly_stochastic(amm: &AverageMixingMatrix) -> bool {
    (0..amm.n()).all(|a| {
        (0..amm.n())
            .map(|b| amm.entry(a, b).clone())
            .sum::<BigRational>()
            .is_one()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn p2_amm_all_halves() {
        let amm = average_mixing_matrix(&Graph::path(2)).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(*amm.entry(a, b), rat(1, 2));
            }
        }
    }

    #[test]
    fn c5_amm_exact() {
        let amm = average_mixing_matrix(&Graph::cycle(5)).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                let expect = if a == b { rat(9, 25) } else { rat(4, 25) };
                assert_eq!(*amm.entry(a, b), expect);
            }
        }
    }

    #[test]
    fn amm_symmetric_doubly_stochastic() {
        for g in [
            Graph::path(4),
            Graph::k4_minus_edge(),
            Graph::cycle(6),
            Graph::complete(4),
        ] {
            let amm = average_mixing_matrix(&g).unwrap();
            for a in 0..g.n() {
                let row_sum: BigRational =
                    (0..g.n()).map(|b| amm.entry(a, b).clone()).sum();
                assert!(row_sum.is_one());
                for b in 0..g.n() {
                    assert_eq!(amm.entry(a, b), amm.entry(b, a));
                    assert!(!amm.entry(a, b).is_negative());
                }
                assert!(amm.entry(a, a).is_positive());
            }
        }
    }
}
