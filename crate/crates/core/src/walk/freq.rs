//! Frequency basis of a set of eigenvalues and rotational symmetry of the
//! associated torus closure.
//!
//! Writing the coordinate vectors of the eigenvalues as the columns of a
//! rational matrix P and clearing denominators to M = mP, the Smith normal
//! form U·M·V = S yields: rationally independent reals w₁..w_k (nonzero
//! columns of m⁻¹U⁻¹S), integer coordinates θ_r = Σ_ℓ f^r_ℓ w_ℓ (first k
//! rows of V⁻¹), and a basis of the integer relation lattice
//! {c : Σ c_r θ_r = 0} (trailing columns of V).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{snf_full, IntMatrix, RatPoly};
use crate::field::{AlgebraicNumber, NumberField};
use crate::spectra::SpectralDecomposition;

use super::WalkError;

/// Rationally independent frequencies w₁..w_k expressing a set of
/// eigenvalues integrally, together with the relation lattice.
#[derive(Clone, Debug)]
pub struct FrequencyBasis {
    /// Eigenvalue indices this basis describes (into the originating
    /// spectral decomposition), or 0..d for a free-standing basis.
    pub support: Vec<usize>,
    /// The rationally independent frequencies.
    pub w: Vec<AlgebraicNumber>,
    /// Row r gives the integer coordinates of the r-th supported eigenvalue.
    pub f: Vec<Vec<BigInt>>,
    /// Basis of the integer lattice of relations Σ c_r θ_r = 0.
    pub relations: Vec<Vec<BigInt>>,
}

impl FrequencyBasis {
    /// Torus dimension k.
    pub fn dimension(&self) -> usize {
        self.w.len()
    }
}

/// Build the frequency basis for a list of pairwise distinct eigenvalues
/// from one field.
pub fn frequency_basis(thetas: &[AlgebraicNumber]) -> Result<FrequencyBasis, WalkError> {
    if thetas.is_empty() {
        return Ok(FrequencyBasis {
            support: vec![],
            w: vec![],
            f: vec![],
            relations: vec![],
        });
    }
    let field = thetas[0].field().clone();
    for t in thetas {
        if !NumberField::same_field(&field, t.field()) {
            return Err(WalkError::MixedFields);
        }
    }
    for i in 0..thetas.len() {
        for j in i + 1..thetas.len() {
            if thetas[i] == thetas[j] {
                return Err(WalkError::RepeatedEigenvalues);
            }
        }
    }
    let n = field.degree();
    let d = thetas.len();
    // columns of P are coordinate vectors; m clears denominators
    let mut m_lcm = BigInt::one();
    for t in thetas {
        for c in t.coeffs().coeffs() {
            m_lcm = m_lcm.lcm(c.denom());
        }
    }
    let mut m = IntMatrix::zeros(n, d);
    for (j, t) in thetas.iter().enumerate() {
        for i in 0..n {
            let c = t.coeffs().coeff(i);
            m[(i, j)] = c.numer() * (&m_lcm / c.denom());
        }
    }
    let snf = snf_full(&m);
    let k = snf.rank;
    // w_ℓ = (S_ℓℓ/m)·(U⁻¹ column ℓ), as field elements
    let m_rat = BigRational::from_integer(m_lcm);
    let mut w = Vec::with_capacity(k);
    for l in 0..k {
        let scale = BigRational::from_integer(snf.s[(l, l)].clone()) / &m_rat;
        let coeffs: Vec<BigRational> = (0..n)
            .map(|i| BigRational::from_integer(snf.u_inv[(i, l)].clone()) * &scale)
            .collect();
        w.push(AlgebraicNumber::new(field.clone(), RatPoly::new(coeffs)));
    }
    // f^r = first k rows of V⁻¹, column r
    let f: Vec<Vec<BigInt>> = (0..d)
        .map(|r| (0..k).map(|l| snf.v_inv[(l, r)].clone()).collect())
        .collect();
    // relation lattice = trailing columns of V
    let relations: Vec<Vec<BigInt>> = (k..d).map(|j| snf.v.col(j)).collect();
    let fb = FrequencyBasis {
        support: (0..d).collect(),
        w,
        f,
        relations,
    };
    debug_assert!(reconstruction_exact(&fb, thetas));
    Ok(fb)
}

fn reconstruction_exact(fb: &FrequencyBasis, thetas: &[AlgebraicNumber]) -> bool {
    for (r, theta) in thetas.iter().enumerate() {
        let mut sum = AlgebraicNumber::zero(theta.field().clone());
        for (l, wl) in fb.w.iter().enumerate() {
            sum = &sum + &wl.scale(&BigRational::from_integer(fb.f[r][l].clone()));
        }
        if &sum != theta {
            return false;
        }
    }
    for rel in &fb.relations {
        let mut sum = AlgebraicNumber::zero(thetas[0].field().clone());
        for (r, c) in rel.iter().enumerate() {
            sum = &sum + &thetas[r].scale(&BigRational::from_integer(c.clone()));
        }
        if !sum.is_zero() {
            return false;
        }
    }
    true
}

/// Frequency basis of the eigenvalues supported on the (a, b) entry.
pub fn frequency_basis_for_pair(
    sd: &SpectralDecomposition,
    a: usize,
    b: usize,
) -> Result<FrequencyBasis, WalkError> {
    sd.graph().check_vertex(a).map_err(WalkError::Spectra)?;
    sd.graph().check_vertex(b).map_err(WalkError::Spectra)?;
    let support = sd.support(a, b);
    let thetas: Vec<AlgebraicNumber> = support.iter().map(|&r| sd.eigenvalue(r)).collect();
    let mut fb = frequency_basis(&thetas)?;
    fb.support = support;
    Ok(fb)
}

/// Maximal rotational symmetry order of the closure of the walk entry, or
/// `Unbounded` when every order occurs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RotationOrder {
    Finite(BigUint),
    Unbounded,
}

impl RotationOrder {
    pub fn finite_u64(&self) -> Option<u64> {
        match self {
            RotationOrder::Finite(n) => u64::try_from(n).ok(),
            RotationOrder::Unbounded => None,
        }
    }
}

/// An n-fold rotation of the closure exists exactly when n divides Σ_r c_r
/// for every relation c, so the maximal order is the gcd of the coordinate
/// sums over a lattice basis; a trivial lattice (or all-zero sums) puts no
/// constraint on n.
pub fn rotation_symmetry_order(fb: &FrequencyBasis) -> RotationOrder {
    let mut g = BigInt::zero();
    for rel in &fb.relations {
        let s: BigInt = rel.iter().sum();
        g = g.gcd(&s);
    }
    if g.is_zero() {
        RotationOrder::Unbounded
    } else {
        RotationOrder::Finite(g.abs().to_biguint().unwrap())
    }
}
