//! Exact even moments of |U(t)_ab| and certified supremum lower bounds.
//!
//! With F(z̄) = Σ_r c_r e^(i f^r(z̄)) over the torus of the supported
//! frequencies, the 2ℓ-th moment (2π)^(−k)∫|F|^(2ℓ) picks out exactly the
//! expansion terms whose exponent vector vanishes. Grouping the (r, s)
//! pairs by their difference vector g = f^r − f^s and weighting each group
//! by w_g = Σ c_r c_s turns the moment into
//!   Σ multinomial(ℓ; {p_g}) Π w_g^{p_g}
//! over multi-indices with Σ p_g = ℓ and Σ p_g·g = 0, which a pruned DFS
//! enumerates exactly. The result is always rational.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::AlgebraicNumber;
use crate::spectra::SpectralDecomposition;

use super::freq::frequency_basis_for_pair;
use super::WalkError;

/// Work ceiling for the moment enumeration (DFS node budget and the
/// up-front stars-and-bars bound).
#[derive(Clone, Copy, Debug)]
pub struct MomentConfig {
    pub work_ceiling: u64,
}

impl Default for MomentConfig {
    fn default() -> Self {
        MomentConfig {
            work_ceiling: 10_000_000,
        }
    }
}

/// Exact 2ℓ-th moment of the (a, b) walk entry.
pub fn even_moment(
    sd: &SpectralDecomposition,
    a: usize,
    b: usize,
    ell: u32,
    config: &MomentConfig,
) -> Result<BigRational, WalkError> {
    assert!(ell >= 1, "moment order must be positive");
    let fb = frequency_basis_for_pair(sd, a, b)?;
    if fb.support.is_empty() {
        return Ok(BigRational::zero()); // disconnected pair: F ≡ 0
    }
    let coeffs: Vec<AlgebraicNumber> = fb
        .support
        .iter()
        .map(|&r| sd.projector_entry(r, a, b).clone())
        .collect();
    let k = fb.dimension();
    // group pair differences
    let mut groups: BTreeMap<Vec<BigInt>, AlgebraicNumber> = BTreeMap::new();
    for (i, ci) in coeffs.iter().enumerate() {
        for (j, cj) in coeffs.iter().enumerate() {
            let diff: Vec<BigInt> = (0..k).map(|l| &fb.f[i][l] - &fb.f[j][l]).collect();
            let w = ci * cj;
            groups
                .entry(diff)
                .and_modify(|acc| *acc = &*acc + &w)
                .or_insert(w);
        }
    }
    let vectors: Vec<Vec<BigInt>> = groups.keys().cloned().collect();
    let weights: Vec<AlgebraicNumber> = groups.values().cloned().collect();
    // stars-and-bars bound on the enumeration
    let bound = binomial(vectors.len() as u64 + ell as u64 - 1, ell as u64);
    if bound > u128::from(config.work_ceiling) {
        return Err(WalkError::ResourceExceeded {
            needed: bound,
            ceiling: config.work_ceiling,
        });
    }
    // suffix max |coordinate| for pruning
    let mut suffix_max: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); k]; vectors.len() + 1];
    for i in (0..vectors.len()).rev() {
        for l in 0..k {
            let cand = vectors[i][l].abs();
            suffix_max[i][l] = cand.max(suffix_max[i + 1][l].clone());
        }
    }
    let field = coeffs[0].field().clone();
    let mut total = AlgebraicNumber::zero(field.clone());
    let mut nodes: u64 = 0;
    let mut partial = vec![BigInt::zero(); k];
    let mut chosen: Vec<u32> = Vec::new();
    dfs(
        &vectors,
        &weights,
        0,
        ell,
        &mut partial,
        &mut chosen,
        &mut total,
        &mut nodes,
        config.work_ceiling,
        &suffix_max,
        ell,
    )?;
    total.as_rational().ok_or_else(|| {
        WalkError::Internal("even moment has irrational residue".into())
    })
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    vectors: &[Vec<BigInt>],
    weights: &[AlgebraicNumber],
    idx: usize,
    remaining: u32,
    partial: &mut Vec<BigInt>,
    chosen: &mut Vec<u32>,
    total: &mut AlgebraicNumber,
    nodes: &mut u64,
    ceiling: u64,
    suffix_max: &[Vec<BigInt>],
    ell: u32,
) -> Result<(), WalkError> {
    *nodes += 1;
    if *nodes > ceiling {
        return Err(WalkError::ResourceExceeded {
            needed: u128::from(*nodes),
            ceiling,
        });
    }
    if remaining == 0 {
        if partial.iter().all(|x| x.is_zero()) {
            let mut term = AlgebraicNumber::from_rational(
                total.field().clone(),
                BigRational::from_integer(multinomial(ell, chosen)),
            );
            for (i, &p) in chosen.iter().enumerate() {
                for _ in 0..p {
                    term = &term * &weights[i];
                }
            }
            *total = &*total + &term;
        }
        return Ok(());
    }
    if idx == vectors.len() {
        return Ok(());
    }
    // prune: remaining picks cannot cancel the partial sum
    let rem = BigInt::from(remaining);
    for l in 0..partial.len() {
        if partial[l].abs() > &rem * &suffix_max[idx][l] {
            return Ok(());
        }
    }
    // choose multiplicity for vectors[idx]
    for p in (0..=remaining).rev() {
        for l in 0..partial.len() {
            let add = &vectors[idx][l] * BigInt::from(p);
            partial[l] += add;
        }
        chosen.push(p);
        dfs(
            vectors,
            weights,
            idx + 1,
            remaining - p,
            partial,
            chosen,
            total,
            nodes,
            ceiling,
            suffix_max,
            ell,
        )?;
        chosen.pop();
        for l in 0..partial.len() {
            let sub = &vectors[idx][l] * BigInt::from(p);
            partial[l] -= sub;
        }
    }
    Ok(())
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
        if acc > u128::MAX / 2 {
            return u128::MAX;
        }
    }
    acc
}

fn multinomial(ell: u32, parts: &[u32]) -> BigInt {
    let mut acc = factorial(ell);
    for &p in parts {
        acc /= factorial(p);
    }
    acc
}

fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Certified dyadic bracket around moment^(1/(2ℓ)).
#[derive(Clone, Debug)]
pub struct SupBound {
    pub ell: u32,
    pub moment: BigRational,
    /// Dyadic lower bound for the supremum of |U(t)_ab|.
    pub lower: BigRational,
    /// Dyadic upper bound for the 2ℓ-th moment root itself.
    pub upper: BigRational,
}

/// Lower bounds moment_ℓ^(1/(2ℓ)) for ℓ = 1..max_ell as certified dyadic
/// brackets of width ≤ 2⁻⁶⁴. Lower bounds are made nondecreasing by a
/// running maximum (each is a valid supremum lower bound on its own).
pub fn supremum_estimate(
    sd: &SpectralDecomposition,
    a: usize,
    b: usize,
    max_ell: u32,
    config: &MomentConfig,
) -> Result<Vec<SupBound>, WalkError> {
    assert!(max_ell >= 1);
    let mut out = Vec::with_capacity(max_ell as usize);
    let mut best_lower = BigRational::zero();
    for ell in 1..=max_ell {
        let m = even_moment(sd, a, b, ell, config)?;
        let (lo, hi) = root_bracket(&m, 2 * ell, 64);
        best_lower = best_lower.max(lo);
        out.push(SupBound {
            ell,
            moment: m,
            lower: best_lower.clone(),
            upper: hi,
        });
    }
    Ok(out)
}

/// Dyadic bracket [lo, hi] with lo ≤ x^(1/root) ≤ hi and hi − lo ≤ 2^−bits,
/// for 0 ≤ x ≤ 1.
fn root_bracket(x: &BigRational, root: u32, bits: u32) -> (BigRational, BigRational) {
    debug_assert!(!x.is_negative() && *x <= BigRational::one());
    if x.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let mut lo = BigRational::zero();
    let mut hi = BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    for _ in 0..=bits {
        let mid = (&lo + &hi) / &two;
        let mut pow = BigRational::one();
        for _ in 0..root {
            pow *= &mid;
        }
        if &pow <= x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}
