//! Vertex-pair spectral structure: Krylov minimal polynomials for
//! |a⟩ ± |b⟩ and the strong-cospectrality test E_r|a⟩ = ±E_r|b⟩.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{IntMatrix, IntPoly, RatPoly};

use super::{char_poly, spectral_decomposition, Graph, SpectralDecomposition, SpectraError};

/// Outcome of the strong-cospectrality analysis of a vertex pair.
#[derive(Clone, Debug)]
pub struct PairDecomposition {
    pub a: usize,
    pub b: usize,
    /// Minimal polynomial of A on the Krylov module of |a⟩ + |b⟩.
    pub phi_plus: IntPoly,
    /// Minimal polynomial of A on the Krylov module of |a⟩ − |b⟩.
    pub phi_minus: IntPoly,
    /// φ / (φ₊·φ₋), present exactly when the pair is strongly cospectral.
    pub phi_zero: Option<IntPoly>,
    pub strongly_cospectral: bool,
    /// σ_r for each supported eigenvalue index (strongly cospectral pairs).
    pub signs: BTreeMap<usize, i8>,
}

/// Minimal polynomials of A acting on the Krylov spaces of |a⟩ + |b⟩ and
/// |a⟩ − |b⟩, as primitive (monic) integer polynomials.
pub fn pair_minpolys(g: &Graph, a: usize, b: usize) -> Result<(IntPoly, IntPoly), SpectraError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(SpectraError::SameVertex);
    }
    let adj = g.adjacency_matrix();
    let plus = krylov_min_poly(&adj, &unit_combo(g.n(), a, b, 1));
    let minus = krylov_min_poly(&adj, &unit_combo(g.n(), a, b, -1));
    Ok((plus, minus))
}

fn unit_combo(n: usize, a: usize, b: usize, sign: i64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[a] = BigInt::one();
    v[b] = BigInt::from(sign);
    v
}

/// Minimal monic polynomial p with p(A)·v = 0, via exact Gaussian
/// elimination on the sequence v, Av, A²v, ... until linear dependence.
fn krylov_min_poly(a: &IntMatrix, v: &[BigInt]) -> IntPoly {
    let n = a.rows();
    let mut vectors: Vec<Vec<BigInt>> = vec![v.to_vec()];
    loop {
        let last = vectors.last().unwrap();
        let next = a.mul_vec(last);
        // is `next` a rational combination of the previous vectors?
        let k = vectors.len();
        let mut m = IntMatrix::zeros(n, k);
        for (j, vec) in vectors.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = vec[i].clone();
            }
        }
        let rhs: Vec<BigRational> = next
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        if let Some(coeffs) = m.solve_rational(&rhs) {
            // verify (solve_rational returns a candidate even for
            // overdetermined systems only when consistent)
            let mut poly = vec![BigRational::zero(); k + 1];
            for (j, c) in coeffs.iter().enumerate() {
                poly[j] = -c.clone();
            }
            poly[k] = BigRational::one();
            let rp = RatPoly::new(poly);
            let (_, prim) = rp.content_primitive();
            debug_assert!(prim.is_monic());
            return prim;
        }
        vectors.push(next);
        assert!(vectors.len() <= n + 1, "Krylov sequence must terminate");
    }
}

/// Strong-cospectrality test through the exact projector table.
pub fn strong_cospectrality_with(
    sd: &SpectralDecomposition,
    a: usize,
    b: usize,
) -> Result<PairDecomposition, SpectraError> {
    let g = sd.graph();
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(SpectraError::SameVertex);
    }
    let (phi_plus, phi_minus) = pair_minpolys(g, a, b)?;
    let mut signs = BTreeMap::new();
    let mut cospectral = true;
    for r in 0..sd.num_eigenvalues() {
        let col_a = sd.projector_column(r, a);
        let col_b = sd.projector_column(r, b);
        let a_zero = col_a.iter().all(|x| x.is_zero());
        let b_zero = col_b.iter().all(|x| x.is_zero());
        if a_zero && b_zero {
            continue; // r outside the support of both
        }
        if a_zero != b_zero {
            cospectral = false;
            break;
        }
        let plus = col_a.iter().zip(&col_b).all(|(x, y)| x == y);
        if plus {
            signs.insert(r, 1i8);
            continue;
        }
        let minus = col_a
            .iter()
            .zip(&col_b)
            .all(|(x, y)| (x + y).is_zero());
        if minus {
            signs.insert(r, -1i8);
        } else {
            cospectral = false;
            break;
        }
    }
    if !cospectral {
        signs.clear();
    }
    let phi_zero = if cospectral {
        let phi = char_poly(g);
        let prod = &phi_plus * &phi_minus;
        let q = phi.div_exact(&prod).ok_or_else(|| {
            SpectraError::Internal("φ₊·φ₋ must divide φ for strongly cospectral pairs".into())
        })?;
        Some(q)
    } else {
        None
    };
    Ok(PairDecomposition {
        a,
        b,
        phi_plus,
        phi_minus,
        phi_zero,
        strongly_cospectral: cospectral,
        signs,
    })
}

/// Convenience wrapper that computes the spectral decomposition first.
pub fn strong_cospectrality(g: &Graph, a: usize, b: usize) -> Result<PairDecomposition, SpectraError> {
    let sd = spectral_decomposition(g)?;
    strong_cospectrality_with(&sd, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_pair_minpolys() {
        let (plus, minus) = pair_minpolys(&Graph::path(2), 0, 1).unwrap();
        assert_eq!(plus, IntPoly::from_i64(&[-1, 1])); // t − 1
        assert_eq!(minus, IntPoly::from_i64(&[1, 1])); // t + 1
    }

    #[test]
    fn p3_endpoint_minpolys() {
        let (plus, minus) = pair_minpolys(&Graph::path(3), 0, 2).unwrap();
        assert_eq!(plus, IntPoly::from_i64(&[-2, 0, 1])); // t² − 2
        assert_eq!(minus, IntPoly::from_i64(&[0, 1])); // t
    }

    #[test]
    fn k4e_degree3_pair_minpolys() {
        // product must be (t+1)(t²−t−4) in some assignment
        let (plus, minus) = pair_minpolys(&Graph::k4_minus_edge(), 1, 2).unwrap();
        let prod = &plus * &minus;
        let expected = &IntPoly::from_i64(&[1, 1]) * &IntPoly::from_i64(&[-4, -1, 1]);
        assert_eq!(prod, expected);
    }

    #[test]
    fn p2_strong_cospectrality() {
        let pd = strong_cospectrality(&Graph::path(2), 0, 1).unwrap();
        assert!(pd.strongly_cospectral);
        assert_eq!(pd.signs.get(&0), Some(&1));
        assert_eq!(pd.signs.get(&1), Some(&-1));
        assert_eq!(pd.phi_zero.as_ref().unwrap(), &IntPoly::one());
    }

    #[test]
    fn c5_adjacent_not_strongly_cospectral() {
        let pd = strong_cospectrality(&Graph::cycle(5), 1, 2).unwrap();
        assert!(!pd.strongly_cospectral);
        assert!(pd.phi_zero.is_none());
        assert!(pd.signs.is_empty());
    }

    #[test]
    fn k4e_degree3_pair_strongly_cospectral() {
        let sd = spectral_decomposition(&Graph::k4_minus_edge()).unwrap();
        let pd = strong_cospectrality_with(&sd, 1, 2).unwrap();
        assert!(pd.strongly_cospectral);
        // φ₊·φ₋·φ₀ = φ
        let phi = char_poly(&Graph::k4_minus_edge());
        let prod = &(&pd.phi_plus * &pd.phi_minus) * pd.phi_zero.as_ref().unwrap();
        assert_eq!(prod, phi);
        // φ₊ and φ₋ are squarefree and coprime
        assert_eq!(pd.phi_plus.gcd(&pd.phi_minus), IntPoly::one());
        assert_eq!(pd.phi_plus.squarefree_part(), pd.phi_plus);
        assert_eq!(pd.phi_minus.squarefree_part(), pd.phi_minus);
    }

    #[test]
    fn k4e_degree2_pair_strongly_cospectral() {
        // vertices 0 and 3 (degree 2) are swapped by an automorphism
        let pd = strong_cospectrality(&Graph::k4_minus_edge(), 0, 3).unwrap();
        assert!(pd.strongly_cospectral);
    }

    #[test]
    fn p3_endpoint_middle_not_cospectral() {
        let pd = strong_cospectrality(&Graph::path(3), 0, 1).unwrap();
        assert!(!pd.strongly_cospectral);
    }
}
