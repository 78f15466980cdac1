//! Division-free characteristic polynomial (Berkowitz).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::IntPoly;

use super::Graph;

/// Characteristic polynomial det(xI − A) of the adjacency matrix, monic of
/// degree n, computed entirely in integer arithmetic.
pub fn char_poly(g: &Graph) -> IntPoly {
    let a = g.adjacency_matrix();
    let n = g.n();
    // Berkowitz: iteratively extend the char poly of leading principal
    // minors via Toeplitz products. `p` holds coefficients in descending
    // degree order.
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for r in 1..=n {
        // block data for the r×r leading minor
        let arr = a[(r - 1, r - 1)].clone();
        let row: Vec<BigInt> = (0..r - 1).map(|j| a[(r - 1, j)].clone()).collect();
        let col: Vec<BigInt> = (0..r - 1).map(|i| a[(i, r - 1)].clone()).collect();
        // w_k = M^k · col for the (r−1)×(r−1) minor M
        let mut dots: Vec<BigInt> = Vec::with_capacity(r.saturating_sub(1));
        let mut w = col.clone();
        for _ in 0..r.saturating_sub(1) {
            let dot = row.iter().zip(&w).map(|(x, y)| x * y).sum::<BigInt>();
            dots.push(dot);
            let mut next = vec![BigInt::zero(); r - 1];
            for i in 0..r - 1 {
                for j in 0..r - 1 {
                    if !a[(i, j)].is_zero() {
                        next[i] += &a[(i, j)] * &w[j];
                    }
                }
            }
            w = next;
        }
        // Toeplitz column: [1, −a_rr, −row·col, −row·M·col, ...]
        let mut t: Vec<BigInt> = Vec::with_capacity(r + 1);
        t.push(BigInt::one());
        t.push(-arr);
        for d in dots.iter().take(r.saturating_sub(1)) {
            t.push(-d.clone());
        }
        // p_new[i] = Σ_k t[i − k] · p[k], rows 0..=r of the banded
        // Toeplitz product (higher convolution terms are outside the matrix)
        let mut pn = vec![BigInt::zero(); p.len() + 1];
        for (k, tv) in t.iter().enumerate() {
            if tv.is_zero() {
                continue;
            }
            for (i, pv) in p.iter().enumerate() {
                if i + k < pn.len() {
                    pn[i + k] += tv * pv;
                }
            }
        }
        p = pn;
    }
    p.reverse(); // ascending degree order
    IntPoly::new(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntMatrix;
    use num_rational::BigRational;

    /// Independent oracle: interpolate det(kI − A) at integer points.
    fn char_poly_oracle(g: &Graph) -> IntPoly {
        let a = g.adjacency_matrix();
        let n = g.n();
        let mut points = Vec::new();
        for k in 0..=n as i64 {
            let mut m = IntMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m[(i, j)] = if i == j {
                        BigInt::from(k) - &a[(i, j)]
                    } else {
                        -a[(i, j)].clone()
                    };
                }
            }
            points.push((k, m.det()));
        }
        // Lagrange interpolation over ℚ, must come out integral
        let mut poly = crate::algebra::RatPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut term = crate::algebra::RatPoly::constant(BigRational::from_integer(yi.clone()));
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let denom = BigRational::from_integer(BigInt::from(xi - xj));
                let lin = crate::algebra::RatPoly::new(vec![
                    BigRational::from_integer(BigInt::from(-xj)),
                    BigRational::one(),
                ]);
                term = (&term * &lin).mul_scalar(&denom.recip());
            }
            poly = &poly + &term;
        }
        poly.to_int().expect("characteristic polynomial is integral")
    }

    #[test]
    fn p2_char_poly() {
        assert_eq!(char_poly(&Graph::path(2)), IntPoly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn k4_minus_edge_char_poly() {
        // t⁴ − 5t² − 4t
        assert_eq!(
            char_poly(&Graph::k4_minus_edge()),
            IntPoly::from_i64(&[0, -4, -5, 0, 1])
        );
    }

    #[test]
    fn c5_char_poly_factors() {
        // (t−2)(t²+t−1)²
        let expected = &IntPoly::from_i64(&[-2, 1])
            * &(&IntPoly::from_i64(&[-1, 1, 1]) * &IntPoly::from_i64(&[-1, 1, 1]));
        assert_eq!(char_poly(&Graph::cycle(5)), expected);
    }

    #[test]
    fn agrees_with_determinant_oracle() {
        for g in [
            Graph::path(4),
            Graph::cycle(6),
            Graph::complete(5),
            Graph::k4_minus_edge(),
            Graph::petersen(),
            Graph::wheel(6),
            Graph::complete_bipartite(2, 3),
        ] {
            assert_eq!(char_poly(&g), char_poly_oracle(&g), "graph {:?}", g);
        }
    }

    #[test]
    fn empty_graph() {
        // no edges: φ = tⁿ
        let g = Graph::empty(3);
        assert_eq!(char_poly(&g), IntPoly::from_i64(&[0, 0, 0, 1]));
        let g0 = Graph::empty(0);
        assert_eq!(char_poly(&g0), IntPoly::one());
    }
}
