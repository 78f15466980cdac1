//! Exact spectral decomposition A = Σ θ_r E_r over the splitting field.
//!
//! The splitting field is built from the minimal polynomial of A (the
//! squarefree part of the characteristic polynomial), which carries the
//! same distinct-eigenvalue data in a smaller field. Projector entries are
//! assembled as ⟨a|E_r|b⟩ = Σ_j c_j^(r) (A^j)_ab, where q_r(x) = Σ c_j^(r) xʲ
//! is the Lagrange interpolation polynomial that is 1 at θ_r and 0 at every
//! other eigenvalue, and the (A^j)_ab are integer walk counts.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{factor_integer_poly, IntMatrix, IntPoly};
use crate::field::{
    splitting_field, AlgebraicNumber, FieldPoly, NumberField, SplittingData,
};

use super::{char_poly, Graph, SpectraError};

/// Distinct eigenvalues (descending), multiplicities, and the full table of
/// projector entries ⟨a|E_r|b⟩, all exact.
pub struct SpectralDecomposition {
    graph: Graph,
    char_poly: IntPoly,
    splitting: SplittingData,
    multiplicities: Vec<usize>,
    /// projectors[r] is an n×n symmetric table of field elements.
    projectors: Vec<Vec<AlgebraicNumber>>,
}

impl SpectralDecomposition {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn char_poly(&self) -> &IntPoly {
        &self.char_poly
    }

    pub fn splitting(&self) -> &SplittingData {
        &self.splitting
    }

    pub fn field(&self) -> &Arc<NumberField> {
        self.splitting.field()
    }

    /// Number of distinct eigenvalues.
    pub fn num_eigenvalues(&self) -> usize {
        self.splitting.num_roots()
    }

    /// θ_r, descending order (r = 0 is the Perron root on connected graphs).
    pub fn eigenvalue(&self, r: usize) -> AlgebraicNumber {
        self.splitting.root(r)
    }

    pub fn multiplicity(&self, r: usize) -> usize {
        self.multiplicities[r]
    }

    pub fn projector_entry(&self, r: usize, a: usize, b: usize) -> &AlgebraicNumber {
        &self.projectors[r][a * self.graph.n() + b]
    }

    /// Indices r with ⟨a|E_r|b⟩ ≠ 0.
    pub fn support(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.num_eigenvalues())
            .filter(|&r| !self.projector_entry(r, a, b).is_zero())
            .collect()
    }

    /// The column E_r|a⟩ as field elements.
    pub fn projector_column(&self, r: usize, a: usize) -> Vec<AlgebraicNumber> {
        (0..self.graph.n())
            .map(|b| self.projector_entry(r, b, a).clone())
            .collect()
    }
}

/// Build the exact spectral decomposition of a graph.
pub fn spectral_decomposition(g: &Graph) -> Result<SpectralDecomposition, SpectraError> {
    let phi = char_poly(g);
    let n = g.n();
    if n == 0 {
        return Err(SpectraError::Internal("empty graph".into()));
    }
    let min_poly = phi.squarefree_part();
    let splitting = splitting_field(&min_poly)?;
    let field = splitting.field().clone();
    let d = splitting.num_roots();

    // multiplicity of each root = multiplicity of its irreducible factor in φ
    let fac = factor_integer_poly(&phi)?;
    let mut multiplicities = Vec::with_capacity(d);
    for r in 0..d {
        let theta = splitting.root(r);
        let mut mult = None;
        for (f, m) in &fac.factors {
            let val = FieldPoly::from_ratpoly(field.clone(), &f.to_rat()).eval(&theta);
            if val.is_zero() {
                mult = Some(*m as usize);
                break;
            }
        }
        multiplicities.push(mult.ok_or_else(|| {
            SpectraError::Internal("eigenvalue not annihilated by any factor".into())
        })?);
    }
    debug_assert_eq!(multiplicities.iter().sum::<usize>(), n);

    // powers of A as integer matrices
    let a = g.adjacency_matrix();
    let mut powers: Vec<IntMatrix> = Vec::with_capacity(d);
    powers.push(IntMatrix::identity(n));
    for _ in 1..d {
        powers.push(powers.last().unwrap().mul(&a));
    }

    // Lagrange basis polynomial for each eigenvalue: ψ(x)/(x−θ_r) / ψ′(θ_r)
    let minpoly_over_field = FieldPoly::from_ratpoly(field.clone(), &min_poly.to_rat());
    let dpsi = minpoly_over_field.derivative();
    let mut projectors = Vec::with_capacity(d);
    for r in 0..d {
        let theta = splitting.root(r);
        let linear = FieldPoly::new(
            field.clone(),
            vec![theta.neg(), AlgebraicNumber::one(field.clone())],
        );
        let (numer, rem) = minpoly_over_field.divrem(&linear)?;
        if !rem.is_zero() {
            return Err(SpectraError::Internal(
                "eigenvalue is not a root of the minimal polynomial".into(),
            ));
        }
        let denom = dpsi.eval(&theta).inv()?;
        // q_r coefficients c_j; E_r = Σ_j c_j A^j
        let mut table = vec![AlgebraicNumber::zero(field.clone()); n * n];
        for j in 0..d {
            let c = &numer.coeff(j) * &denom;
            if c.is_zero() {
                continue;
            }
            let pj = &powers[j];
            for x in 0..n {
                for y in x..n {
                    let w = &pj[(x, y)];
                    if w.is_zero() {
                        continue;
                    }
                    let add = c.scale(&num_rational::BigRational::from_integer(w.clone()));
                    table[x * n + y] = &table[x * n + y] + &add;
                }
            }
        }
        // symmetrize from the upper triangle
        for x in 0..n {
            for y in 0..x {
                table[x * n + y] = table[y * n + x].clone();
            }
        }
        projectors.push(table);
    }

    let out = SpectralDecomposition {
        graph: g.clone(),
        char_poly: phi,
        splitting,
        multiplicities,
        projectors,
    };
    debug_assert!(resolution_of_identity_holds(&out));
    Ok(out)
}

fn resolution_of_identity_holds(sd: &SpectralDecomposition) -> bool {
    let n = sd.graph.n();
    let field = sd.field().clone();
    let one = BigInt::one();
    for a in 0..n {
        for b in a..n {
            let mut sum = AlgebraicNumber::zero(field.clone());
            for r in 0..sd.num_eigenvalues() {
                sum = &sum + sd.projector_entry(r, a, b);
            }
            let expect = if a == b { one.clone() } else { BigInt::from(0) };
            if sum.as_rational() != Some(num_rational::BigRational::from_integer(expect)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn p2_projectors_are_half_checkerboards() {
        let sd = spectral_decomposition(&Graph::path(2)).unwrap();
        assert_eq!(sd.num_eigenvalues(), 2);
        // θ₀ = 1 with projector all-1/2, θ₁ = −1 with ±1/2 checkerboard
        assert_eq!(sd.eigenvalue(0).as_rational().unwrap(), rat(1, 1));
        assert_eq!(sd.eigenvalue(1).as_rational().unwrap(), rat(-1, 1));
        for (a, b, r, v) in [
            (0, 0, 0, rat(1, 2)),
            (0, 1, 0, rat(1, 2)),
            (0, 0, 1, rat(1, 2)),
            (0, 1, 1, rat(-1, 2)),
        ] {
            assert_eq!(sd.projector_entry(r, a, b).as_rational().unwrap(), v);
        }
    }

    #[test]
    fn c5_diagonal_entries() {
        let sd = spectral_decomposition(&Graph::cycle(5)).unwrap();
        assert_eq!(sd.num_eigenvalues(), 3);
        assert_eq!(sd.multiplicity(0), 1);
        assert_eq!(sd.multiplicity(1), 2);
        assert_eq!(sd.multiplicity(2), 2);
        // diagonal entries (1/5, 2/5, 2/5)
        assert_eq!(sd.projector_entry(0, 1, 1).as_rational().unwrap(), rat(1, 5));
        assert_eq!(sd.projector_entry(1, 1, 1).as_rational().unwrap(), rat(2, 5));
        assert_eq!(sd.projector_entry(2, 1, 1).as_rational().unwrap(), rat(2, 5));
    }

    #[test]
    fn k4e_zero_eigenvector_support() {
        let sd = spectral_decomposition(&Graph::k4_minus_edge()).unwrap();
        // eigenvalue 0 projector vanishes on the degree-3 vertices 1 and 2
        let r0 = (0..sd.num_eigenvalues())
            .find(|&r| sd.eigenvalue(r).is_zero())
            .unwrap();
        for v in [1usize, 2] {
            for b in 0..4 {
                assert!(sd.projector_entry(r0, v, b).is_zero());
            }
        }
        // and is nonzero at the degree-2 vertices
        assert!(!sd.projector_entry(r0, 0, 0).is_zero());
        assert!(!sd.projector_entry(r0, 3, 3).is_zero());
    }

    #[test]
    fn eigen_equation_holds_exactly() {
        for g in [Graph::path(3), Graph::cycle(5), Graph::k4_minus_edge()] {
            let sd = spectral_decomposition(&g).unwrap();
            let n = g.n();
            let a = g.adjacency_matrix();
            let field = sd.field().clone();
            for x in 0..n {
                for y in 0..n {
                    let mut sum = AlgebraicNumber::zero(field.clone());
                    for r in 0..sd.num_eigenvalues() {
                        sum = &sum + &(&sd.eigenvalue(r) * sd.projector_entry(r, x, y));
                    }
                    let expect = BigRational::from_integer(a[(x, y)].clone());
                    assert_eq!(sum.as_rational().unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn projector_entries_match_deleted_poly_formula() {
        // ⟨a|E_r|a⟩ = ((x − θ_r)·φ_{G\a}(x)/φ_G(x))|_{x=θ_r} after reducing
        // the fraction over the field
        for g in [Graph::cycle(5), Graph::k4_minus_edge(), Graph::path(4)] {
            let sd = spectral_decomposition(&g).unwrap();
            let field = sd.field().clone();
            let phi = FieldPoly::from_ratpoly(field.clone(), &sd.char_poly().to_rat());
            for a in 0..g.n() {
                let ga = char_poly(&g.delete_vertices(&[a]));
                let ga_f = FieldPoly::from_ratpoly(field.clone(), &ga.to_rat());
                for r in 0..sd.num_eigenvalues() {
                    let theta = sd.eigenvalue(r);
                    let linear = FieldPoly::new(
                        field.clone(),
                        vec![theta.neg(), AlgebraicNumber::one(field.clone())],
                    );
                    let numer = linear.mul(&ga_f);
                    let g_common = numer.gcd(&phi).unwrap();
                    let nred = numer.divrem(&g_common).unwrap().0;
                    let dred = phi.divrem(&g_common).unwrap().0;
                    let dval = dred.eval(&theta);
                    assert!(!dval.is_zero());
                    let expect = nred.eval(&theta).checked_div(&dval).unwrap();
                    assert_eq!(*sd.projector_entry(r, a, a), expect);
                }
            }
        }
    }
}
