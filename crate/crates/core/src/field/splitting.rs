//! Iterative splitting-field construction.
//!
//! Starting from ℚ, factor the (monicized) squarefree part over the current
//! field; while some factor stays nonlinear, adjoin one of its roots through
//! a primitive-element step and refactor. Each round strictly increases the
//! number of linear factors, so this terminates with every root expressed
//! as a polynomial in a single generator α.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::{factor_integer_poly, IntPoly, RatPoly};

use super::fieldpoly::FieldPoly;
use super::trager::{extend_field, factor_over_field};
use super::{count_real_roots, AlgebraicNumber, FieldError, NumberField};

/// A polynomial together with the splitting field of its squarefree part
/// and exact expressions for every distinct root, sorted by descending
/// real value.
#[derive(Clone, Debug)]
pub struct SplittingData {
    field: Arc<NumberField>,
    root_polys: Vec<RatPoly>,
    source_poly: IntPoly,
}

impl SplittingData {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    /// Coordinate polynomials of the roots, descending real order.
    pub fn root_polys(&self) -> &[RatPoly] {
        &self.root_polys
    }

    pub fn num_roots(&self) -> usize {
        self.root_polys.len()
    }

    pub fn source_poly(&self) -> &IntPoly {
        &self.source_poly
    }

    /// The r-th root (descending order) as a field element.
    pub fn root(&self, r: usize) -> AlgebraicNumber {
        AlgebraicNumber::new(self.field.clone(), self.root_polys[r].clone())
    }

    pub fn roots(&self) -> Vec<AlgebraicNumber> {
        (0..self.num_roots()).map(|r| self.root(r)).collect()
    }
}

/// Compute the splitting field of a nonzero polynomial whose roots are all
/// real, with exact root expressions. A polynomial with only rational roots
/// yields the trivial field (minimal polynomial x).
pub fn splitting_field(p: &IntPoly) -> Result<SplittingData, FieldError> {
    if p.is_zero() {
        return Err(FieldError::ZeroPolynomial);
    }
    let sf = p.squarefree_part();
    if sf.degree().map_or(true, |d| d == 0) {
        return Ok(SplittingData {
            field: NumberField::rationals(),
            root_polys: vec![],
            source_poly: p.clone(),
        });
    }
    if count_real_roots(&sf) != sf.degree().unwrap() {
        return Err(FieldError::ComplexRoots);
    }
    // work with a monic model: roots of sf are roots of the monic
    // lc^(m−1)·sf(x/lc) divided by lc
    let lc = sf.leading().unwrap().clone();
    let monic = monicize(&sf);
    let fac = factor_integer_poly(&monic)?;
    let factors: Vec<IntPoly> = fac.factors.iter().map(|(f, _)| f.clone()).collect();

    let mut field = NumberField::rationals();
    let roots_scaled: Vec<AlgebraicNumber> = loop {
        let mut roots: Vec<AlgebraicNumber> = Vec::new();
        let mut pending: Option<FieldPoly> = None;
        for f in &factors {
            let fp = FieldPoly::from_ratpoly(field.clone(), &f.to_rat());
            let split = factor_over_field(&fp)?;
            for (g, _) in &split.factors {
                if g.degree() == Some(1) {
                    roots.push(g.coeff(0).neg());
                } else if pending.is_none() {
                    pending = Some(g.clone());
                }
            }
        }
        match pending {
            None => break roots,
            Some(h) => {
                field = extend_field(&h)?;
            }
        }
    };
    // undo the monicizing scale and sort by descending real value
    let inv_lc = BigRational::new(BigInt::one(), BigInt::one()) / BigRational::from_integer(lc);
    let mut roots: Vec<AlgebraicNumber> = roots_scaled.iter().map(|r| r.scale(&inv_lc)).collect();
    roots.sort_by(|a, b| b.cmp_exact(a));
    Ok(SplittingData {
        field,
        root_polys: roots.into_iter().map(|r| r.coeffs().clone()).collect(),
        source_poly: p.clone(),
    })
}

/// lc^(m−1)·p(x/lc): monic with the roots scaled by lc.
fn monicize(p: &IntPoly) -> IntPoly {
    let m = p.degree().unwrap();
    let lc = p.leading().unwrap();
    let mut coeffs = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut c = p.coeff(i);
        for _ in 0..(m - 1 - i) {
            c *= lc;
        }
        coeffs.push(c);
    }
    coeffs.push(BigInt::one());
    IntPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Sign;

    fn assert_roots_annihilate(sd: &SplittingData) {
        let sf = sd.source_poly().squarefree_part();
        for r in sd.roots() {
            let val = FieldPoly::from_ratpoly(sd.field().clone(), &sf.to_rat()).eval(&r);
            assert!(val.is_zero(), "root fails to annihilate source polynomial");
        }
    }

    fn assert_sorted_descending(sd: &SplittingData) {
        let roots = sd.roots();
        for w in roots.windows(2) {
            assert_eq!((&w[0] - &w[1]).sign(), Sign::Positive);
        }
    }

    #[test]
    fn quadratic_t2_minus_t_minus_4() {
        // roots (1±√17)/2
        let p = IntPoly::from_i64(&[-4, -1, 1]);
        let sd = splitting_field(&p).unwrap();
        assert_eq!(sd.field().degree(), 2);
        assert_eq!(sd.num_roots(), 2);
        assert_roots_annihilate(&sd);
        assert_sorted_descending(&sd);
        let approx: Vec<f64> = sd.roots().iter().map(|r| r.to_f64()).collect();
        let s17 = 17f64.sqrt();
        assert!((approx[0] - (1.0 + s17) / 2.0).abs() < 1e-9);
        assert!((approx[1] - (1.0 - s17) / 2.0).abs() < 1e-9);
    }

    #[test]
    fn rational_roots_trivial_field() {
        // (x−1)(x−3)
        let p = IntPoly::from_i64(&[3, -4, 1]);
        let sd = splitting_field(&p).unwrap();
        assert!(sd.field().is_rationals());
        let vals: Vec<BigRational> = sd
            .roots()
            .iter()
            .map(|r| r.as_rational().unwrap())
            .collect();
        assert_eq!(vals[0], BigRational::from_integer(3.into()));
        assert_eq!(vals[1], BigRational::from_integer(1.into()));
    }

    #[test]
    fn cyclic_cubic() {
        let p = IntPoly::from_i64(&[1, -3, 0, 1]);
        let sd = splitting_field(&p).unwrap();
        assert_eq!(sd.field().degree(), 3);
        assert_eq!(sd.num_roots(), 3);
        assert_roots_annihilate(&sd);
        assert_sorted_descending(&sd);
        // sum of roots = 0 (no t² term)
        let sum = sd
            .roots()
            .into_iter()
            .reduce(|a, b| &a + &b)
            .unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn mixed_rational_and_quadratic() {
        // (t−2)(t²+t−1): C₅ minimal polynomial
        let p = IntPoly::from_i64(&[-2, 0, 1]) ; // placeholder, real poly below
        let _ = p;
        let p = &IntPoly::from_i64(&[-2, 1]) * &IntPoly::from_i64(&[-1, 1, 1]);
        let sd = splitting_field(&p).unwrap();
        assert_eq!(sd.field().degree(), 2);
        assert_eq!(sd.num_roots(), 3);
        assert_roots_annihilate(&sd);
        assert_sorted_descending(&sd);
        let approx: Vec<f64> = sd.roots().iter().map(|r| r.to_f64()).collect();
        assert!((approx[0] - 2.0).abs() < 1e-9);
        assert!((approx[1] - 0.6180339887498949).abs() < 1e-9);
        assert!((approx[2] + 1.618033988749895).abs() < 1e-9);
    }

    #[test]
    fn non_monic_input() {
        // 2x² − 1: roots ±1/√2
        let p = IntPoly::from_i64(&[-1, 0, 2]);
        let sd = splitting_field(&p).unwrap();
        assert_eq!(sd.field().degree(), 2);
        assert_roots_annihilate(&sd);
        let approx: Vec<f64> = sd.roots().iter().map(|r| r.to_f64()).collect();
        assert!((approx[0] - 0.7071067811865476).abs() < 1e-9);
    }

    #[test]
    fn rejects_complex_roots() {
        let p = IntPoly::from_i64(&[1, 0, 1]);
        assert!(matches!(
            splitting_field(&p),
            Err(FieldError::ComplexRoots)
        ));
    }

    #[test]
    fn squarefree_part_taken_internally() {
        // (t−1)²(t+2)
        let lin = IntPoly::from_i64(&[-1, 1]);
        let p = &(&lin * &lin) * &IntPoly::from_i64(&[2, 1]);
        let sd = splitting_field(&p).unwrap();
        assert!(sd.field().is_rationals());
        assert_eq!(sd.num_roots(), 2);
    }

    #[test]
    fn degree_two_extension_tower() {
        // (x²−2)(x²−3): splitting field ℚ[√2, √3] of degree 4
        let p = &IntPoly::from_i64(&[-2, 0, 1]) * &IntPoly::from_i64(&[-3, 0, 1]);
        let sd = splitting_field(&p).unwrap();
        assert_eq!(sd.field().degree(), 4);
        assert_eq!(sd.num_roots(), 4);
        assert_roots_annihilate(&sd);
        assert_sorted_descending(&sd);
        let approx: Vec<f64> = sd.roots().iter().map(|r| r.to_f64()).collect();
        let expect = [3f64.sqrt(), 2f64.sqrt(), -(2f64.sqrt()), -(3f64.sqrt())];
        for (a, e) in approx.iter().zip(expect.iter()) {
            assert!((a - e).abs() < 1e-9);
        }
    }
}
