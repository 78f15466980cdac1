//! Factorization over a number field by the norm method.
//!
//! To split a squarefree p ∈ K[x], K = ℚ[α] with minimal polynomial f:
//! find a small integer shift s so that N(x) = Res_y(f(y), p̂(x − s·y, y))
//! is squarefree (p̂ replaces α by y). N is then the product of the norms of
//! the irreducible factors of the shifted polynomial, one norm factor each,
//! so gcds against the rational factors of N split p completely.
//!
//! The resultant in y is computed by evaluation at nm+1 integer points and
//! exact Lagrange interpolation, which keeps everything inside univariate
//! integer resultants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{factor_integer_poly, IntPoly, RatPoly};

use super::fieldpoly::{FieldFactorization, FieldPoly};
use super::{AlgebraicNumber, FieldError, NumberField};
use std::sync::Arc;

/// Norm of p(x − s·α): Res_y(f(y), Σᵢ gᵢ(y)·(x − s·y)ⁱ) where gᵢ are the
/// coordinate polynomials of p's coefficients.
pub(crate) fn shifted_norm(p: &FieldPoly, s: i64) -> RatPoly {
    let field = p.field();
    let f = field.min_poly();
    let n = field.degree();
    let m = p.degree().expect("nonzero polynomial");
    let result_degree = n * m;
    // evaluation points 0, 1, −1, 2, −2, ...
    let mut points: Vec<(BigRational, BigRational)> = Vec::with_capacity(result_degree + 1);
    let mut k = 0i64;
    while points.len() < result_degree + 1 {
        let x = BigRational::from_integer(BigInt::from(k));
        let val = norm_at(p, f, s, &x);
        points.push((x, val));
        k = if k > 0 { -k } else { -k + 1 };
    }
    lagrange_interpolate(&points)
}

/// Res_y(f(y), p̂(x₀ − s·y, y)) for a fixed rational x₀.
fn norm_at(p: &FieldPoly, f: &IntPoly, s: i64, x0: &BigRational) -> BigRational {
    // Horner in the outer variable: coefficients are polynomials in y
    let lin = RatPoly::new(vec![
        x0.clone(),
        BigRational::from_integer(BigInt::from(-s)),
    ]);
    let mut acc = RatPoly::zero();
    for c in (0..=p.degree().unwrap()).rev().map(|i| p.coeff(i)) {
        acc = &(&acc * &lin) + c.coeffs();
    }
    if acc.is_zero() {
        return BigRational::zero();
    }
    let (content, primitive) = acc.content_primitive();
    let res = f
        .resultant(&primitive)
        .expect("nonzero resultant arguments");
    // Res(f, c·B) = c^deg(f) · Res(f, B)
    let mut scale = BigRational::one();
    for _ in 0..f.degree().unwrap() {
        scale *= &content;
    }
    BigRational::from_integer(res) * scale
}

fn lagrange_interpolate(points: &[(BigRational, BigRational)]) -> RatPoly {
    // Newton's divided differences
    let n = points.len();
    let mut coef: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = &points[i].0 - &points[i - level].0;
            coef[i] = (&coef[i] - &coef[i - 1]) / dx;
        }
    }
    let mut poly = RatPoly::zero();
    for i in (0..n).rev() {
        let lin = RatPoly::new(vec![-points[i].0.clone(), BigRational::one()]);
        poly = &(&poly * &lin) + &RatPoly::constant(coef[i].clone());
    }
    poly
}

/// Factor a squarefree monic polynomial over its field into monic
/// irreducible factors, deterministically ordered.
fn factor_squarefree(p: &FieldPoly) -> Result<Vec<FieldPoly>, FieldError> {
    let field = p.field().clone();
    let m = p.degree().expect("nonzero");
    if m == 1 {
        return Ok(vec![p.clone()]);
    }
    if field.is_rationals() {
        return factor_over_rationals(p);
    }
    for shift in shift_sequence() {
        let norm = shifted_norm(p, shift);
        // squarefree norm ⟺ gcd with derivative is constant
        if !norm.gcd(&norm.derivative()).is_one() {
            continue;
        }
        let (_, prim) = norm.content_primitive();
        let fac = factor_integer_poly(&prim)?;
        let alpha = AlgebraicNumber::generator(field.clone());
        let shift_alpha = alpha.scale(&BigRational::from_integer(BigInt::from(shift)));
        // p(x − s·α), split by gcds with the rational norm factors
        let shifted = p.compose_shift(&shift_alpha.neg());
        let mut out = Vec::new();
        for (nf, mult) in &fac.factors {
            debug_assert_eq!(*mult, 1);
            let nf_emb = FieldPoly::from_ratpoly(field.clone(), &nf.to_rat());
            let g = shifted.gcd(&nf_emb)?;
            if g.degree().map_or(false, |d| d >= 1) {
                out.push(g.compose_shift(&shift_alpha));
            }
        }
        debug_assert_eq!(
            out.iter().map(|f| f.degree().unwrap()).sum::<usize>(),
            m,
            "norm factors must account for the whole polynomial"
        );
        out.sort_by(|a, b| a.cmp_key(b));
        return Ok(out);
    }
    Err(FieldError::ShiftExhausted)
}

fn factor_over_rationals(p: &FieldPoly) -> Result<Vec<FieldPoly>, FieldError> {
    let field = p.field().clone();
    let rat = RatPoly::new(
        p.coeffs()
            .iter()
            .map(|c| c.as_rational().expect("rational field element"))
            .collect(),
    );
    let (_, prim) = rat.content_primitive();
    let fac = factor_integer_poly(&prim)?;
    let mut out: Vec<FieldPoly> = Vec::new();
    for (f, mult) in &fac.factors {
        debug_assert_eq!(*mult, 1);
        out.push(
            FieldPoly::from_ratpoly(field.clone(), &f.to_rat())
                .monic()
                .expect("nonzero factor"),
        );
    }
    out.sort_by(|a, b| a.cmp_key(b));
    Ok(out)
}

fn shift_sequence() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=24).flat_map(|k| [k, -k]))
}

/// Complete factorization over the coefficient field: unit times monic
/// irreducible factors with multiplicities. Rejects the zero polynomial.
pub fn factor_over_field(p: &FieldPoly) -> Result<FieldFactorization, FieldError> {
    let lc = p.leading().ok_or(FieldError::ZeroPolynomial)?.clone();
    let monic = p.monic()?;
    let mut factors: Vec<(FieldPoly, u32)> = Vec::new();
    for (part, mult) in monic.squarefree_decomposition()? {
        for f in factor_squarefree(&part)? {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|a, b| a.0.cmp_key(&b.0).then(a.1.cmp(&b.1)));
    let out = FieldFactorization { unit: lc, factors };
    debug_assert_eq!(out.expand(), *p);
    Ok(out)
}

/// Adjoin a root of the monic irreducible h ∈ K[x] (deg ≥ 2): returns the
/// field ℚ[γ] = K(β) for γ = β + s·α with the smallest shift s giving a
/// squarefree norm. γ's minimal polynomial is that norm.
pub(crate) fn extend_field(h: &FieldPoly) -> Result<Arc<NumberField>, FieldError> {
    debug_assert!(h.degree().map_or(false, |d| d >= 2));
    for shift in shift_sequence() {
        let norm = shifted_norm(h, shift);
        if !norm.gcd(&norm.derivative()).is_one() {
            continue;
        }
        let min_poly = norm
            .to_int()
            .expect("norm of a monic algebraic-integer polynomial is integer monic");
        return NumberField::new(min_poly);
    }
    Err(FieldError::ShiftExhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Sign;

    #[test]
    fn norm_over_sqrt2() {
        // x − α over ℚ[√2]: norm = (x − √2)(x + √2) = x² − 2
        let k = NumberField::new(IntPoly::from_i64(&[-2, 0, 1])).unwrap();
        let a = AlgebraicNumber::generator(k.clone());
        let p = FieldPoly::new(k.clone(), vec![a.neg(), AlgebraicNumber::one(k.clone())]);
        let n = shifted_norm(&p, 0);
        assert_eq!(n, RatPoly::from_i64(&[-2, 0, 1]));
    }

    #[test]
    fn factors_x2_minus_2_over_sqrt2() {
        let k = NumberField::new(IntPoly::from_i64(&[-2, 0, 1])).unwrap();
        let p = FieldPoly::from_ratpoly(k.clone(), &RatPoly::from_i64(&[-2, 0, 1]));
        let fac = factor_over_field(&p).unwrap();
        assert_eq!(fac.factors.len(), 2);
        for (f, m) in &fac.factors {
            assert_eq!(*m, 1);
            assert_eq!(f.degree(), Some(1));
        }
        assert_eq!(fac.expand(), p);
        // the roots are ±α
        let a = AlgebraicNumber::generator(k.clone());
        let roots: Vec<AlgebraicNumber> = fac
            .factors
            .iter()
            .map(|(f, _)| f.coeff(0).neg())
            .collect();
        assert!(roots.contains(&a));
        assert!(roots.contains(&a.neg()));
    }

    #[test]
    fn x2_minus_2_irreducible_over_rationals() {
        let q = NumberField::rationals();
        let p = FieldPoly::from_ratpoly(q, &RatPoly::from_i64(&[-2, 0, 1]));
        let fac = factor_over_field(&p).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0].0.degree(), Some(2));
    }

    #[test]
    fn cyclic_cubic_splits_over_itself() {
        // t³ − 3t + 1 has square discriminant 81: the field of one root
        // contains all three
        let k = NumberField::new(IntPoly::from_i64(&[1, -3, 0, 1])).unwrap();
        let p = FieldPoly::from_ratpoly(k.clone(), &RatPoly::from_i64(&[1, -3, 0, 1]));
        let fac = factor_over_field(&p).unwrap();
        assert_eq!(fac.factors.len(), 3);
        let poly = IntPoly::from_i64(&[1, -3, 0, 1]);
        for (f, _) in &fac.factors {
            assert_eq!(f.degree(), Some(1));
            let root = f.coeff(0).neg();
            // exact substitution annihilates
            let val = FieldPoly::from_ratpoly(k.clone(), &poly.to_rat()).eval(&root);
            assert_eq!(val.sign(), Sign::Zero);
            assert!(val.is_zero());
        }
    }

    #[test]
    fn extend_by_quadratic() {
        // adjoin √3 to ℚ[√2]: degree-4 field
        let k = NumberField::new(IntPoly::from_i64(&[-2, 0, 1])).unwrap();
        let h = FieldPoly::from_ratpoly(k, &RatPoly::from_i64(&[-3, 0, 1]));
        let big = extend_field(&h).unwrap();
        assert_eq!(big.degree(), 4);
        // and x²−3 now has a root there
        let p2 = FieldPoly::from_ratpoly(big.clone(), &RatPoly::from_i64(&[-3, 0, 1]));
        let fac = factor_over_field(&p2).unwrap();
        assert!(fac.factors.iter().all(|(f, _)| f.degree() == Some(1)));
    }

    #[test]
    fn multiplicities_preserved_over_field() {
        let k = NumberField::new(IntPoly::from_i64(&[-2, 0, 1])).unwrap();
        let a = AlgebraicNumber::generator(k.clone());
        let lin = FieldPoly::new(k.clone(), vec![a.neg(), AlgebraicNumber::one(k.clone())]);
        let p = lin.mul(&lin).mul(&FieldPoly::from_ratpoly(
            k.clone(),
            &RatPoly::from_i64(&[1, 1]),
        ));
        let fac = factor_over_field(&p).unwrap();
        let mults: Vec<u32> = fac.factors.iter().map(|(_, m)| *m).collect();
        let mut sorted = mults.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2]);
        assert_eq!(fac.expand(), p);
    }
}
