//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ratpoly::RatPoly;
use super::AlgebraError;

/// Polynomial over ℤ, stored dense with `coeffs[i]` the coefficient of xⁱ.
///
/// Trailing zeros are trimmed, so the leading coefficient is nonzero unless
/// the polynomial is zero. The zero polynomial has an empty coefficient
/// vector and no degree (`degree()` returns `None` rather than −1).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// The monomial x.
    pub fn x() -> Self {
        IntPoly::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// c·xᵏ
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        IntPoly::new(v)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of xⁱ (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::new(coeffs)
    }

    /// Signed content: gcd of the coefficients carrying the sign of the
    /// leading coefficient, so that `self = content · primitive_part` with a
    /// primitive part of positive leading coefficient. Zero for the zero
    /// polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading().map_or(false, |c| c.is_negative()) {
            g = -g;
        }
        g
    }

    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    pub fn mul_scalar(&self, s: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiply by xᵏ.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly::new(coeffs)
    }

    /// Pseudo-remainder: the R in lc(d)^(deg a − deg d + 1)·a = q·d + R.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let mut r = self.clone();
        let lc = d.leading().unwrap().clone();
        let mut steps = match r.degree() {
            Some(n) if n >= dd => n - dd + 1,
            _ => 0,
        };
        while let Some(n) = r.degree() {
            if n < dd {
                break;
            }
            let top = r.leading().unwrap().clone();
            r = r.mul_scalar(&lc) - d.mul_scalar(&top).shift(n - dd);
            steps -= 1;
        }
        // keep the classical scaling lc^(deg a − deg d + 1) exactly
        for _ in 0..steps {
            r = r.mul_scalar(&lc);
        }
        r
    }

    /// Exact division; `None` when `d` does not divide `self` over ℤ.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let (q, r) = self.to_rat().divrem(&d.to_rat());
        if !r.is_zero() {
            return None;
        }
        q.to_int()
    }

    /// Greatest common divisor in ℤ\[x\] (primitive, positive leading
    /// coefficient, times the gcd of contents), via the subresultant PRS.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().mul_scalar(&other.content().abs());
        }
        if other.is_zero() {
            return self.primitive_part().mul_scalar(&self.content().abs());
        }
        let cont = self.content().abs().gcd(&other.content().abs());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.primitive_part().mul_scalar(&cont);
            }
            if b.degree() == Some(0) {
                return IntPoly::constant(cont);
            }
            let denom = &g * pow_big(&h, delta);
            a = b;
            b = IntPoly::new(r.coeffs.iter().map(|c| exact_div(c, &denom)).collect());
            g = a.leading().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                exact_div(&pow_big(&g, delta), &pow_big(&h, delta - 1))
            };
            if b.degree() == Some(0) {
                return IntPoly::constant(cont);
            }
        }
    }

    /// Resultant Res(self, other) by the subresultant algorithm.
    ///
    /// Zero exactly when the two polynomials share a complex root. Rejects
    /// zero input.
    pub fn resultant(&self, other: &IntPoly) -> Result<BigInt, AlgebraError> {
        let (da, db) = match (self.degree(), other.degree()) {
            (Some(da), Some(db)) => (da, db),
            _ => return Err(AlgebraError::ZeroPolynomial),
        };
        if da == 0 && db == 0 {
            return Ok(BigInt::one());
        }
        if da == 0 {
            return Ok(pow_big(&self.coeffs[0], db));
        }
        if db == 0 {
            return Ok(pow_big(&other.coeffs[0], da));
        }
        let ca = self.content();
        let cb = other.content();
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        let mut sign = BigInt::one();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
            if da % 2 == 1 && db % 2 == 1 {
                sign = -sign;
            }
        }
        // contents contribute cont(a)^deg(b) · cont(b)^deg(a)
        let t = pow_big(&ca, db) * pow_big(&cb, da);
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let (na, nb) = (a.degree().unwrap(), b.degree().unwrap());
            let delta = na - nb;
            if na % 2 == 1 && nb % 2 == 1 {
                sign = -sign;
            }
            let r = a.pseudo_rem(&b);
            let denom = &g * pow_big(&h, delta);
            a = b;
            if r.is_zero() {
                return Ok(BigInt::zero());
            }
            b = IntPoly::new(r.coeffs.iter().map(|c| exact_div(c, &denom)).collect());
            g = a.leading().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                exact_div(&pow_big(&g, delta), &pow_big(&h, delta - 1))
            };
            if b.degree() == Some(0) {
                let na = a.degree().unwrap();
                let res = exact_div(&pow_big(&b.coeffs[0], na), &pow_big(&h, na - 1));
                return Ok(sign * t * res);
            }
        }
    }

    /// Product of the distinct irreducible factors (primitive, positive lc).
    pub fn squarefree_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        if self.degree() == Some(0) {
            return IntPoly::one();
        }
        let p = self.primitive_part();
        let g = p.gcd(&p.derivative());
        if g.degree() == Some(0) {
            return p;
        }
        p.div_exact(&g).expect("gcd divides").primitive_part()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Compose with x + c: returns self(x + c).
    pub fn compose_shift(&self, c: &BigInt) -> IntPoly {
        let mut acc = IntPoly::zero();
        let shift = IntPoly::new(vec![c.clone(), BigInt::one()]);
        for coeff in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &IntPoly::constant(coeff.clone());
        }
        acc
    }

    /// Max-norm of the coefficients.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

pub(crate) fn pow_big(b: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

fn exact_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "non-exact division in subresultant sequence");
    q
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::new(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::new(out)
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_of_zero_is_none() {
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(IntPoly::from_i64(&[0, 0, 0]).degree(), None);
        assert_eq!(IntPoly::from_i64(&[5]).degree(), Some(0));
        assert_eq!(IntPoly::from_i64(&[1, 2, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn resultant_linear_pair() {
        // Res(x−2, x−3) = 2 − 3 = −1
        let a = IntPoly::from_i64(&[-2, 1]);
        let b = IntPoly::from_i64(&[-3, 1]);
        assert_eq!(a.resultant(&b).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn resultant_common_root_is_zero() {
        let a = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(a.resultant(&a).unwrap(), BigInt::zero());
    }

    #[test]
    fn resultant_quadratics() {
        // Res(x²−2, x²−3) = ((√2)²−3)·((−√2)²−3) = 1
        let a = IntPoly::from_i64(&[-2, 0, 1]);
        let b = IntPoly::from_i64(&[-3, 0, 1]);
        assert_eq!(a.resultant(&b).unwrap(), BigInt::one());
    }

    #[test]
    fn resultant_rejects_zero() {
        let a = IntPoly::from_i64(&[1, 1]);
        assert!(a.resultant(&IntPoly::zero()).is_err());
    }

    #[test]
    fn gcd_shared_factor() {
        // gcd(x²−1, x−1) over ℤ
        let a = IntPoly::from_i64(&[-1, 0, 1]);
        let b = IntPoly::from_i64(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        // coprime pair
        let c = IntPoly::from_i64(&[0, 1]);
        let d = IntPoly::from_i64(&[1, 1]);
        assert_eq!(c.gcd(&d), IntPoly::one());
    }

    #[test]
    fn gcd_with_contents() {
        // gcd(2x²−2, 4x−4) = 2(x−1)
        let a = IntPoly::from_i64(&[-2, 0, 2]);
        let b = IntPoly::from_i64(&[-4, 4]);
        assert_eq!(a.gcd(&b), IntPoly::from_i64(&[-2, 2]));
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // (x−1)²(x+2) → (x−1)(x+2)
        let p = IntPoly::from_i64(&[-1, 1]);
        let q = IntPoly::from_i64(&[2, 1]);
        let prod = &(&p * &p) * &q;
        assert_eq!(prod.squarefree_part(), &p * &q);
    }

    #[test]
    fn compose_shift_translates_roots() {
        // p(x) = x² − 2, p(x+1) = x² + 2x − 1
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(p.compose_shift(&BigInt::one()), IntPoly::from_i64(&[-1, 2, 1]));
    }

    #[test]
    fn exact_division() {
        let p = IntPoly::from_i64(&[-4, 0, -5, 0, 1]); // t⁴−5t²−4t? no: t⁴−5t²−4
        let d = IntPoly::from_i64(&[1, 1]);
        let q = p.div_exact(&d);
        if let Some(q) = q {
            assert_eq!(&q * &d, p);
        }
        // t⁴−5t²−4t = t·(t³−5t−4)
        let p = IntPoly::from_i64(&[0, -4, -5, 0, 1]);
        let t = IntPoly::from_i64(&[0, 1]);
        let q = p.div_exact(&t).unwrap();
        assert_eq!(q, IntPoly::from_i64(&[-4, -5, 0, 1]));
        assert!(p.div_exact(&IntPoly::from_i64(&[7, 1])).is_none());
    }
}
