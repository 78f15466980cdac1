//! Univariate polynomials with coefficients in a number field.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::algebra::RatPoly;

use super::{AlgebraicNumber, FieldError, NumberField};

/// Polynomial over ℚ[α], dense, trailing zeros trimmed.
#[derive(Clone)]
pub struct FieldPoly {
    field: Arc<NumberField>,
    coeffs: Vec<AlgebraicNumber>,
}

impl PartialEq for FieldPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
            && (self.coeffs.is_empty() || NumberField::same_field(&self.field, &other.field))
    }
}

impl Eq for FieldPoly {}

/// `poly = unit · Π factorᵢ^multiplicityᵢ` with monic irreducible factors.
#[derive(Clone, Debug)]
pub struct FieldFactorization {
    pub unit: AlgebraicNumber,
    pub factors: Vec<(FieldPoly, u32)>,
}

impl FieldFactorization {
    pub fn expand(&self) -> FieldPoly {
        let mut acc = FieldPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

impl FieldPoly {
    pub fn new(field: Arc<NumberField>, mut coeffs: Vec<AlgebraicNumber>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        FieldPoly { field, coeffs }
    }

    pub fn zero(field: Arc<NumberField>) -> Self {
        FieldPoly {
            field,
            coeffs: vec![],
        }
    }

    pub fn one(field: Arc<NumberField>) -> Self {
        let one = AlgebraicNumber::one(field.clone());
        FieldPoly {
            field,
            coeffs: vec![one],
        }
    }

    pub fn constant(c: AlgebraicNumber) -> Self {
        FieldPoly::new(c.field().clone(), vec![c])
    }

    /// Embed a rational polynomial into K[x].
    pub fn from_ratpoly(field: Arc<NumberField>, p: &RatPoly) -> Self {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| AlgebraicNumber::from_rational(field.clone(), c.clone()))
            .collect();
        FieldPoly::new(field, coeffs)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

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

    pub fn coeffs(&self) -> &[AlgebraicNumber] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> AlgebraicNumber {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| AlgebraicNumber::zero(self.field.clone()))
    }

    pub fn leading(&self) -> Option<&AlgebraicNumber> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading()
            .and_then(|c| c.as_rational())
            .map_or(false, |q| q == BigRational::from_integer(1.into()))
    }

    pub fn add(&self, o: &FieldPoly) -> FieldPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        FieldPoly::new(
            self.field.clone(),
            (0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect(),
        )
    }

    pub fn sub(&self, o: &FieldPoly) -> FieldPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        FieldPoly::new(
            self.field.clone(),
            (0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect(),
        )
    }

    pub fn mul(&self, o: &FieldPoly) -> FieldPoly {
        if self.is_zero() || o.is_zero() {
            return FieldPoly::zero(self.field.clone());
        }
        let mut out =
            vec![AlgebraicNumber::zero(self.field.clone()); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        FieldPoly::new(self.field.clone(), out)
    }

    pub fn scale(&self, s: &AlgebraicNumber) -> FieldPoly {
        FieldPoly::new(
            self.field.clone(),
            self.coeffs.iter().map(|c| c * s).collect(),
        )
    }

    pub fn monic(&self) -> Result<FieldPoly, FieldError> {
        match self.leading() {
            None => Ok(self.clone()),
            Some(lc) => Ok(self.scale(&lc.inv()?)),
        }
    }

    pub fn divrem(&self, d: &FieldPoly) -> Result<(FieldPoly, FieldPoly), FieldError> {
        let dd = d.degree().ok_or(FieldError::DivisionByZero)?;
        let lc_inv = d.leading().unwrap().inv()?;
        let mut r = self.clone();
        let mut q = vec![
            AlgebraicNumber::zero(self.field.clone());
            self.coeffs.len().saturating_sub(dd)
        ];
        while let Some(n) = r.degree() {
            if n < dd {
                break;
            }
            let t = r.leading().unwrap() * &lc_inv;
            q[n - dd] = t.clone();
            let sub = d.scale(&t).shift(n - dd);
            r = r.sub(&sub);
        }
        Ok((FieldPoly::new(self.field.clone(), q), r))
    }

    pub fn rem(&self, d: &FieldPoly) -> Result<FieldPoly, FieldError> {
        Ok(self.divrem(d)?.1)
    }

    pub fn shift(&self, k: usize) -> FieldPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![AlgebraicNumber::zero(self.field.clone()); k];
        coeffs.extend(self.coeffs.iter().cloned());
        FieldPoly::new(self.field.clone(), coeffs)
    }

    pub fn derivative(&self) -> FieldPoly {
        if self.coeffs.len() <= 1 {
            return FieldPoly::zero(self.field.clone());
        }
        FieldPoly::new(
            self.field.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&BigRational::from_integer(i.into())))
                .collect(),
        )
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &FieldPoly) -> Result<FieldPoly, FieldError> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &AlgebraicNumber) -> AlgebraicNumber {
        let mut acc = AlgebraicNumber::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Compose with x + s for an algebraic shift s.
    pub fn compose_shift(&self, s: &AlgebraicNumber) -> FieldPoly {
        let field = self.field.clone();
        let shift = FieldPoly::new(
            field.clone(),
            vec![s.clone(), AlgebraicNumber::one(field.clone())],
        );
        let mut acc = FieldPoly::zero(field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&shift).add(&FieldPoly::constant(c.clone()));
        }
        acc
    }

    /// Squarefree decomposition (Yun) over the field: squarefree monic
    /// parts with multiplicities.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(FieldPoly, u32)>, FieldError> {
        let p = self.monic()?;
        if p.degree().map_or(true, |d| d == 0) {
            return Ok(vec![]);
        }
        let dp = p.derivative();
        let g = p.gcd(&dp)?;
        if g.degree() == Some(0) {
            return Ok(vec![(p, 1)]);
        }
        let mut out = Vec::new();
        let mut c = p.divrem(&g)?.0;
        let mut d = dp.divrem(&g)?.0.sub(&c.derivative());
        let mut i = 1u32;
        while c.degree() != Some(0) {
            let a = c.gcd(&d)?;
            if a.degree() != Some(0) {
                out.push((a.clone(), i));
            }
            c = c.divrem(&a)?.0;
            d = d.divrem(&a)?.0.sub(&c.derivative());
            i += 1;
        }
        Ok(out)
    }

    /// Deterministic ordering key: degree, then coefficient vectors.
    pub(crate) fn cmp_key(&self, other: &FieldPoly) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for i in 0..self.coeffs.len().max(other.coeffs.len()) {
                let a = self.coeff(i);
                let b = other.coeff(i);
                let ord = a.coeffs().coeffs().cmp(b.coeffs().coeffs());
                if ord != std::cmp::Ordering::Equal {
                    return ord;
                }
            }
            std::cmp::Ordering::Equal
        })
    }
}

impl fmt::Debug for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "FieldPoly(0)");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({})", c),
                1 => format!("({})*x", c),
                _ => format!("({})*x^{}", c, i),
            })
            .collect();
        write!(f, "FieldPoly({})", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntPoly;

    #[test]
    fn divrem_over_sqrt2() {
        let k = NumberField::new(IntPoly::from_i64(&[-2, 0, 1])).unwrap();
        let a = AlgebraicNumber::generator(k.clone());
        // x² − 2 = (x − α)(x + α) over ℚ[√2]
        let p = FieldPoly::from_ratpoly(k.clone(), &RatPoly::from_i64(&[-2, 0, 1]));
        let lin = FieldPoly::new(
            k.clone(),
            vec![a.neg(), AlgebraicNumber::one(k.clone())],
        );
        let (q, r) = p.divrem(&lin).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.degree(), Some(1));
        assert_eq!(q.coeff(0), a);
        // multiply back
        assert_eq!(q.mul(&lin), p);
    }

    #[test]
    fn yun_over_field() {
        let k = NumberField::new(IntPoly::from_i64(&[-2, 0, 1])).unwrap();
        let a = AlgebraicNumber::generator(k.clone());
        let lin = FieldPoly::new(k.clone(), vec![a.neg(), AlgebraicNumber::one(k.clone())]);
        let other = FieldPoly::from_ratpoly(k.clone(), &RatPoly::from_i64(&[1, 1]));
        let p = lin.mul(&lin).mul(&other);
        let parts = p.squarefree_decomposition().unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].0, other.monic().unwrap());
        assert_eq!(parts[0].1, 1);
        assert_eq!(parts[1].0, lin);
        assert_eq!(parts[1].1, 2);
    }
}
