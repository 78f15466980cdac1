//! Number fields ℚ[α] with certified real embeddings.
//!
//! A [`NumberField`] is presented by the monic irreducible minimal
//! polynomial of a primitive element α together with a dyadic isolating
//! interval that pins down which real root α denotes. Elements are residue
//! classes of rational polynomials mod the minimal polynomial; arithmetic,
//! zero tests, and sign decisions are all exact. The isolating interval is
//! refined on demand behind a lock, so shared fields stay consistent across
//! threads.

mod fieldpoly;
mod isolate;
mod splitting;
mod trager;

pub use fieldpoly::{FieldFactorization, FieldPoly};
pub use isolate::{count_real_roots, rat_to_f64, Interval};
pub use splitting::{splitting_field, SplittingData};
pub use trager::factor_over_field;

use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{factor_integer_poly, AlgebraError, IntPoly, RatPoly};
use isolate::{
    count_roots, eval_poly_interval, isolate_largest_real_root, refine_to_bits, sturm_sequence,
};

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("minimal polynomial is not irreducible over ℚ")]
    NotIrreducible,
    #[error("minimal polynomial must be monic")]
    NotMonic,
    #[error("polynomial has no real root to embed")]
    NoRealRoot,
    #[error("interval does not isolate exactly one real root")]
    BadIsolation,
    #[error("operands belong to different number fields")]
    MixedFields,
    #[error("division by the zero element")]
    DivisionByZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has non-real roots; only totally real spectra are supported")]
    ComplexRoots,
    #[error("no primitive-element shift produced a squarefree norm")]
    ShiftExhausted,
    #[error("malformed serialized value: {0}")]
    Parse(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The field ℚ[α] for a fixed real algebraic number α.
///
/// The trivial field ℚ is represented by the minimal polynomial x (α = 0).
pub struct NumberField {
    min_poly: IntPoly,
    degree: usize,
    sturm: Vec<IntPoly>,
    interval: Mutex<Interval>,
}

impl NumberField {
    /// The rationals, as the degenerate field with minimal polynomial x.
    pub fn rationals() -> Arc<NumberField> {
        let x = IntPoly::x();
        let sturm = sturm_sequence(&x);
        Arc::new(NumberField {
            min_poly: x,
            degree: 1,
            sturm,
            interval: Mutex::new(Interval::point(BigRational::zero())),
        })
    }

    /// Field presented by a monic irreducible polynomial, embedding α as its
    /// largest real root.
    pub fn new(min_poly: IntPoly) -> Result<Arc<NumberField>, FieldError> {
        if !min_poly.is_monic() {
            return Err(FieldError::NotMonic);
        }
        let degree = min_poly.degree().unwrap();
        if degree == 1 {
            // x − c: α is the rational c; exact point interval
            let c = -min_poly.coeff(0);
            let sturm = sturm_sequence(&min_poly);
            return Ok(Arc::new(NumberField {
                min_poly,
                degree: 1,
                sturm,
                interval: Mutex::new(Interval::point(BigRational::from_integer(c))),
            }));
        }
        let fac = factor_integer_poly(&min_poly)?;
        if fac.factors.len() != 1 || fac.factors[0].1 != 1 {
            return Err(FieldError::NotIrreducible);
        }
        let interval = isolate_largest_real_root(&min_poly).ok_or(FieldError::NoRealRoot)?;
        let sturm = sturm_sequence(&min_poly);
        Ok(Arc::new(NumberField {
            min_poly,
            degree,
            sturm,
            interval: Mutex::new(interval),
        }))
    }

    /// Field with an explicitly supplied isolating interval (checked to
    /// contain exactly one real root).
    pub fn with_interval(
        min_poly: IntPoly,
        lo: BigRational,
        hi: BigRational,
    ) -> Result<Arc<NumberField>, FieldError> {
        if !min_poly.is_monic() {
            return Err(FieldError::NotMonic);
        }
        let degree = min_poly.degree().unwrap();
        if degree == 1 {
            let c = BigRational::from_integer(-min_poly.coeff(0));
            if !(lo <= c && c <= hi) {
                return Err(FieldError::BadIsolation);
            }
            return NumberField::new(min_poly);
        }
        let fac = factor_integer_poly(&min_poly)?;
        if fac.factors.len() != 1 || fac.factors[0].1 != 1 {
            return Err(FieldError::NotIrreducible);
        }
        let sturm = sturm_sequence(&min_poly);
        if count_roots(&sturm, &lo, &hi) != 1 {
            return Err(FieldError::BadIsolation);
        }
        Ok(Arc::new(NumberField {
            min_poly,
            degree,
            sturm,
            interval: Mutex::new(Interval { lo, hi }),
        }))
    }

    pub fn min_poly(&self) -> &IntPoly {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_rationals(&self) -> bool {
        self.degree == 1
    }

    /// Snapshot of the current isolating interval.
    pub fn interval(&self) -> Interval {
        self.interval.lock().unwrap().clone()
    }

    /// Refine the shared isolating interval to width ≤ 2^−bits and return
    /// it. Refinements nest.
    pub fn refine_to(&self, bits: u32) -> Interval {
        let mut guard = self.interval.lock().unwrap();
        refine_to_bits(&self.min_poly, &mut guard, bits);
        guard.clone()
    }

    /// Do two handles denote the same embedded field? Pointer identity, or
    /// an equal minimal polynomial whose isolating intervals certify the
    /// same real root.
    pub fn same_field(a: &Arc<NumberField>, b: &Arc<NumberField>) -> bool {
        if Arc::ptr_eq(a, b) {
            return true;
        }
        if a.min_poly != b.min_poly {
            return false;
        }
        if a.degree == 1 {
            return true;
        }
        let ia = a.interval();
        let ib = b.interval();
        let lo = ia.lo.clone().max(ib.lo.clone());
        let hi = ia.hi.clone().min(ib.hi.clone());
        if lo >= hi {
            return false;
        }
        count_roots(&a.sturm, &lo, &hi) == 1
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumberField(α: {} = 0)", self.min_poly)
    }
}

/// Exact sign of an algebraic number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// An element of a [`NumberField`], stored as the rational polynomial of
/// degree < deg(α) representing its residue class.
#[derive(Clone)]
pub struct AlgebraicNumber {
    field: Arc<NumberField>,
    coeffs: RatPoly,
}

impl AlgebraicNumber {
    pub fn new(field: Arc<NumberField>, coeffs: RatPoly) -> Self {
        let reduced = coeffs.rem(&field.min_poly().to_rat());
        AlgebraicNumber {
            field,
            coeffs: reduced,
        }
    }

    pub fn zero(field: Arc<NumberField>) -> Self {
        AlgebraicNumber {
            field,
            coeffs: RatPoly::zero(),
        }
    }

    pub fn one(field: Arc<NumberField>) -> Self {
        AlgebraicNumber {
            field,
            coeffs: RatPoly::one(),
        }
    }

    /// The generator α itself.
    pub fn generator(field: Arc<NumberField>) -> Self {
        AlgebraicNumber::new(field, RatPoly::x())
    }

    pub fn from_rational(field: Arc<NumberField>, q: BigRational) -> Self {
        AlgebraicNumber {
            field,
            coeffs: RatPoly::constant(q),
        }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &RatPoly {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Exact rational value when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.coeffs.coeff(0)),
            _ => None,
        }
    }

    fn require_same_field(&self, other: &Self) -> Result<(), FieldError> {
        if NumberField::same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.require_same_field(other)?;
        Ok(AlgebraicNumber {
            field: self.field.clone(),
            coeffs: &self.coeffs + &other.coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.require_same_field(other)?;
        Ok(AlgebraicNumber {
            field: self.field.clone(),
            coeffs: &self.coeffs - &other.coeffs,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.require_same_field(other)?;
        let prod = (&self.coeffs * &other.coeffs).rem(&self.field.min_poly().to_rat());
        Ok(AlgebraicNumber {
            field: self.field.clone(),
            coeffs: prod,
        })
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let modulus = self.field.min_poly().to_rat();
        let (g, s, _) = self.coeffs.xgcd(&modulus);
        debug_assert!(g.is_one(), "element coprime to an irreducible modulus");
        Ok(AlgebraicNumber {
            field: self.field.clone(),
            coeffs: s.rem(&modulus),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.require_same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn neg(&self) -> Self {
        AlgebraicNumber {
            field: self.field.clone(),
            coeffs: -&self.coeffs,
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        AlgebraicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.mul_scalar(q),
        }
    }

    /// Certified enclosure of the real value, of width ≤ 2^−bits. Repeated
    /// calls nest.
    pub fn refine(&self, bits: u32) -> Interval {
        if let Some(q) = self.as_rational() {
            return Interval::point(q);
        }
        let target = BigRational::new(BigInt::one(), BigInt::one() << bits as usize);
        let mut field_bits = bits.max(64);
        loop {
            let alpha = self.field.refine_to(field_bits);
            let value = eval_poly_interval(&self.coeffs, &alpha);
            if value.width() <= target {
                return value;
            }
            field_bits *= 2;
        }
    }

    /// Exact sign: the zero test is the coefficient vector, otherwise the
    /// embedding interval is refined (64 bits, doubling) until decisive.
    pub fn sign(&self) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        if let Some(q) = self.as_rational() {
            return if q.is_positive() {
                Sign::Positive
            } else {
                Sign::Negative
            };
        }
        let mut bits = 64u32;
        loop {
            let alpha = self.field.refine_to(bits);
            let value = eval_poly_interval(&self.coeffs, &alpha);
            if value.lo.is_positive() {
                return Sign::Positive;
            }
            if value.hi.is_negative() {
                return Sign::Negative;
            }
            bits *= 2;
        }
    }

    /// Exact total order on elements of one field via sign of difference.
    pub fn cmp_exact(&self, other: &Self) -> std::cmp::Ordering {
        match (self - other).sign() {
            Sign::Negative => std::cmp::Ordering::Less,
            Sign::Zero => std::cmp::Ordering::Equal,
            Sign::Positive => std::cmp::Ordering::Greater,
        }
    }

    /// Double-precision approximation from a certified 64-bit enclosure.
    pub fn to_f64(&self) -> f64 {
        self.refine(64).to_f64()
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        NumberField::same_field(&self.field, &other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgebraicNumber {}

macro_rules! an_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: &AlgebraicNumber) -> AlgebraicNumber {
                self.$checked(rhs).expect("operands from the same field")
            }
        }
        impl std::ops::$trait for AlgebraicNumber {
            type Output = AlgebraicNumber;
            fn $method(self, rhs: AlgebraicNumber) -> AlgebraicNumber {
                (&self).$checked(&rhs).expect("operands from the same field")
            }
        }
    };
}

an_binop!(Add, add, checked_add);
an_binop!(Sub, sub, checked_sub);
an_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        AlgebraicNumber::neg(self)
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicNumber({})", self.coeffs)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format!("{}", self.coeffs).replace('x', "α");
        write!(f, "{}", s)
    }
}

/// JSON form: `{"min_poly": [ints], "coeffs": ["p/q", ...],
/// "interval": ["dyadic", "dyadic"]}`.
pub fn algebraic_to_json(x: &AlgebraicNumber) -> serde_json::Value {
    let field = x.field();
    let iv = field.refine_to(64);
    let min_poly: Vec<serde_json::Value> = field
        .min_poly()
        .coeffs()
        .iter()
        .map(bigint_json)
        .collect();
    let coeffs: Vec<serde_json::Value> = (0..field.degree())
        .map(|i| serde_json::Value::String(x.coeffs().coeff(i).to_string()))
        .collect();
    serde_json::json!({
        "min_poly": min_poly,
        "coeffs": coeffs,
        "interval": [iv.lo.to_string(), iv.hi.to_string()],
    })
}

fn bigint_json(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::String(c.to_string()),
    }
}

/// Inverse of [`algebraic_to_json`].
pub fn algebraic_from_json(v: &serde_json::Value) -> Result<AlgebraicNumber, FieldError> {
    let parse_err = |m: &str| FieldError::Parse(m.to_string());
    let mp = v
        .get("min_poly")
        .and_then(|m| m.as_array())
        .ok_or_else(|| parse_err("missing min_poly"))?;
    let coeffs_json = v
        .get("coeffs")
        .and_then(|m| m.as_array())
        .ok_or_else(|| parse_err("missing coeffs"))?;
    let iv = v
        .get("interval")
        .and_then(|m| m.as_array())
        .ok_or_else(|| parse_err("missing interval"))?;
    if iv.len() != 2 {
        return Err(parse_err("interval must have two endpoints"));
    }
    let mut mp_coeffs = Vec::with_capacity(mp.len());
    for c in mp {
        let value = match c {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| parse_err("non-integer min_poly coefficient"))?,
            serde_json::Value::String(s) => s
                .parse::<BigInt>()
                .map_err(|_| parse_err("bad min_poly coefficient"))?,
            _ => return Err(parse_err("bad min_poly coefficient")),
        };
        mp_coeffs.push(value);
    }
    let min_poly = IntPoly::new(mp_coeffs);
    if min_poly.is_zero() {
        return Err(parse_err("zero minimal polynomial"));
    }
    let parse_rat = |s: &serde_json::Value| -> Result<BigRational, FieldError> {
        s.as_str()
            .ok_or_else(|| parse_err("rational must be a string"))?
            .parse::<BigRational>()
            .map_err(|_| parse_err("bad rational"))
    };
    let lo = parse_rat(&iv[0])?;
    let hi = parse_rat(&iv[1])?;
    let field = NumberField::with_interval(min_poly, lo, hi)?;
    let mut cs = Vec::with_capacity(coeffs_json.len());
    for c in coeffs_json {
        cs.push(parse_rat(c)?);
    }
    Ok(AlgebraicNumber::new(field, RatPoly::new(cs)))
}
