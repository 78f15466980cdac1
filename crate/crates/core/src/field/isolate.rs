//! Real-root isolation and certified refinement.
//!
//! Sturm sequences over exact rationals give root counts in dyadic
//! intervals; refinement is bisection with a dyadically rounded Newton
//! acceleration that falls back to plain bisection whenever the Newton
//! point leaves the bracket.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{IntPoly, RatPoly};

/// Closed interval with dyadic rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Midpoint as f64; adequate once the width is far below 1 ulp.
    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.mid())
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let cands = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        Interval {
            lo: cands.iter().min().unwrap().clone(),
            hi: cands.iter().max().unwrap().clone(),
        }
    }
}

pub fn rat_to_f64(x: &BigRational) -> f64 {
    // scale numerator so the integer division keeps 80 bits of precision
    let shift = 80i64;
    let scaled = x.numer() << shift as usize;
    let q = scaled / x.denom();
    let qf = bigint_to_f64(&q);
    qf / (shift as f64).exp2()
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    // BigInt -> f64 with rounding; adequate for display/plot purposes
    let s = x.to_string();
    s.parse::<f64>().unwrap_or(f64::NAN)
}

/// Sign of p at a rational point, computed with integer arithmetic only.
pub fn sign_at(p: &IntPoly, x: &BigRational) -> i32 {
    if p.is_zero() {
        return 0;
    }
    let n = p.degree().unwrap();
    let a = x.numer();
    let b = x.denom();
    // p(a/b)·bⁿ = Σ cᵢ aⁱ b^(n−i)
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    let mut terms: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in (0..=n).rev() {
        terms.push(p.coeff(i) * &bpow);
        bpow *= b;
    }
    for t in terms.iter() {
        acc = acc * a + t;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Sturm chain of p: p, p′, then negated remainders, each scaled to a
/// primitive integer polynomial by a positive rational (signs preserved).
pub fn sturm_sequence(p: &IntPoly) -> Vec<IntPoly> {
    let mut seq = Vec::new();
    if p.is_zero() {
        return seq;
    }
    seq.push(p.primitive_part().mul_scalar(&p.content().signum()));
    let dp = p.derivative();
    if dp.is_zero() {
        return seq;
    }
    seq.push(dp.clone());
    loop {
        let n = seq.len();
        let r = seq[n - 2].to_rat().rem(&seq[n - 1].to_rat());
        if r.is_zero() {
            return seq;
        }
        let (cont, prim) = (-&r).content_primitive();
        let next = if cont.is_negative() { -&prim } else { prim };
        seq.push(next);
        if seq.last().unwrap().degree() == Some(0) {
            return seq;
        }
    }
}

fn sign_variations(seq: &[IntPoly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in seq {
        let s = sign_at(p, x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of the squarefree polynomial behind `seq`
/// in the interval (lo, hi]; endpoints must not be roots.
pub fn count_roots(seq: &[IntPoly], lo: &BigRational, hi: &BigRational) -> usize {
    if lo >= hi {
        return 0;
    }
    sign_variations(seq, lo) - sign_variations(seq, hi)
}

/// 1 + ⌈height/|lc|⌉: every real root lies strictly inside ±bound.
pub fn cauchy_bound(p: &IntPoly) -> BigInt {
    let lc = p.leading().expect("nonzero polynomial").abs();
    let h = p.height();
    BigInt::one() + (h + &lc - BigInt::one()) / lc
}

/// Total number of distinct real roots.
pub fn count_real_roots(p: &IntPoly) -> usize {
    let sf = p.squarefree_part();
    if sf.degree().map_or(true, |d| d == 0) {
        return 0;
    }
    let seq = sturm_sequence(&sf);
    let b = BigRational::from_integer(cauchy_bound(&sf));
    count_roots(&seq, &(-&b), &b)
}

/// Isolating interval for the largest real root of a squarefree polynomial
/// with no rational roots (or any squarefree polynomial whose dyadic
/// bisection path avoids roots). `None` when there is no real root.
pub fn isolate_largest_real_root(p: &IntPoly) -> Option<Interval> {
    let seq = sturm_sequence(p);
    let bound = BigRational::from_integer(cauchy_bound(p));
    let mut lo = -bound.clone();
    let mut hi = bound;
    if count_roots(&seq, &lo, &hi) == 0 {
        return None;
    }
    loop {
        if count_roots(&seq, &lo, &hi) == 1 {
            return Some(Interval { lo, hi });
        }
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        debug_assert!(sign_at(p, &mid) != 0, "dyadic bisection hit a root");
        if count_roots(&seq, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// One certified shrink step for a bracket with a single simple root:
/// a bisection cut, then a Newton cut when the (dyadically rounded) Newton
/// point stays inside the bracket.
pub fn refine_step(p: &IntPoly, dp: &IntPoly, iv: &mut Interval) {
    let s_lo = sign_at(p, &iv.lo);
    debug_assert!(s_lo != 0 && sign_at(p, &iv.hi) != 0);
    // bisection
    let mid = iv.mid();
    let s_mid = sign_at(p, &mid);
    if s_mid == 0 {
        // mid is dyadic, so this only happens for a dyadic rational root;
        // collapse to the exact point
        iv.lo = mid.clone();
        iv.hi = mid;
        return;
    }
    if s_mid == s_lo {
        iv.lo = mid;
    } else {
        iv.hi = mid;
    }
    // Newton from the new midpoint, rounded to a dyadic grid about twice as
    // fine as the current width
    let mid = iv.mid();
    let deriv = dp.eval_rat(&mid);
    if deriv.is_zero() {
        return;
    }
    let newton = &mid - p.eval_rat(&mid) / deriv;
    let bits = 2 * width_bits(&iv.width()).unwrap_or(8) + 8;
    let rounded = round_dyadic(&newton, bits);
    if rounded <= iv.lo || rounded >= iv.hi {
        return;
    }
    let s_r = sign_at(p, &rounded);
    if s_r == 0 {
        iv.lo = rounded.clone();
        iv.hi = rounded;
    } else if s_r == sign_at(p, &iv.lo) {
        iv.lo = rounded;
    } else {
        iv.hi = rounded;
    }
}

/// ⌈−log₂ width⌉ for width ≤ 1; `None` for wider intervals.
pub fn width_bits(width: &BigRational) -> Option<u32> {
    if width > &BigRational::one() || width.is_zero() {
        return None;
    }
    let mut bits = 0u32;
    let mut w = width.clone();
    let one = BigRational::one();
    while w < one {
        w = &w + &w;
        bits += 1;
        if bits > 1_000_000 {
            break;
        }
    }
    Some(bits)
}

/// Round to the nearest multiple of 2^±bits.
pub fn round_dyadic(x: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits as usize;
    let scaled = x * BigRational::from_integer(scale.clone());
    let rounded = scaled.round();
    BigRational::new(rounded.to_integer(), scale)
}

/// Refine until width ≤ 2^−bits.
pub fn refine_to_bits(p: &IntPoly, iv: &mut Interval, bits: u32) {
    let target = BigRational::new(BigInt::one(), BigInt::one() << bits as usize);
    let dp = p.derivative();
    while iv.width() > target {
        refine_step(p, &dp, iv);
    }
}

/// Interval Horner evaluation of q over an interval for the variable.
pub fn eval_poly_interval(q: &RatPoly, x: &Interval) -> Interval {
    let mut acc = Interval::point(BigRational::zero());
    for c in q.coeffs().iter().rev() {
        acc = acc.mul(x).add(&Interval::point(c.clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_roots_of_quadratic() {
        // x² − 2 has two real roots
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(count_real_roots(&p), 2);
        // x² + 1 has none
        assert_eq!(count_real_roots(&IntPoly::from_i64(&[1, 0, 1])), 0);
        // cubic t³ − 3t + 1 is totally real
        assert_eq!(count_real_roots(&IntPoly::from_i64(&[1, -3, 0, 1])), 3);
    }

    #[test]
    fn isolates_sqrt_17() {
        let p = IntPoly::from_i64(&[-17, 0, 1]);
        let mut iv = isolate_largest_real_root(&p).unwrap();
        assert!(iv.lo.is_positive() || iv.contains(&BigRational::from_integer(4.into())));
        refine_to_bits(&p, &mut iv, 20);
        let w = iv.width();
        assert!(w <= BigRational::new(1.into(), BigInt::from(1 << 20)));
        // 4.1231056 ± a little
        let mid = iv.to_f64();
        assert!((mid - 17f64.sqrt()).abs() < 1e-5);
    }

    #[test]
    fn refinement_nests() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        let mut iv = isolate_largest_real_root(&p).unwrap();
        let outer = iv.clone();
        refine_to_bits(&p, &mut iv, 30);
        assert!(outer.lo <= iv.lo && iv.hi <= outer.hi);
        let inner30 = iv.clone();
        refine_to_bits(&p, &mut iv, 64);
        assert!(inner30.lo <= iv.lo && iv.hi <= inner30.hi);
    }

    #[test]
    fn golden_ratio_conjugate_field() {
        // t² + t − 1: roots (−1±√5)/2; largest ≈ 0.618
        let p = IntPoly::from_i64(&[-1, 1, 1]);
        let mut iv = isolate_largest_real_root(&p).unwrap();
        refine_to_bits(&p, &mut iv, 40);
        assert!((iv.to_f64() - 0.6180339887498949).abs() < 1e-9);
    }

    #[test]
    fn interval_horner_encloses_value() {
        // q(x) = x² − 2 on [1.4, 1.5]
        let q = RatPoly::from_i64(&[-2, 0, 1]);
        let iv = Interval {
            lo: BigRational::new(14.into(), 10.into()),
            hi: BigRational::new(15.into(), 10.into()),
        };
        let out = eval_poly_interval(&q, &iv);
        assert!(out.contains_zero());
        assert!(out.lo <= BigRational::new((-4).into(), 100.into()));
    }
}
