//! Factorization over ℤ: squarefree decomposition (Yun), factorization
//! mod a well-chosen small prime (Berlekamp), quadratic Hensel lifting to
//! a Mignotte-style coefficient bound, and exhaustive subset recombination.
//! Degrees here stay small, so the exponential recombination step is
//! harmless.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intpoly::{pow_big, IntPoly};
use super::modp::{Fp, MPoly};
use super::AlgebraError;

/// `poly = content · Π factorᵢ^multiplicityᵢ` with primitive irreducible
/// factors of positive leading coefficient, sorted by (degree, coefficients).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntFactorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl IntFactorization {
    /// Multiplies the factorization back together.
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.content.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * f;
            }
        }
        acc
    }
}

/// Factor a nonzero integer polynomial into primitive irreducible factors
/// over ℤ with multiplicities.
pub fn factor_integer_poly(p: &IntPoly) -> Result<IntFactorization, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let content = p.content();
    let prim = p.primitive_part();
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    for (part, mult) in yun_squarefree(&prim) {
        for f in factor_squarefree(&part) {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|a, b| cmp_poly(&a.0, &b.0).then(a.1.cmp(&b.1)));
    let out = IntFactorization { content, factors };
    debug_assert_eq!(out.expand(), *p);
    Ok(out)
}

fn cmp_poly(a: &IntPoly, b: &IntPoly) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Yun's algorithm: primitive squarefree parts with multiplicities.
fn yun_squarefree(p: &IntPoly) -> Vec<(IntPoly, u32)> {
    debug_assert!(p.leading().map_or(false, |c| c.is_positive()));
    if p.degree() == Some(0) {
        return vec![];
    }
    let dp = p.derivative();
    let g = p.gcd(&dp);
    if g.degree() == Some(0) {
        return vec![(p.clone(), 1)];
    }
    let mut out = Vec::new();
    let mut c = p.div_exact(&g).expect("gcd divides p");
    let mut d = &dp.div_exact(&g).expect("gcd divides p'") - &c.derivative();
    let mut i = 1u32;
    while c.degree() != Some(0) {
        let a = c.gcd(&d);
        if a.degree() != Some(0) {
            out.push((a.primitive_part(), i));
        }
        c = c.div_exact(&a).expect("gcd divides");
        d = &d.div_exact(&a).expect("gcd divides") - &c.derivative();
        i += 1;
    }
    out
}

/// Factor a primitive squarefree polynomial with positive leading
/// coefficient into irreducible factors.
fn factor_squarefree(p: &IntPoly) -> Vec<IntPoly> {
    let n = p.degree().expect("nonzero");
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![p.clone()];
    }
    let (prime, modular) = choose_prime(p);
    if modular.len() == 1 {
        return vec![p.clone()]; // irreducible mod prime, hence over ℤ
    }
    // lift bound: |coeff of lc·(any monic factor image)| ≤ B
    let bound = factor_bound(p);
    let fp = Fp::new(prime);
    let mut modulus = BigInt::from(prime);
    let mut exp = 1u32;
    let target = &bound * BigInt::from(2) + BigInt::one();
    while modulus < target {
        modulus = &modulus * &modulus;
        exp *= 2;
    }
    let lifted = hensel_lift_tree(p, &fp, &modular, exp);
    recombine(p, &lifted, &modulus)
}

/// Scan small primes for one where the reduction stays squarefree with the
/// same degree; among the first few eligible primes, prefer the one giving
/// the fewest modular factors.
fn choose_prime(p: &IntPoly) -> (u64, Vec<MPoly>) {
    let mut candidates: Vec<(u64, Vec<MPoly>)> = Vec::new();
    let mut q = 2u64;
    while candidates.len() < 3 && q < 100_000 {
        q = next_prime(q);
        if p.leading().unwrap().is_multiple_of(&BigInt::from(q)) {
            continue;
        }
        let fp = Fp::new(q);
        let reduced = reduce_mod(p, q);
        if fp.deg(&reduced) != p.degree() {
            continue;
        }
        let deriv = fp.derivative(&reduced);
        if deriv.is_empty() {
            continue;
        }
        let g = fp.poly_gcd(&reduced, &deriv);
        if fp.deg(&g) != Some(0) {
            continue;
        }
        let factors = fp.berlekamp(&fp.monic(&reduced));
        candidates.push((q, factors));
    }
    candidates
        .into_iter()
        .min_by_key(|(q, f)| (f.len(), *q))
        .expect("some small prime keeps a squarefree polynomial squarefree")
}

fn next_prime(after: u64) -> u64 {
    let mut n = after + 1;
    loop {
        let mut d = 2;
        let mut prime = n > 1;
        while d * d <= n {
            if n % d == 0 {
                prime = false;
                break;
            }
            d += 1;
        }
        if prime {
            return n;
        }
        n += 1;
    }
}

fn reduce_mod(p: &IntPoly, q: u64) -> MPoly {
    let m = BigInt::from(q);
    let mut out: MPoly = p
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.mod_floor(&m);
            u64::try_from(&r).unwrap()
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Mignotte-style bound on the coefficients of lc(p)·h for any monic h whose
/// image divides p: √(n+1)·2ⁿ·‖p‖∞·|lc(p)|.
fn factor_bound(p: &IntPoly) -> BigInt {
    let n = p.degree().unwrap();
    let sqrt = (BigInt::from(n as u64 + 1)).sqrt() + BigInt::one();
    sqrt * pow_big(&BigInt::from(2), n) * p.height() * p.leading().unwrap().abs()
}

/// Coefficients of a polynomial mod m, as balanced residues in
/// (−m/2, m/2].
fn balance(coeffs: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / BigInt::from(2);
    coeffs
        .iter()
        .map(|c| {
            let mut r = c.mod_floor(m);
            if r > half {
                r -= m;
            }
            r
        })
        .collect()
}

#[derive(Clone)]
struct ZPoly(Vec<BigInt>); // modular integer polynomial, plain residues

impl ZPoly {
    fn trim(mut v: Vec<BigInt>) -> ZPoly {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        ZPoly(v)
    }

    fn reduce(&self, m: &BigInt) -> ZPoly {
        ZPoly::trim(self.0.iter().map(|c| c.mod_floor(m)).collect())
    }

    fn from_mpoly(f: &MPoly) -> ZPoly {
        ZPoly(f.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn deg(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add(&self, o: &ZPoly, m: &BigInt) -> ZPoly {
        let n = self.0.len().max(o.0.len());
        ZPoly::trim((0..n).map(|i| (self.coeff(i) + o.coeff(i)).mod_floor(m)).collect())
    }

    fn sub(&self, o: &ZPoly, m: &BigInt) -> ZPoly {
        let n = self.0.len().max(o.0.len());
        ZPoly::trim((0..n).map(|i| (self.coeff(i) - o.coeff(i)).mod_floor(m)).collect())
    }

    fn mul(&self, o: &ZPoly, m: &BigInt) -> ZPoly {
        if self.0.is_empty() || o.0.is_empty() {
            return ZPoly(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::trim(out.into_iter().map(|c| c.mod_floor(m)).collect())
    }

    /// Division by a monic polynomial, coefficients mod m.
    fn divrem_monic(&self, d: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
        let dd = d.deg().expect("monic divisor");
        debug_assert!(d.0[dd].is_one());
        let mut r = self.0.clone();
        let mut q = vec![BigInt::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let t = r.last().unwrap().clone();
            let n = r.len() - 1;
            if !t.is_zero() {
                q[n - dd] = t.clone();
                for i in 0..=dd {
                    r[n - dd + i] = (&r[n - dd + i] - &t * &d.0[i]).mod_floor(m);
                }
            }
            r.pop();
        }
        (ZPoly::trim(q), ZPoly::trim(r))
    }
}

/// One quadratic Hensel step: from f ≡ g·h (mod m), s·g + t·h ≡ 1 (mod m)
/// to the same congruences mod m_next (m | m_next | m²), h and g monic.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m_next: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let e = f.sub(&g.mul(h, m_next), m_next);
    let (q, r) = s.mul(&e, m_next).divrem_monic(h, m_next);
    let g_new = g.add(&t.mul(&e, m_next), m_next).add(&q.mul(g, m_next), m_next);
    let h_new = h.add(&r, m_next);
    let b = s
        .mul(&g_new, m_next)
        .add(&t.mul(&h_new, m_next), m_next)
        .sub(&ZPoly(vec![BigInt::one()]), m_next);
    let (c, d) = s.mul(&b, m_next).divrem_monic(&h_new, m_next);
    let s_new = s.sub(&d, m_next);
    let t_new = t
        .sub(&t.mul(&b, m_next), m_next)
        .sub(&c.mul(&g_new, m_next), m_next);
    (g_new, h_new, s_new, t_new)
}

/// Lift the monic modular factors of p to monic factors mod prime^exp whose
/// product is lc(p)⁻¹·p there. Binary-tree multifactor lifting.
fn hensel_lift_tree(p: &IntPoly, fp: &Fp, factors: &[MPoly], exp: u32) -> Vec<ZPoly> {
    let prime = BigInt::from(fp.p);
    let modulus = pow_big(&prime, exp as usize);
    // monic image of p mod prime^exp
    let lc_inv_p = mod_inverse(p.leading().unwrap(), &modulus);
    let f_target = ZPoly::trim(
        p.coeffs()
            .iter()
            .map(|c| (c * &lc_inv_p).mod_floor(&modulus))
            .collect(),
    );
    let mut out = Vec::with_capacity(factors.len());
    lift_node(&f_target, fp, factors, exp, &mut out);
    out
}

fn lift_node(target: &ZPoly, fp: &Fp, factors: &[MPoly], exp: u32, out: &mut Vec<ZPoly>) {
    if factors.len() == 1 {
        out.push(target.clone());
        return;
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let mut gl: MPoly = vec![1];
    for f in left {
        gl = fp.poly_mul(&gl, f);
    }
    let mut gr: MPoly = vec![1];
    for f in right {
        gr = fp.poly_mul(&gr, f);
    }
    let (one, s, t) = fp.poly_xgcd(&gl, &gr);
    debug_assert_eq!(one, vec![1]);
    let prime = BigInt::from(fp.p);
    let mut g = ZPoly::from_mpoly(&gl);
    let mut h = ZPoly::from_mpoly(&gr);
    let mut sp = ZPoly::from_mpoly(&s);
    let mut tp = ZPoly::from_mpoly(&t);
    let mut cur = 1u32;
    while cur < exp {
        let next = (cur * 2).min(exp);
        let m_next = pow_big(&prime, next as usize);
        let ft = target.reduce(&m_next);
        let (g2, h2, s2, t2) = hensel_step(&ft, &g, &h, &sp, &tp, &m_next);
        g = g2;
        h = h2;
        sp = s2;
        tp = t2;
        cur = next;
    }
    let m_final = pow_big(&prime, exp as usize);
    debug_assert_eq!(
        target.reduce(&m_final).sub(&g.mul(&h, &m_final), &m_final).0,
        vec![]
    );
    lift_node(&g, fp, left, exp, out);
    lift_node(&h, fp, right, exp, out);
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Try subsets of lifted factors in increasing cardinality; a subset whose
/// balanced product (scaled by the leading coefficient) divides the
/// remaining polynomial is a true irreducible factor.
fn recombine(p: &IntPoly, lifted: &[ZPoly], modulus: &BigInt) -> Vec<IntPoly> {
    let mut rest = p.clone();
    let mut pool: Vec<ZPoly> = lifted.to_vec();
    let mut out = Vec::new();
    let mut size = 1usize;
    while 2 * size <= pool.len() {
        let mut found = true;
        while found {
            found = false;
            for combo in combinations(pool.len(), size) {
                let mut prod = ZPoly(vec![rest.leading().unwrap().mod_floor(modulus)]);
                for &i in &combo {
                    prod = prod.mul(&pool[i], modulus);
                }
                let candidate = IntPoly::new(balance(&prod.0, modulus)).primitive_part();
                if candidate.degree() == Some(0) {
                    continue;
                }
                if let Some(q) = rest.div_exact(&candidate) {
                    out.push(candidate);
                    rest = q;
                    for &i in combo.iter().rev() {
                        pool.remove(i);
                    }
                    found = true;
                    break;
                }
            }
            if 2 * size > pool.len() {
                break;
            }
        }
        size += 1;
    }
    if rest.degree().map_or(false, |d| d > 0) {
        out.push(rest.primitive_part());
    }
    out
}

/// All k-subsets of 0..n in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 1), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(combinations(2, 2), vec![vec![0, 1]]);
    }

    #[test]
    fn factors_k4_minus_edge_char_poly() {
        // t⁴ − 5t² − 4t = t·(t+1)·(t² − t − 4)
        let p = poly(&[0, -4, -5, 0, 1]);
        let f = factor_integer_poly(&p).unwrap();
        assert_eq!(f.content, BigInt::one());
        let expected = vec![
            (poly(&[0, 1]), 1),
            (poly(&[1, 1]), 1),
            (poly(&[-4, -1, 1]), 1),
        ];
        assert_eq!(f.factors, expected);
    }

    #[test]
    fn factors_with_multiplicity() {
        // (t−1)²·(t⁴ − 2t³ − 5t² + 6t + 4), quartic irreducible
        let sq = poly(&[-1, 1]);
        let quartic = poly(&[4, 6, -5, -2, 1]);
        let p = &(&sq * &sq) * &quartic;
        let f = factor_integer_poly(&p).unwrap();
        assert_eq!(
            f.factors,
            vec![(sq, 2), (quartic, 1)]
        );
    }

    #[test]
    fn factors_c9_char_poly() {
        // t⁹ − 9t⁷ + 27t⁵ − 30t³ + 9t − 2 = (t−2)(t+1)²(t³−3t+1)²
        let p = poly(&[-2, 9, 0, -30, 0, 27, 0, -9, 0, 1]);
        let f = factor_integer_poly(&p).unwrap();
        assert_eq!(
            f.factors,
            vec![
                (poly(&[-2, 1]), 1),
                (poly(&[1, 1]), 2),
                (poly(&[1, -3, 0, 1]), 2),
            ]
        );
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn factors_content_and_sign() {
        // −6x² + 6 = −6·(x−1)(x+1)
        let p = poly(&[6, 0, -6]);
        let f = factor_integer_poly(&p).unwrap();
        assert_eq!(f.content, BigInt::from(-6));
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn keeps_irreducible_whole() {
        // x² − 2 and the cyclotomic-style cubic t³ − 3t + 1
        for c in [vec![-2i64, 0, 1], vec![1, -3, 0, 1]] {
            let p = poly(&c);
            let f = factor_integer_poly(&p).unwrap();
            assert_eq!(f.factors, vec![(p, 1)]);
        }
    }

    #[test]
    fn factors_product_requiring_recombination() {
        // two quadratics irreducible over ℤ that split mod many primes
        let a = poly(&[1, 0, 1]); // x² + 1
        let b = poly(&[2, 0, 1]); // x² + 2
        let p = &a * &b;
        let f = factor_integer_poly(&p).unwrap();
        assert_eq!(f.factors, vec![(a, 1), (b, 1)]);
    }

    #[test]
    fn rejects_zero() {
        assert!(factor_integer_poly(&IntPoly::zero()).is_err());
    }

    #[test]
    fn constant_poly_is_content_only() {
        let f = factor_integer_poly(&poly(&[42])).unwrap();
        assert_eq!(f.content, BigInt::from(42));
        assert!(f.factors.is_empty());
    }
}
