//! Polynomial arithmetic over 𝔽_p for small primes, used internally by the
//! integer factorization routine. Not a public API.

/// Coefficients mod p, ascending degree, trailing zeros trimmed.
pub(crate) type MPoly = Vec<u64>;

#[derive(Clone, Copy)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p < (1 << 31));
        Fp { p }
    }

    #[allow(dead_code)]
    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat; p is prime
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn trim(&self, mut f: MPoly) -> MPoly {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    pub fn deg(&self, f: &MPoly) -> Option<usize> {
        if f.is_empty() {
            None
        } else {
            Some(f.len() - 1)
        }
    }

    #[allow(dead_code)]
    pub fn poly_add(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = self.add(x, y);
        }
        self.trim(out)
    }

    pub fn poly_sub(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            out[i] = self.sub(x, y);
        }
        self.trim(out)
    }

    pub fn poly_mul(&self, a: &MPoly, b: &MPoly) -> MPoly {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.trim(out)
    }

    pub fn poly_scale(&self, a: &MPoly, s: u64) -> MPoly {
        self.trim(a.iter().map(|&c| self.mul(c, s)).collect())
    }

    pub fn monic(&self, a: &MPoly) -> MPoly {
        match a.last() {
            None => vec![],
            Some(&lc) => self.poly_scale(a, self.inv(lc)),
        }
    }

    /// (quotient, remainder) with arbitrary nonzero divisor.
    pub fn poly_divrem(&self, a: &MPoly, d: &MPoly) -> (MPoly, MPoly) {
        let dd = self.deg(d).expect("division by zero mod p");
        let lc_inv = self.inv(*d.last().unwrap());
        let mut r = a.clone();
        let mut q = vec![0u64; a.len().saturating_sub(dd)];
        while let Some(n) = self.deg(&r) {
            if n < dd {
                break;
            }
            let t = self.mul(*r.last().unwrap(), lc_inv);
            q[n - dd] = t;
            for i in 0..=dd {
                let sub = self.mul(t, d[i]);
                r[n - dd + i] = self.sub(r[n - dd + i], sub);
            }
            r = self.trim(r);
        }
        (self.trim(q), r)
    }

    pub fn poly_rem(&self, a: &MPoly, d: &MPoly) -> MPoly {
        self.poly_divrem(a, d).1
    }

    pub fn poly_gcd(&self, a: &MPoly, b: &MPoly) -> MPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_empty() {
            let r = self.poly_rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Extended gcd: (g, s, t) with s·a + t·b = g, g monic.
    pub fn poly_xgcd(&self, a: &MPoly, b: &MPoly) -> (MPoly, MPoly, MPoly) {
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        let mut s0: MPoly = vec![1];
        let mut s1: MPoly = vec![];
        let mut t0: MPoly = vec![];
        let mut t1: MPoly = vec![1];
        while !r1.is_empty() {
            let (q, r) = self.poly_divrem(&r0, &r1);
            let ns = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            let nt = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = ns;
            t0 = t1;
            t1 = nt;
        }
        let lc_inv = self.inv(*r0.last().expect("xgcd of zero polynomials"));
        (
            self.poly_scale(&r0, lc_inv),
            self.poly_scale(&s0, lc_inv),
            self.poly_scale(&t0, lc_inv),
        )
    }

    pub fn derivative(&self, a: &MPoly) -> MPoly {
        if a.len() <= 1 {
            return vec![];
        }
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, (i as u64) % self.p))
                .collect(),
        )
    }

    /// x^e mod f by repeated squaring.
    pub fn x_pow_mod(&self, e: u64, f: &MPoly) -> MPoly {
        let mut acc: MPoly = vec![1];
        let mut base: MPoly = self.poly_rem(&vec![0, 1], f);
        let mut exp = e;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.poly_rem(&self.poly_mul(&acc, &base), f);
            }
            base = self.poly_rem(&self.poly_mul(&base, &base), f);
            exp >>= 1;
        }
        acc
    }

    /// Deterministic Berlekamp factorization of a squarefree monic
    /// polynomial into monic irreducible factors, sorted.
    pub fn berlekamp(&self, f: &MPoly) -> Vec<MPoly> {
        let n = self.deg(f).expect("factor of zero");
        if n <= 1 {
            return vec![f.clone()];
        }
        // Frobenius matrix: column i holds x^(p·i) mod f
        let xp = self.x_pow_mod(self.p, f);
        let mut cols: Vec<MPoly> = Vec::with_capacity(n);
        let mut cur: MPoly = vec![1];
        for _ in 0..n {
            cols.push(cur.clone());
            cur = self.poly_rem(&self.poly_mul(&cur, &xp), f);
        }
        // kernel of (Q − I) over 𝔽_p, where Q[i][j] = coeff i of cols[j]
        let mut mat = vec![vec![0u64; n]; n];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..n {
                mat[i][j] = col.get(i).copied().unwrap_or(0);
            }
            mat[j][j] = self.sub(mat[j][j], 1);
        }
        let basis = self.kernel_basis(mat);
        let k = basis.len();
        let mut factors: Vec<MPoly> = vec![self.monic(f)];
        for b in &basis {
            if factors.len() == k {
                break;
            }
            let bp = self.trim(b.clone());
            if self.deg(&bp).map_or(true, |d| d == 0) {
                continue; // constant kernel vector splits nothing
            }
            let mut next: Vec<MPoly> = Vec::new();
            for h in factors {
                if self.deg(&h) == Some(1) {
                    next.push(h);
                    continue;
                }
                let mut rest = h.clone();
                for s in 0..self.p {
                    if self.deg(&rest).map_or(true, |d| d < 2) {
                        break;
                    }
                    let shifted = self.poly_sub(&bp, &vec![s]);
                    let g = self.poly_gcd(&rest, &shifted);
                    if let Some(d) = self.deg(&g) {
                        if d > 0 && d < self.deg(&rest).unwrap() {
                            next.push(g.clone());
                            rest = self.poly_divrem(&rest, &g).0;
                        }
                    }
                }
                if self.deg(&rest).map_or(false, |d| d > 0) {
                    next.push(self.monic(&rest));
                }
            }
            factors = next;
        }
        factors.sort();
        factors
    }

    fn kernel_basis(&self, mut m: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
        let n = m.len();
        let mut pivot_of_col = vec![usize::MAX; n];
        let mut r = 0;
        for c in 0..n {
            let Some(pr) = (r..n).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, pr);
            let inv = self.inv(m[r][c]);
            for j in 0..n {
                m[r][j] = self.mul(m[r][j], inv);
            }
            for i in 0..n {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..n {
                        let sub = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], sub);
                    }
                }
            }
            pivot_of_col[c] = r;
            r += 1;
        }
        let mut basis = Vec::new();
        for c in 0..n {
            if pivot_of_col[c] != usize::MAX {
                continue;
            }
            let mut v = vec![0u64; n];
            v[c] = 1;
            for (cc, &pr) in pivot_of_col.iter().enumerate() {
                if pr != usize::MAX {
                    v[cc] = self.sub(0, m[pr][c]);
                }
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn berlekamp_splits_product_of_linears() {
        // (x−1)(x−2)(x−3) mod 7
        let fp = Fp::new(7);
        let f = fp.poly_mul(&fp.poly_mul(&vec![6, 1], &vec![5, 1]), &vec![4, 1]);
        let factors = fp.berlekamp(&f);
        assert_eq!(factors.len(), 3);
        let mut prod: MPoly = vec![1];
        for g in &factors {
            prod = fp.poly_mul(&prod, g);
        }
        assert_eq!(prod, fp.monic(&f));
    }

    #[test]
    fn berlekamp_keeps_irreducible_whole() {
        // x² + 1 is irreducible mod 7 (−1 is not a QR mod 7)
        let fp = Fp::new(7);
        let f: MPoly = vec![1, 0, 1];
        assert_eq!(fp.berlekamp(&f), vec![f.clone()]);
    }

    #[test]
    fn berlekamp_mixed_degrees() {
        // (x² + 1)(x − 3) mod 7
        let fp = Fp::new(7);
        let f = fp.poly_mul(&vec![1, 0, 1], &vec![4, 1]);
        let factors = fp.berlekamp(&f);
        assert_eq!(factors.len(), 2);
        assert!(factors.contains(&vec![1, 0, 1]));
        assert!(factors.contains(&vec![4, 1]));
    }

    #[test]
    fn xgcd_mod_p() {
        let fp = Fp::new(7);
        let a: MPoly = vec![1, 0, 1]; // x² + 1, irreducible mod 7
        let b: MPoly = vec![2, 1]; // x + 2
        let (g, s, t) = fp.poly_xgcd(&a, &b);
        let lhs = fp.poly_add(&fp.poly_mul(&s, &a), &fp.poly_mul(&t, &b));
        assert_eq!(lhs, g);
        assert_eq!(g, vec![1]);
    }
}
