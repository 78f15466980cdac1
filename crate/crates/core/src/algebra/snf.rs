//! Smith normal form of integer matrices with unimodular transforms.
//!
//! `U·M·V = S` with S diagonal, nonnegative, and each diagonal entry
//! dividing the next. Pivots are always the minimum-absolute-value nonzero
//! entry of the remaining block, ties broken by lowest (row, col), which
//! makes the output deterministic and keeps coefficient growth moderate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Result of `smith_normal_form`: U·M·V = S with U, V unimodular.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

/// Like [`SnfResult`] but with the inverses of both transforms tracked.
#[derive(Clone, Debug)]
pub struct SnfFull {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

struct Calc {
    s: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Calc {
    fn new(m: &IntMatrix) -> Self {
        Calc {
            s: m.clone(),
            u: IntMatrix::identity(m.rows()),
            u_inv: IntMatrix::identity(m.rows()),
            v: IntMatrix::identity(m.cols()),
            v_inv: IntMatrix::identity(m.cols()),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.s.cols() {
            let x = self.s[(a, j)].clone();
            self.s[(a, j)] = self.s[(b, j)].clone();
            self.s[(b, j)] = x;
        }
        for j in 0..self.u.cols() {
            let x = self.u[(a, j)].clone();
            self.u[(a, j)] = self.u[(b, j)].clone();
            self.u[(b, j)] = x;
        }
        for i in 0..self.u_inv.rows() {
            let x = self.u_inv[(i, a)].clone();
            self.u_inv[(i, a)] = self.u_inv[(i, b)].clone();
            self.u_inv[(i, b)] = x;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.s.rows() {
            let x = self.s[(i, a)].clone();
            self.s[(i, a)] = self.s[(i, b)].clone();
            self.s[(i, b)] = x;
        }
        for i in 0..self.v.rows() {
            let x = self.v[(i, a)].clone();
            self.v[(i, a)] = self.v[(i, b)].clone();
            self.v[(i, b)] = x;
        }
        for j in 0..self.v_inv.cols() {
            let x = self.v_inv[(a, j)].clone();
            self.v_inv[(a, j)] = self.v_inv[(b, j)].clone();
            self.v_inv[(b, j)] = x;
        }
    }

    /// row a += k·row b  (with the matching column op on U⁻¹)
    fn add_row(&mut self, a: usize, b: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.s.cols() {
            let add = k * &self.s[(b, j)];
            self.s[(a, j)] += add;
        }
        for j in 0..self.u.cols() {
            let add = k * &self.u[(b, j)];
            self.u[(a, j)] += add;
        }
        for i in 0..self.u_inv.rows() {
            let sub = k * &self.u_inv[(i, a)];
            self.u_inv[(i, b)] -= sub;
        }
    }

    /// col a += k·col b  (with the matching row op on V⁻¹)
    fn add_col(&mut self, a: usize, b: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.s.rows() {
            let add = k * &self.s[(i, b)];
            self.s[(i, a)] += add;
        }
        for i in 0..self.v.rows() {
            let add = k * &self.v[(i, b)];
            self.v[(i, a)] += add;
        }
        for j in 0..self.v_inv.cols() {
            let sub = k * &self.v_inv[(a, j)];
            self.v_inv[(b, j)] -= sub;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.s.cols() {
            let x = -self.s[(a, j)].clone();
            self.s[(a, j)] = x;
        }
        for j in 0..self.u.cols() {
            let x = -self.u[(a, j)].clone();
            self.u[(a, j)] = x;
        }
        for i in 0..self.u_inv.rows() {
            let x = -self.u_inv[(i, a)].clone();
            self.u_inv[(i, a)] = x;
        }
    }

    /// Minimum-absolute-value nonzero entry in the block starting at (t, t),
    /// ties broken by lowest (row, col).
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let e = &self.s[(i, j)];
                if e.is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if e.abs() < self.s[(bi, bj)].abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }

    fn process(&mut self) -> usize {
        let mut t = 0;
        let limit = self.s.rows().min(self.s.cols());
        'position: while t < limit {
            // Reduce until the pivot's row and column are clear. The
            // global minimum-abs entry is re-selected as pivot after every
            // pass, which keeps quotients (and coefficient growth) small;
            // any nonzero remainder is at most half the old pivot, so the
            // pivot strictly shrinks and the loop terminates.
            loop {
                let Some((pi, pj)) = self.find_pivot(t) else {
                    break 'position;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                let mut leftover = false;
                for i in t + 1..self.s.rows() {
                    if self.s[(i, t)].is_zero() {
                        continue;
                    }
                    let q = div_nearest(&self.s[(i, t)], &self.s[(t, t)]);
                    self.add_row(i, t, &-q);
                    if !self.s[(i, t)].is_zero() {
                        leftover = true;
                    }
                }
                for j in t + 1..self.s.cols() {
                    if self.s[(t, j)].is_zero() {
                        continue;
                    }
                    let q = div_nearest(&self.s[(t, j)], &self.s[(t, t)]);
                    self.add_col(j, t, &-q);
                    if !self.s[(t, j)].is_zero() {
                        leftover = true;
                    }
                }
                if !leftover {
                    break;
                }
            }
            // pivot must divide every entry of the remaining block
            let mut offender = None;
            'scan: for i in t + 1..self.s.rows() {
                for j in t + 1..self.s.cols() {
                    if !self.s[(i, j)].is_multiple_of(&self.s[(t, t)]) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            if let Some(i) = offender {
                self.add_row(t, i, &BigInt::one());
                continue; // redo this pivot position
            }
            if self.s[(t, t)].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        t
    }
}

/// Round-to-nearest integer division (minimizes the remainder's magnitude).
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if (&r + &r).abs() > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Smith normal form with unimodular transforms: U·M·V = S.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let full = snf_full(m);
    SnfResult {
        u: full.u,
        s: full.s,
        v: full.v,
        rank: full.rank,
    }
}

/// Smith normal form additionally reporting U⁻¹ and V⁻¹.
pub fn snf_full(m: &IntMatrix) -> SnfFull {
    let mut calc = Calc::new(m);
    let rank = calc.process();
    debug_assert_eq!(calc.u.mul(m).mul(&calc.v), calc.s);
    debug_assert!(calc.u.mul(&calc.u_inv).is_identity());
    debug_assert!(calc.v.mul(&calc.v_inv).is_identity());
    SnfFull {
        u: calc.u,
        u_inv: calc.u_inv,
        s: calc.s,
        v: calc.v,
        v_inv: calc.v_inv,
        rank,
    }
}

/// Basis of the integer kernel {x : Mx = 0}: the last cols − rank columns
/// of V. Every integer solution is an integer combination of these.
pub fn integer_kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    (snf.rank..m.cols()).map(|j| snf.v.col(j)).collect()
}

/// One integer solution of Mx = b, or `None` when no integer solution
/// exists.
pub fn integer_solve(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(m.rows(), b.len());
    let full = snf_full(m);
    let ub = full.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); m.cols()];
    for i in 0..m.rows() {
        if i < full.rank {
            let d = &full.s[(i, i)];
            let (q, r) = ub[i].div_rem(d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ub[i].is_zero() {
            return None;
        }
    }
    Some(full.v.mul_vec(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SnfResult {
        let snf = smith_normal_form(m);
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.s, "UMV = S");
        assert_eq!(snf.u.det().abs(), BigInt::one(), "U unimodular");
        assert_eq!(snf.v.det().abs(), BigInt::one(), "V unimodular");
        // diagonal, nonnegative, divisibility chain
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    assert!(snf.s[(i, j)].is_zero());
                }
            }
        }
        for i in 0..snf.rank {
            assert!(snf.s[(i, i)].is_positive());
            if i + 1 < snf.rank {
                assert!(snf.s[(i + 1, i + 1)].is_multiple_of(&snf.s[(i, i)]));
            }
        }
        snf
    }

    #[test]
    fn identity_fixed_point() {
        let m = IntMatrix::identity(3);
        let snf = check(&m);
        assert!(snf.u.is_identity());
        assert!(snf.v.is_identity());
        assert!(snf.s.is_identity());
        assert_eq!(snf.rank, 3);
    }

    #[test]
    fn single_relation() {
        let m = IntMatrix::from_i64(&[&[1, -1]]);
        let snf = check(&m);
        assert_eq!(snf.s, IntMatrix::from_i64(&[&[1, 0]]));
        let kernel = integer_kernel_basis(&m);
        assert_eq!(kernel.len(), 1);
        let k = &kernel[0];
        assert_eq!(k[0], k[1]); // spans (1, 1) up to sign
        assert!(!k[0].is_zero());
    }

    #[test]
    fn divisibility_chain_2_4() {
        let m = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let snf = check(&m);
        assert_eq!(snf.s[(0, 0)], BigInt::from(2));
        assert_eq!(snf.s[(1, 1)], BigInt::from(4));
    }

    #[test]
    fn trivial_kernel_of_identity() {
        assert!(integer_kernel_basis(&IntMatrix::identity(4)).is_empty());
    }

    #[test]
    fn forces_divisibility_fix() {
        // diag(2, 3) needs the add-row trick to reach diag(1, 6)
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let snf = check(&m);
        assert_eq!(snf.s[(0, 0)], BigInt::one());
        assert_eq!(snf.s[(1, 1)], BigInt::from(6));
    }

    #[test]
    fn integer_solve_works() {
        let m = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let b = vec![BigInt::from(6), BigInt::from(14)];
        let x = integer_solve(&m, &b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        // 2x + 4y = 1 has no integer (or rational) solution path
        let m2 = IntMatrix::from_i64(&[&[2, 4]]);
        assert!(integer_solve(&m2, &[BigInt::one()]).is_none());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = IntMatrix::from_i64(&[&[3, 1, -2, 0], &[1, 1, 1, 1]]);
        for v in integer_kernel_basis(&m) {
            let prod = m.mul_vec(&v);
            assert!(prod.iter().all(|e| e.is_zero()));
        }
    }
}
