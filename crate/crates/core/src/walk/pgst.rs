//! Decision procedure for pretty good state transfer.
//!
//! PGST between a and b holds iff (1) the pair is strongly cospectral and
//! (2) for all integers ℓ_i, m_j with Σℓ_iλ_i + Σm_jμ_j = 0 and
//! Σℓ_i + Σm_j = 0 (λ over roots of φ₊, μ over roots of φ₋), Σm_j is even.
//! Expressing the first equation coordinate-wise over powers of the
//! primitive element turns condition (2) into an integer kernel question:
//! with x = Vy the integral parametrization of the solution lattice, PGST
//! holds iff the Σm_j functional has even coefficients on every free
//! variable of y; an odd column is a concrete counterexample witness.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{smith_normal_form, IntMatrix};
use crate::field::{splitting_field, AlgebraicNumber, FieldPoly};
use crate::spectra::{spectral_decomposition, Graph};

use super::WalkError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PgstResult {
    Pgst,
    NotStronglyCospectral,
    ParityFails,
}

impl PgstResult {
    /// Canonical report string.
    pub fn as_str(&self) -> &'static str {
        match self {
            PgstResult::Pgst => "PGST",
            PgstResult::NotStronglyCospectral => "NoPGST-NotStronglyCospectral",
            PgstResult::ParityFails => "NoPGST-ParityFails",
        }
    }
}

/// Integer vector (ℓ, m) certifying a parity failure: it satisfies both
/// linear conditions while Σm_j is odd.
#[derive(Clone, Debug)]
pub struct PgstWitness {
    pub ell: Vec<BigInt>,
    pub m: Vec<BigInt>,
}

#[derive(Debug)]
pub struct PgstVerdict {
    pub a: usize,
    pub b: usize,
    pub result: PgstResult,
    pub witness: Option<PgstWitness>,
    /// Roots of φ₊ and φ₋ in the splitting field of φ₊·φ₋ (descending),
    /// kept for reporting and verification.
    pub lambdas: Vec<AlgebraicNumber>,
    pub mus: Vec<AlgebraicNumber>,
}

/// Decide pretty good state transfer between two distinct vertices.
pub fn decide_pgst(g: &Graph, a: usize, b: usize) -> Result<PgstVerdict, WalkError> {
    let sd = spectral_decomposition(g)?;
    let pd = crate::spectra::strong_cospectrality_with(&sd, a, b)?;
    if !pd.strongly_cospectral {
        return Ok(PgstVerdict {
            a,
            b,
            result: PgstResult::NotStronglyCospectral,
            witness: None,
            lambdas: vec![],
            mus: vec![],
        });
    }
    // splitting field of φ₊·φ₋ only: the conditions involve no other roots
    let prod = &pd.phi_plus * &pd.phi_minus;
    let split = splitting_field(&prod)?;
    let field = split.field().clone();
    let phi_plus_f = FieldPoly::from_ratpoly(field.clone(), &pd.phi_plus.to_rat());
    let mut lambdas = Vec::new();
    let mut mus = Vec::new();
    for root in split.roots() {
        if phi_plus_f.eval(&root).is_zero() {
            lambdas.push(root);
        } else {
            mus.push(root);
        }
    }
    debug_assert_eq!(lambdas.len(), pd.phi_plus.degree().unwrap());
    debug_assert_eq!(mus.len(), pd.phi_minus.degree().unwrap());

    let s = lambdas.len();
    let q = mus.len();
    let vars = s + q;
    let n = field.degree();
    // coordinate-wise expansion of Σℓλ + Σmμ = 0 over powers of α, plus the
    // sum equation; rows scaled to primitive integer vectors
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..n {
        let mut row_rat: Vec<BigRational> = Vec::with_capacity(vars);
        for root in lambdas.iter().chain(mus.iter()) {
            row_rat.push(root.coeffs().coeff(i));
        }
        if let Some(row) = primitive_row(&row_rat) {
            rows.push(row);
        }
    }
    rows.push(vec![BigInt::from(1); vars]);
    let m = IntMatrix::from_rows(rows);
    let snf = smith_normal_form(&m);
    let kernel: Vec<Vec<BigInt>> = (snf.rank..vars).map(|j| snf.v.col(j)).collect();
    // Σm_j over each kernel generator must be even
    let mut witness = None;
    for gen in &kernel {
        let m_sum: BigInt = gen[s..].iter().sum();
        if m_sum.is_odd() {
            witness = Some(PgstWitness {
                ell: gen[..s].to_vec(),
                m: gen[s..].to_vec(),
            });
            break;
        }
    }
    if let Some(w) = &witness {
        debug_assert!(witness_checks(&lambdas, &mus, w));
    }
    Ok(PgstVerdict {
        a,
        b,
        result: if witness.is_none() {
            PgstResult::Pgst
        } else {
            PgstResult::ParityFails
        },
        witness,
        lambdas,
        mus,
    })
}

/// Scale a rational row to integers with gcd 1; `None` for zero rows.
fn primitive_row(row: &[BigRational]) -> Option<Vec<BigInt>> {
    if row.iter().all(|c| c.is_zero()) {
        return None;
    }
    let mut lcm = BigInt::from(1);
    for c in row {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    Some(ints.iter().map(|c| c / &g).collect())
}

/// Exact verification of a parity witness.
pub fn witness_checks(
    lambdas: &[AlgebraicNumber],
    mus: &[AlgebraicNumber],
    w: &PgstWitness,
) -> bool {
    let field = lambdas
        .first()
        .or(mus.first())
        .map(|x| x.field().clone())
        .expect("nonempty support");
    let mut combo = AlgebraicNumber::zero(field);
    let mut total = BigInt::zero();
    for (c, root) in w.ell.iter().zip(lambdas) {
        combo = &combo + &root.scale(&BigRational::from_integer(c.clone()));
        total += c;
    }
    let mut m_sum = BigInt::zero();
    for (c, root) in w.m.iter().zip(mus) {
        combo = &combo + &root.scale(&BigRational::from_integer(c.clone()));
        total += c;
        m_sum += c;
    }
    combo.is_zero() && total.is_zero() && m_sum.is_odd()
}

/// Kernel generators of the PGST constraint system; exposed for property
/// tests that sample the solution lattice.
pub fn pgst_kernel(verdict: &PgstVerdict) -> Vec<(Vec<BigInt>, Vec<BigInt>)> {
    let s = verdict.lambdas.len();
    // rebuild the kernel exactly as decide_pgst saw it
    let field = match verdict.lambdas.first().or(verdict.mus.first()) {
        Some(x) => x.field().clone(),
        None => return vec![],
    };
    let n = field.degree();
    let vars = verdict.lambdas.len() + verdict.mus.len();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..n {
        let row_rat: Vec<BigRational> = verdict
            .lambdas
            .iter()
            .chain(verdict.mus.iter())
            .map(|root| root.coeffs().coeff(i))
            .collect();
        if let Some(row) = primitive_row(&row_rat) {
            rows.push(row);
        }
    }
    rows.push(vec![BigInt::from(1); vars]);
    let m = IntMatrix::from_rows(rows);
    let snf = smith_normal_form(&m);
    (snf.rank..vars)
        .map(|j| {
            let col = snf.v.col(j);
            (col[..s].to_vec(), col[s..].to_vec())
        })
        .collect()
}
