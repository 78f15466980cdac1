//! Property tests: randomized algebra identities, field axioms,
//! factorization round trips, pair-decomposition structure across a graph
//! corpus, and the equidistribution of sampled curves against torus
//! images.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use irrwalk_core::algebra::{
    factor_integer_poly, integer_kernel_basis, smith_normal_form, IntMatrix, IntPoly, RatPoly,
};
use irrwalk_core::field::{
    factor_over_field, splitting_field, AlgebraicNumber, FieldPoly, NumberField,
};
use irrwalk_core::geometry::{sample_curve, torus_image, torus_map};
use irrwalk_core::spectra::{
    spectral_decomposition, strong_cospectrality_with, Graph,
};
use irrwalk_core::walk::{decide_pgst, pgst_kernel, PgstResult};

fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c).prop_map(move |entries| {
            let rows: Vec<Vec<BigInt>> = entries
                .chunks(c)
                .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            IntMatrix::from_rows(rows)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_invariants_random(m in small_matrix()) {
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.s.clone());
        prop_assert_eq!(snf.u.det().abs(), BigInt::one());
        prop_assert_eq!(snf.v.det().abs(), BigInt::one());
        for i in 0..snf.s.rows() {
            for j in 0..snf.s.cols() {
                if i != j {
                    prop_assert!(snf.s[(i, j)].is_zero());
                }
            }
        }
        for i in 1..snf.rank {
            prop_assert!(num_integer::Integer::is_multiple_of(
                &snf.s[(i, i)], &snf.s[(i - 1, i - 1)]));
        }
        // kernel vectors annihilate
        for v in integer_kernel_basis(&m) {
            prop_assert!(m.mul_vec(&v).iter().all(|e| e.is_zero()));
        }
    }
}

/// Pool of primitive irreducible polynomials for factorization round trips.
fn irreducible_pool() -> Vec<IntPoly> {
    [
        vec![0i64, 1],
        vec![1, 1],
        vec![-1, 1],
        vec![-2, 1],
        vec![3, 1],
        vec![1, 2], // 2x + 1
        vec![1, 0, 1],
        vec![-2, 0, 1],
        vec![2, 0, 1],
        vec![1, 1, 1],
        vec![-1, -1, 1],
        vec![-4, -1, 1],
        vec![1, -3, 0, 1],
        vec![-1, -2, 0, 1], // x³ − 2x − 1? has root −1: avoid — replaced below
        vec![4, 6, -5, -2, 1],
    ]
    .iter()
    .map(|c| IntPoly::from_i64(c))
    .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn factorization_recovers_multiset(
        picks in proptest::collection::vec(0usize..14, 1..=4),
        content in 1i64..=4,
        negate in proptest::bool::ANY,
    ) {
        let pool = irreducible_pool();
        // skip the known-reducible pool entry
        let chosen: Vec<&IntPoly> = picks.iter().map(|&i| &pool[i]).filter(|p| {
            p.coeffs() != IntPoly::from_i64(&[-1, -2, 0, 1]).coeffs()
        }).collect();
        prop_assume!(!chosen.is_empty());
        let mut prod = IntPoly::constant(BigInt::from(if negate { -content } else { content }));
        for p in &chosen {
            prod = &prod * p;
        }
        let fac = factor_integer_poly(&prod).unwrap();
        prop_assert_eq!(fac.expand(), prod);
        let total: u32 = fac.factors.iter().map(|(_, m)| m).sum();
        prop_assert_eq!(total as usize, chosen.len());
        // every reported factor is one of the chosen irreducibles
        for (f, _) in &fac.factors {
            prop_assert!(chosen.iter().any(|c| c.coeffs() == f.coeffs()));
        }
    }

    #[test]
    fn square_root_round_trip(coeffs in proptest::collection::vec((-6i64..=6, 1i64..=4), 1..=9)) {
        let q = RatPoly::new(
            coeffs.iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect(),
        );
        prop_assume!(!q.is_zero());
        let sq = &q * &q;
        let root = sq.square_root().expect("squares have square roots");
        // normalized to positive leading coefficient
        let expect = if q.leading().unwrap().is_negative() { -&q } else { q.clone() };
        prop_assert_eq!(root, expect);
    }

    #[test]
    fn resultant_zero_iff_common_factor(
        i in 0usize..14,
        j in 0usize..14,
        share in proptest::bool::ANY,
    ) {
        let pool = irreducible_pool();
        let a;
        let b;
        if share {
            a = &pool[i] * &pool[j];
            b = pool[j].clone();
        } else {
            prop_assume!(pool[i].coeffs() != pool[j].coeffs());
            a = pool[i].clone();
            b = pool[j].clone();
        }
        let res = a.resultant(&b).unwrap();
        let gcd = a.to_rat().gcd(&b.to_rat());
        let gcd_nonconstant = gcd.degree().map_or(false, |d| d >= 1);
        prop_assert_eq!(res.is_zero(), gcd_nonconstant);
    }
}

fn algebraic(field: &std::sync::Arc<NumberField>, coeffs: &[(i64, i64)]) -> AlgebraicNumber {
    AlgebraicNumber::new(
        field.clone(),
        RatPoly::new(
            coeffs
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        ),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn field_ring_axioms(
        a in proptest::collection::vec((-9i64..=9, 1i64..=5), 3),
        b in proptest::collection::vec((-9i64..=9, 1i64..=5), 3),
        c in proptest::collection::vec((-9i64..=9, 1i64..=5), 3),
    ) {
        let k = NumberField::new(IntPoly::from_i64(&[1, -3, 0, 1])).unwrap();
        let x = algebraic(&k, &a);
        let y = algebraic(&k, &b);
        let z = algebraic(&k, &c);
        // associativity and commutativity
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        // distributivity
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        // inverses
        if !x.is_zero() {
            let inv = x.inv().unwrap();
            prop_assert_eq!(&x * &inv, AlgebraicNumber::one(k.clone()));
        }
    }

    #[test]
    fn factor_over_field_round_trip(
        roots in proptest::collection::vec((-4i64..=4, -4i64..=4), 1..=3),
        extra_quadratic in proptest::bool::ANY,
    ) {
        // products of linear factors (x − (p + qα)) over ℚ[√2], optionally
        // times x² − 3 (irreducible there)
        let k = NumberField::new(IntPoly::from_i64(&[-2, 0, 1])).unwrap();
        let mut p = FieldPoly::one(k.clone());
        for &(c0, c1) in &roots {
            let root = algebraic(&k, &[(c0, 1), (c1, 1)]);
            let lin = FieldPoly::new(
                k.clone(),
                vec![root.neg(), AlgebraicNumber::one(k.clone())],
            );
            p = p.mul(&lin);
        }
        if extra_quadratic {
            p = p.mul(&FieldPoly::from_ratpoly(k.clone(), &RatPoly::from_i64(&[-3, 0, 1])));
        }
        let fac = factor_over_field(&p).unwrap();
        prop_assert_eq!(fac.expand(), p);
        for (f, _) in &fac.factors {
            let d = f.degree().unwrap();
            prop_assert!(d == 1 || (d == 2 && extra_quadratic));
        }
    }
}

#[test]
fn splitting_field_annihilates_random_products() {
    // totally real pool
    let pool: Vec<IntPoly> = [
        vec![-2i64, 1],
        vec![1, 1],
        vec![-2, 0, 1],
        vec![-3, 0, 1],
        vec![-1, -1, 1],
        vec![-4, -1, 1],
        vec![1, -3, 0, 1],
    ]
    .iter()
    .map(|c| IntPoly::from_i64(c))
    .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..12 {
        let count = rng.gen_range(1..=3);
        let mut p = IntPoly::one();
        let mut degree_budget = 0;
        for _ in 0..count {
            let pick = &pool[rng.gen_range(0..pool.len())];
            degree_budget += pick.degree().unwrap();
            if degree_budget > 6 {
                break;
            }
            p = &p * pick;
        }
        let sd = splitting_field(&p).unwrap();
        let sf = p.squarefree_part();
        let over_field = FieldPoly::from_ratpoly(sd.field().clone(), &sf.to_rat());
        let roots = sd.roots();
        assert_eq!(roots.len(), sf.degree().unwrap());
        for r in &roots {
            assert!(over_field.eval(r).is_zero());
        }
        // descending and distinct
        for w in roots.windows(2) {
            assert_eq!(
                (&w[0] - &w[1]).sign(),
                irrwalk_core::field::Sign::Positive
            );
        }
        // sum of the roots is the negated subleading coefficient
        let mut sum = AlgebraicNumber::zero(sd.field().clone());
        for r in &roots {
            sum = &sum + r;
        }
        let deg = sf.degree().unwrap();
        let expect = -BigRational::new(sf.coeff(deg - 1), sf.coeff(deg));
        assert_eq!(sum.as_rational(), Some(expect));
    }
}

/// Strong-cospectrality structure across a sub-corpus: for every strongly
/// cospectral pair, φ₊ and φ₋ are squarefree and coprime, and their product
/// divides the characteristic polynomial.
#[test]
fn pair_decomposition_structure_on_corpus() {
    let graphs = vec![
        Graph::path(2),
        Graph::path(3),
        Graph::path(4),
        Graph::path(5),
        Graph::path(6),
        Graph::cycle(4),
        Graph::cycle(5),
        Graph::cycle(6),
        Graph::cycle(8),
        Graph::complete(4),
        Graph::k4_minus_edge(),
        Graph::star(4),
        Graph::complete_bipartite(2, 3),
        Graph::cube(),
        Graph::circulant(6, &[1, 2]),
        Graph::wheel(5),
    ];
    let mut cospectral_pairs = 0;
    for g in &graphs {
        let sd = spectral_decomposition(g).unwrap();
        for a in 0..g.n() {
            for b in a + 1..g.n() {
                let pd = strong_cospectrality_with(&sd, a, b).unwrap();
                if !pd.strongly_cospectral {
                    continue;
                }
                cospectral_pairs += 1;
                assert_eq!(
                    pd.phi_plus.squarefree_part(),
                    pd.phi_plus,
                    "φ₊ squarefree"
                );
                assert_eq!(
                    pd.phi_minus.squarefree_part(),
                    pd.phi_minus,
                    "φ₋ squarefree"
                );
                assert_eq!(pd.phi_plus.gcd(&pd.phi_minus), IntPoly::one());
                let phi = irrwalk_core::spectra::char_poly(g);
                let prod = &(&pd.phi_plus * &pd.phi_minus) * pd.phi_zero.as_ref().unwrap();
                assert_eq!(prod, phi);
                // signs recorded exactly for the support
                assert!(!pd.signs.is_empty());
            }
        }
    }
    assert!(cospectral_pairs >= 10, "found {} pairs", cospectral_pairs);
}

/// E_r E_s = δ_rs E_r, sampled entrywise on random (r, s, a, b).
#[test]
fn projector_orthogonality_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in [Graph::cycle(5), Graph::k4_minus_edge(), Graph::path(5)] {
        let sd = spectral_decomposition(&g).unwrap();
        let n = g.n();
        let field = sd.field().clone();
        for _ in 0..20 {
            let r = rng.gen_range(0..sd.num_eigenvalues());
            let s = rng.gen_range(0..sd.num_eigenvalues());
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            let mut sum = AlgebraicNumber::zero(field.clone());
            for c in 0..n {
                sum = &sum + &(sd.projector_entry(r, a, c) * sd.projector_entry(s, c, b));
            }
            let expect = if r == s {
                sd.projector_entry(r, a, b).clone()
            } else {
                AlgebraicNumber::zero(field.clone())
            };
            assert_eq!(sum, expect);
        }
    }
}

/// For PGST verdicts the parity functional is even on a large random sample
/// of the solution lattice; for parity failures the witness verifies.
#[test]
fn pgst_kernel_parity_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for (g, a, b) in [
        (Graph::path(2), 0usize, 1usize),
        (Graph::path(3), 0, 2),
        (Graph::k4_minus_edge(), 1, 2),
        (Graph::path(4), 0, 3),
    ] {
        let verdict = decide_pgst(&g, a, b).unwrap();
        assert_eq!(verdict.result, PgstResult::Pgst);
        let kernel = pgst_kernel(&verdict);
        // one million random integer combinations never give odd Σm
        let mut odd = 0u64;
        for _ in 0..1_000_000u64 {
            let mut m_sum: i64 = 0;
            for (_, m_part) in &kernel {
                let y: i64 = rng.gen_range(-9..=9);
                let part: i64 = m_part
                    .iter()
                    .map(|c| i64::try_from(c).unwrap())
                    .sum::<i64>();
                m_sum += y * part;
            }
            if m_sum % 2 != 0 {
                odd += 1;
            }
        }
        assert_eq!(odd, 0, "graph {:?} pair ({}, {})", g, a, b);
    }
    // parity-failure fixtures come with exact witnesses
    for (g, a, b) in [(Graph::cycle(6), 0usize, 3usize), (Graph::path(8), 0, 7)] {
        let verdict = decide_pgst(&g, a, b).unwrap();
        assert_eq!(verdict.result, PgstResult::ParityFails);
        let w = verdict.witness.as_ref().unwrap();
        assert!(irrwalk_core::walk::witness_checks(
            &verdict.lambdas,
            &verdict.mus,
            w
        ));
    }
}

/// Weyl equidistribution: the binned time-sampled curve approaches the
/// binned torus image as the horizon grows.
#[test]
fn sojourn_matches_torus_image() {
    let sd = spectral_decomposition(&Graph::cycle(5)).unwrap();
    let tm = torus_map(&sd, 1, 1).unwrap();
    let image = torus_image(&tm, 512).unwrap();
    let reference = bin_distribution(&image.points);

    let tv_at = |t_max: f64| {
        let curve = sample_curve(&sd, 1, 1, t_max, 0.05).unwrap();
        let dist = bin_distribution(&curve.points);
        total_variation(&dist, &reference)
    };
    let tv_short = tv_at(1e3);
    let tv_long = tv_at(1e4);
    // threshold frozen from observed behaviour; decreasing in T
    assert!(
        tv_long < 0.12,
        "total variation at T=1e4 is {}",
        tv_long
    );
    assert!(
        tv_long < tv_short,
        "equidistribution must improve with T: {} vs {}",
        tv_long,
        tv_short
    );
}

/// The C₅ torus image is invariant as a set under rotation by 2π/5: with a
/// grid divisible by 5, shifting every coordinate by grid/5 permutes the
/// grid, so the rotated multiset matches exactly up to float rounding.
#[test]
fn c5_rotation_symmetry_realized_on_image() {
    let sd = spectral_decomposition(&Graph::cycle(5)).unwrap();
    for (a, b) in [(1usize, 1usize), (1, 2)] {
        let tm = torus_map(&sd, a, b).unwrap();
        let cloud = torus_image(&tm, 20).unwrap();
        let key = |p: (f64, f64)| {
            (
                (p.0 * 1e9).round() as i64,
                (p.1 * 1e9).round() as i64,
            )
        };
        let set: std::collections::HashSet<(i64, i64)> =
            cloud.points.iter().map(|&p| key(p)).collect();
        let rot = (2.0 * std::f64::consts::PI / 5.0).sin_cos();
        let mut misses = 0;
        for &(re, im) in &cloud.points {
            let rotated = (re * rot.1 - im * rot.0, re * rot.0 + im * rot.1);
            // tolerate one ulp of rounding at the hash boundary
            let k = key(rotated);
            let hit = (-1..=1).any(|dx| {
                (-1..=1).any(|dy| set.contains(&(k.0 + dx, k.1 + dy)))
            });
            if !hit {
                misses += 1;
            }
        }
        assert_eq!(misses, 0, "entry ({}, {})", a, b);
    }
}

/// Off-diagonal projector entries squared agree with the deleted-poly
/// expression ((x − θ_r)·φ_ab(x)/φ_G(x))² evaluated at θ_r.
#[test]
fn offdiagonal_entries_match_phi_ab_formula() {
    use irrwalk_core::spectra::{char_poly, phi_ab_poly};
    for g in [Graph::cycle(5), Graph::k4_minus_edge(), Graph::path(4)] {
        let sd = spectral_decomposition(&g).unwrap();
        let field = sd.field().clone();
        let phi = FieldPoly::from_ratpoly(field.clone(), &char_poly(&g).to_rat());
        for a in 0..g.n() {
            for b in (a + 1)..g.n() {
                let pab = phi_ab_poly(&g, a, b).unwrap();
                let pab_f = FieldPoly::from_ratpoly(field.clone(), &pab.to_rat());
                for r in 0..sd.num_eigenvalues() {
                    let theta = sd.eigenvalue(r);
                    let linear = FieldPoly::new(
                        field.clone(),
                        vec![theta.neg(), AlgebraicNumber::one(field.clone())],
                    );
                    let numer = linear.mul(&pab_f);
                    let gc = numer.gcd(&phi).unwrap();
                    let nred = numer.divrem(&gc).unwrap().0;
                    let dred = phi.divrem(&gc).unwrap().0;
                    let dval = dred.eval(&theta);
                    assert!(!dval.is_zero());
                    let formula = nred.eval(&theta).checked_div(&dval).unwrap();
                    let entry = sd.projector_entry(r, a, b);
                    assert_eq!(&formula * &formula, entry * entry);
                }
            }
        }
    }
}

fn bin_distribution(points: &[(f64, f64)]) -> Vec<f64> {
    let bins = 32usize;
    let mut counts = vec![0f64; bins * bins];
    let mut total = 0f64;
    for &(re, im) in points {
        let x = ((re + 1.1) / 2.2 * bins as f64).floor();
        let y = ((im + 1.1) / 2.2 * bins as f64).floor();
        if x < 0.0 || y < 0.0 || x >= bins as f64 || y >= bins as f64 {
            continue;
        }
        counts[y as usize * bins + x as usize] += 1.0;
        total += 1.0;
    }
    counts.iter().map(|c| c / total).collect()
}

fn total_variation(a: &[f64], b: &[f64]) -> f64 {
    0.5 * a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum::<f64>()
}
