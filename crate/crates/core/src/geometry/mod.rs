//! Sampling and rendering of walk geometry: the curve U(t)_ab in the
//! complex plane, the image of the frequency torus under
//! F(z̄) = Σ_r ⟨a|E_r|b⟩ e^(i f^r(z̄)), caustics of F for 2-dimensional
//! tori, and the odd-prime-cycle hypocycloids.
//!
//! Rendering arithmetic is double precision seeded from certified dyadic
//! values; exactness claims live in the analysis modules.

mod caustics;
mod emit;

pub use caustics::{jacobian_det, trace_caustics, CausticCurve};
pub use emit::{fmt_f64, to_csv, to_svg, SvgLayer};

use thiserror::Error;

use crate::spectra::SpectralDecomposition;
use crate::walk::{frequency_basis_for_pair, WalkError};

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("caustic tracing requires a 2-dimensional torus, got k = {0}")]
    UnsupportedDimension(usize),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("grid of {needed} points exceeds the resource guard {ceiling}")]
    ResourceExceeded { needed: u128, ceiling: u64 },
    #[error(transparent)]
    Walk(#[from] WalkError),
}

/// Frequency-torus map of one walk entry: real coefficients ⟨a|E_r|b⟩ (as
/// doubles seeded from certified enclosures, exact values retained) and the
/// integer frequency rows restricted to the support.
pub struct TorusMap {
    /// f64 coefficients, one per supported eigenvalue.
    pub coeffs: Vec<f64>,
    /// Exact values backing `coeffs`.
    pub exact: Vec<crate::field::AlgebraicNumber>,
    /// Integer frequency rows; row r has length k.
    pub f: Vec<Vec<i64>>,
    /// Torus dimension.
    pub k: usize,
    graph_hash: String,
    pair: (usize, usize),
}

impl TorusMap {
    /// F(z̄) as a complex pair.
    pub fn eval(&self, z: &[f64]) -> (f64, f64) {
        debug_assert_eq!(z.len(), self.k);
        let mut re = 0.0;
        let mut im = 0.0;
        for (c, row) in self.coeffs.iter().zip(&self.f) {
            let phase: f64 = row.iter().zip(z).map(|(&fi, zi)| fi as f64 * zi).sum();
            re += c * phase.cos();
            im += c * phase.sin();
        }
        (re, im)
    }
}

/// Build the torus map of the (a, b) entry.
pub fn torus_map(sd: &SpectralDecomposition, a: usize, b: usize) -> Result<TorusMap, GeometryError> {
    let fb = frequency_basis_for_pair(sd, a, b)?;
    let exact: Vec<_> = fb
        .support
        .iter()
        .map(|&r| sd.projector_entry(r, a, b).clone())
        .collect();
    let coeffs: Vec<f64> = exact.iter().map(|c| c.refine(80).to_f64()).collect();
    let mut f = Vec::with_capacity(fb.f.len());
    for row in &fb.f {
        let mut out = Vec::with_capacity(row.len());
        for v in row {
            out.push(i64::try_from(v).map_err(|_| {
                GeometryError::BadParameter("frequency coordinate exceeds i64".into())
            })?);
        }
        f.push(out);
    }
    Ok(TorusMap {
        coeffs,
        exact,
        f,
        k: fb.dimension(),
        graph_hash: sd.graph().structure_hash(),
        pair: (a, b),
    })
}

/// A sampled plane curve or point set with provenance metadata.
#[derive(Clone, Debug)]
pub struct PointCloud {
    pub points: Vec<(f64, f64)>,
    pub source: String,
    pub params: String,
    pub graph_hash: String,
}

impl PointCloud {
    fn new(source: &str, params: String, graph_hash: String) -> Self {
        PointCloud {
            points: vec![],
            source: source.to_string(),
            params,
            graph_hash,
        }
    }
}

/// Sample U(t)_ab for t = 0, dt, ..., t_max. Eigenvalues and projector
/// entries are taken from 80-bit certified enclosures, so each point
/// carries error well below 1e−9 over the supported time ranges.
pub fn sample_curve(
    sd: &SpectralDecomposition,
    a: usize,
    b: usize,
    t_max: f64,
    dt: f64,
) -> Result<PointCloud, GeometryError> {
    if !(t_max > 0.0) || !(dt > 0.0) {
        return Err(GeometryError::BadParameter(
            "t_max and dt must be positive".into(),
        ));
    }
    sd.graph().check_vertex(a).map_err(WalkError::Spectra)?;
    sd.graph().check_vertex(b).map_err(WalkError::Spectra)?;
    let d = sd.num_eigenvalues();
    let thetas: Vec<f64> = (0..d).map(|r| sd.eigenvalue(r).refine(80).to_f64()).collect();
    let coeffs: Vec<f64> = (0..d)
        .map(|r| sd.projector_entry(r, a, b).refine(80).to_f64())
        .collect();
    let steps = (t_max / dt).floor() as usize;
    let mut cloud = PointCloud::new(
        "curve",
        format!("a={};b={};t_max={};dt={}", a, b, t_max, dt),
        sd.graph().structure_hash(),
    );
    cloud.points.reserve(steps + 1);
    for i in 0..=steps {
        let t = i as f64 * dt;
        let mut re = 0.0;
        let mut im = 0.0;
        for (theta, c) in thetas.iter().zip(&coeffs) {
            let phase = theta * t;
            re += c * phase.cos();
            im += c * phase.sin();
        }
        cloud.points.push((re, im));
    }
    Ok(cloud)
}

const GRID_GUARD: u64 = 20_000_000;

/// Image of the uniform grid (2π i₁/grid, ..., 2π i_k/grid) under F.
///
/// Phases are looked up in a mirrored table of grid-th roots of unity, so
/// the conjugation symmetry F(−z̄) = conj F(z̄) holds bit-exactly on the
/// emitted points.
pub fn torus_image(tm: &TorusMap, grid: u32) -> Result<PointCloud, GeometryError> {
    if grid < 2 {
        return Err(GeometryError::BadParameter("grid must be at least 2".into()));
    }
    let total = (grid as u128).pow(tm.k as u32);
    if total > GRID_GUARD as u128 {
        return Err(GeometryError::ResourceExceeded {
            needed: total,
            ceiling: GRID_GUARD,
        });
    }
    let table = unit_roots(grid);
    let mut cloud = PointCloud::new(
        "torus",
        format!("pair={},{};grid={};k={}", tm.pair.0, tm.pair.1, grid, tm.k),
        tm.graph_hash.clone(),
    );
    if tm.k == 0 {
        // constant map (empty support would have no coefficients; a single
        // rationally-supported eigenvalue gives k = 1)
        cloud.points.push((tm.coeffs.iter().sum(), 0.0));
        return Ok(cloud);
    }
    cloud.points.reserve(total as usize);
    let g = grid as i64;
    let mut index = vec![0i64; tm.k];
    loop {
        let mut re = 0.0;
        let mut im = 0.0;
        for (c, row) in tm.coeffs.iter().zip(&tm.f) {
            let mut e: i64 = 0;
            for (fi, ix) in row.iter().zip(&index) {
                e = (e + (fi.rem_euclid(g)) * ix) % g;
            }
            let (cos, sin) = table[e.rem_euclid(g) as usize];
            re += c * cos;
            im += c * sin;
        }
        cloud.points.push((re, im));
        // odometer increment
        let mut pos = tm.k;
        loop {
            if pos == 0 {
                return Ok(cloud);
            }
            pos -= 1;
            index[pos] += 1;
            if index[pos] < g {
                break;
            }
            index[pos] = 0;
        }
    }
}

/// Roots of unity with exact mirror symmetry: entry (n − j) is the
/// conjugate of entry j bit-for-bit. The self-conjugate entries 0 and n/2
/// get exact sines so negation is an identity there.
fn unit_roots(n: u32) -> Vec<(f64, f64)> {
    let n = n as usize;
    let mut table = vec![(0.0f64, 0.0f64); n];
    for j in 0..=n / 2 {
        let angle = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
        table[j] = (angle.cos(), angle.sin());
    }
    table[0] = (1.0, 0.0);
    if n % 2 == 0 {
        table[n / 2] = (-1.0, 0.0);
    }
    for j in n / 2 + 1..n {
        let (c, s) = table[n - j];
        table[j] = (c, -s);
    }
    table
}

/// The hypocycloid (1/p)(k e^(−i(p−k)t) + (p−k) e^(ikt)) traced over one
/// period; these are the caustics of odd-prime-cycle diagonal entries.
pub fn hypocycloid(p: u32, k: u32, samples: u32) -> Result<PointCloud, GeometryError> {
    if !is_odd_prime(p) {
        return Err(GeometryError::BadParameter(format!(
            "{} is not an odd prime",
            p
        )));
    }
    if k < 1 || k > (p - 1) / 2 {
        return Err(GeometryError::BadParameter(format!(
            "k must lie in 1..={}",
            (p - 1) / 2
        )));
    }
    if samples == 0 {
        return Err(GeometryError::BadParameter("samples must be positive".into()));
    }
    let mut cloud = PointCloud::new(
        "hypocycloid",
        format!("p={};k={};samples={}", p, k, samples),
        String::new(),
    );
    let pf = p as f64;
    let kf = k as f64;
    for i in 0..samples {
        let t = 2.0 * std::f64::consts::PI * i as f64 / samples as f64;
        let re = (kf * ((pf - kf) * t).cos() + (pf - kf) * (kf * t).cos()) / pf;
        let im = (-kf * ((pf - kf) * t).sin() + (pf - kf) * (kf * t).sin()) / pf;
        cloud.points.push((re, im));
    }
    Ok(cloud)
}

fn is_odd_prime(p: u32) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{spectral_decomposition, Graph};

    #[test]
    fn curve_starts_at_one_on_diagonal() {
        let sd = spectral_decomposition(&Graph::cycle(5)).unwrap();
        let cloud = sample_curve(&sd, 1, 1, 1.0, 0.5).unwrap();
        let (re, im) = cloud.points[0];
        assert!((re - 1.0).abs() < 1e-12);
        assert!(im.abs() < 1e-12);
    }

    #[test]
    fn p2_off_diagonal_is_imaginary_axis() {
        let sd = spectral_decomposition(&Graph::path(2)).unwrap();
        let cloud = sample_curve(&sd, 0, 1, 10.0, 0.01).unwrap();
        for (re, im) in &cloud.points {
            assert!(re.abs() < 1e-9);
            let _ = im;
        }
        // and matches i·sin t
        let pt = cloud.points[100]; // t = 1
        assert!((pt.1 - 1f64.sin()).abs() < 1e-9);
    }

    #[test]
    fn torus_map_at_origin_gives_kronecker_delta() {
        let sd = spectral_decomposition(&Graph::cycle(5)).unwrap();
        let tm = torus_map(&sd, 1, 1).unwrap();
        assert_eq!(tm.k, 2);
        let (re, im) = tm.eval(&[0.0, 0.0]);
        assert!((re - 1.0).abs() < 1e-12);
        assert!(im.abs() < 1e-12);
        let tm12 = torus_map(&sd, 1, 2).unwrap();
        let (re, im) = tm12.eval(&[0.0, 0.0]);
        assert!(re.abs() < 1e-12);
        assert!(im.abs() < 1e-12);
    }

    #[test]
    fn torus_image_conjugation_symmetry_is_bit_exact() {
        let sd = spectral_decomposition(&Graph::cycle(5)).unwrap();
        let tm = torus_map(&sd, 1, 2).unwrap();
        let grid = 24u32;
        let cloud = torus_image(&tm, grid).unwrap();
        let g = grid as usize;
        assert_eq!(cloud.points.len(), g * g);
        for i in 0..g {
            for j in 0..g {
                let p = cloud.points[i * g + j];
                let q = cloud.points[((g - i) % g) * g + ((g - j) % g)];
                assert_eq!(p.0, q.0, "re mismatch at ({}, {})", i, j);
                assert_eq!(p.1, -q.1, "im mismatch at ({}, {})", i, j);
            }
        }
    }

    #[test]
    fn c5_rotation_by_fifth_preserves_image() {
        // shifting every grid coordinate by 2π/5 rotates F by e^(2πi/5)
        let sd = spectral_decomposition(&Graph::cycle(5)).unwrap();
        let tm = torus_map(&sd, 1, 1).unwrap();
        let fifth = 2.0 * std::f64::consts::PI / 5.0;
        let z = [0.7, 1.9];
        let (re0, im0) = tm.eval(&z);
        let (re1, im1) = tm.eval(&[z[0] + fifth, z[1] + fifth]);
        let rot = (fifth.cos(), fifth.sin());
        assert!((re1 - (re0 * rot.0 - im0 * rot.1)).abs() < 1e-9);
        assert!((im1 - (re0 * rot.1 + im0 * rot.0)).abs() < 1e-9);
    }

    #[test]
    fn hypocycloid_validation_and_shape() {
        assert!(hypocycloid(4, 1, 10).is_err());
        assert!(hypocycloid(9, 1, 10).is_err());
        assert!(hypocycloid(5, 3, 10).is_err());
        // deltoid: coefficients sum to 1 at t = 0
        let d = hypocycloid(3, 1, 100).unwrap();
        assert!((d.points[0].0 - 1.0).abs() < 1e-12);
        assert!(d.points[0].1.abs() < 1e-12);
        let max_r = d
            .points
            .iter()
            .map(|(x, y)| (x * x + y * y).sqrt())
            .fold(0.0, f64::max);
        assert!(max_r <= 1.0 + 1e-12);
    }

    #[test]
    fn grid_guard_fires() {
        let sd = spectral_decomposition(&Graph::cycle(5)).unwrap();
        let tm = torus_map(&sd, 1, 1).unwrap();
        assert!(matches!(
            torus_image(&tm, 100_000),
            Err(GeometryError::ResourceExceeded { .. })
        ));
    }
}
