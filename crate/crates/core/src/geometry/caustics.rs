//! Caustics of a 2-torus map: the image under F of the set where the
//! Jacobian of F : T² → ℝ² is rank-deficient.
//!
//! The critical set {det J = 0} is traced by predictor–corrector
//! continuation. Sign changes of det J on a coarse grid seed the tracer;
//! singular points of the set (where branches cross and the gradient of
//! det J also vanishes) are located by Newton with exact derivatives, and
//! traces step straight through them so crossings are covered exactly.
//! Each accepted point is corrected onto the zero set, so the emitted
//! polylines carry only on-set points at a small fraction of a grid cell
//! spacing.

use std::collections::HashMap;

use super::{GeometryError, PointCloud, TorusMap};

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// One connected piece of the critical set with its image.
#[derive(Clone, Debug)]
pub struct CausticCurve {
    /// Points on the critical set in torus coordinates in [0, 2π)².
    pub torus: Vec<(f64, f64)>,
    /// The same points mapped through F.
    pub image: PointCloud,
    /// Whether the trace closed up.
    pub closed: bool,
}

/// det J of F at a torus point: the cross product of ∂F/∂z₁ and ∂F/∂z₂ as
/// real plane vectors (zero exactly when they are real-parallel).
///
/// Expanding the product gives the trig-polynomial form
/// det J = Σ_{r,s} c_r c_s f^r₁ f^s₂ sin((f^s − f^r)·z), whose derivatives
/// of any order are exact cosine/sine sums; the gradient and Hessian below
/// use that form so Newton keeps full precision even where det J vanishes
/// to high order.
pub fn jacobian_det(tm: &TorusMap, z1: f64, z2: f64) -> f64 {
    let mut d1 = (0.0f64, 0.0f64);
    let mut d2 = (0.0f64, 0.0f64);
    for (c, row) in tm.coeffs.iter().zip(&tm.f) {
        let (f1, f2) = (row[0] as f64, row[1] as f64);
        let phase = f1 * z1 + f2 * z2;
        let (s, co) = phase.sin_cos();
        d1.0 += -f1 * c * s;
        d1.1 += f1 * c * co;
        d2.0 += -f2 * c * s;
        d2.1 += f2 * c * co;
    }
    d1.0 * d2.1 - d1.1 * d2.0
}

/// Exact gradient of det J.
fn grad(tm: &TorusMap, z1: f64, z2: f64) -> (f64, f64) {
    let mut gx = 0.0f64;
    let mut gy = 0.0f64;
    let m = tm.coeffs.len();
    for r in 0..m {
        for s in 0..m {
            let w = tm.coeffs[r] * tm.coeffs[s] * tm.f[r][0] as f64 * tm.f[s][1] as f64;
            if w == 0.0 {
                continue;
            }
            let d1 = (tm.f[s][0] - tm.f[r][0]) as f64;
            let d2 = (tm.f[s][1] - tm.f[r][1]) as f64;
            let c = (d1 * z1 + d2 * z2).cos();
            gx += w * d1 * c;
            gy += w * d2 * c;
        }
    }
    (gx, gy)
}

/// Exact Hessian of det J: (h11, h12, h22).
fn hess(tm: &TorusMap, z1: f64, z2: f64) -> (f64, f64, f64) {
    let mut h11 = 0.0f64;
    let mut h12 = 0.0f64;
    let mut h22 = 0.0f64;
    let m = tm.coeffs.len();
    for r in 0..m {
        for s in 0..m {
            let w = tm.coeffs[r] * tm.coeffs[s] * tm.f[r][0] as f64 * tm.f[s][1] as f64;
            if w == 0.0 {
                continue;
            }
            let d1 = (tm.f[s][0] - tm.f[r][0]) as f64;
            let d2 = (tm.f[s][1] - tm.f[r][1]) as f64;
            let sn = (d1 * z1 + d2 * z2).sin();
            h11 -= w * d1 * d1 * sn;
            h12 -= w * d1 * d2 * sn;
            h22 -= w * d2 * d2 * sn;
        }
    }
    (h11, h12, h22)
}

/// Project a point onto {det J = 0} by damped Newton along the exact
/// gradient; `None` when the iteration stalls (e.g. started on a ridge).
fn project_to_zero(tm: &TorusMap, start: (f64, f64), step_cap: f64) -> Option<(f64, f64)> {
    let mut z = start;
    for _ in 0..100 {
        let v = jacobian_det(tm, z.0, z.1);
        if v.abs() < 1e-14 {
            return Some(z);
        }
        let (gx, gy) = grad(tm, z.0, z.1);
        let g2 = gx * gx + gy * gy;
        if g2 < 1e-24 {
            return None;
        }
        let mut dx = -v * gx / g2;
        let mut dy = -v * gy / g2;
        let step = (dx * dx + dy * dy).sqrt();
        if step > step_cap {
            let s = step_cap / step;
            dx *= s;
            dy *= s;
        }
        z = (z.0 + dx, z.1 + dy);
    }
    None
}

/// Locate a singular point (∇det J = 0, det J = 0) near `center` by Newton
/// on the exact gradient. Where several branches cross, the gradient
/// vanishes to higher order and Newton contracts only linearly, so the
/// iteration budget is generous.
fn newton_singular(tm: &TorusMap, center: (f64, f64), radius: f64) -> Option<(f64, f64)> {
    let mut z = center;
    for _ in 0..200 {
        let g = grad(tm, z.0, z.1);
        let (hxx, hxy, hyy) = hess(tm, z.0, z.1);
        let det = hxx * hyy - hxy * hxy;
        if det.abs() < 1e-30 {
            return None;
        }
        let dx = -(hyy * g.0 - hxy * g.1) / det;
        let dy = -(-hxy * g.0 + hxx * g.1) / det;
        z = (z.0 + dx, z.1 + dy);
        if ((z.0 - center.0).powi(2) + (z.1 - center.1).powi(2)).sqrt() > radius {
            return None;
        }
        if (dx * dx + dy * dy).sqrt() < 1e-13 {
            break;
        }
    }
    let g = grad(tm, z.0, z.1);
    let ok = (g.0 * g.0 + g.1 * g.1).sqrt() < 1e-9 && jacobian_det(tm, z.0, z.1).abs() < 1e-10;
    ok.then_some(z)
}

fn short_diff(q: (f64, f64), p: (f64, f64)) -> (f64, f64) {
    let wrap = |x: f64| {
        let mut d = (x + std::f64::consts::PI).rem_euclid(TAU) - std::f64::consts::PI;
        if d <= -std::f64::consts::PI {
            d += TAU;
        }
        d
    };
    (wrap(q.0 - p.0), wrap(q.1 - p.1))
}

fn dist(a: (f64, f64), b: (f64, f64)) -> f64 {
    let d = short_diff(a, b);
    (d.0 * d.0 + d.1 * d.1).sqrt()
}

fn bisect(tm: &TorusMap, mut a: (f64, f64), mut b: (f64, f64)) -> (f64, f64) {
    let mut fa = jacobian_det(tm, a.0, a.1);
    for _ in 0..60 {
        let m = (0.5 * (a.0 + b.0), 0.5 * (a.1 + b.1));
        let fm = jacobian_det(tm, m.0, m.1);
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    (0.5 * (a.0 + b.0), 0.5 * (a.1 + b.1))
}

/// Trace the caustics of a 2-torus map, seeding from sign changes on a
/// resolution×resolution grid.
pub fn trace_caustics(
    tm: &TorusMap,
    resolution: u32,
) -> Result<Vec<CausticCurve>, GeometryError> {
    if tm.k != 2 {
        return Err(GeometryError::UnsupportedDimension(tm.k));
    }
    if resolution < 8 {
        return Err(GeometryError::BadParameter(
            "resolution must be at least 8".into(),
        ));
    }
    let res = resolution as usize;
    let h = TAU / res as f64;
    // offset the grid so symmetric critical lines miss grid corners
    let off = 0.30902 * h;
    let xc = |i: usize| off + i as f64 * h;
    let yc = |j: usize| j as f64 * h;
    let mut vals = vec![0.0f64; res * res];
    for i in 0..res {
        for j in 0..res {
            vals[i * res + j] = jacobian_det(tm, xc(i), yc(j));
        }
    }
    let sign = |v: f64| v > 0.0;
    // seeds: one bisected crossing per sign-changing grid edge
    let mut seeds: Vec<(f64, f64)> = Vec::new();
    for i in 0..res {
        for j in 0..res {
            let i1 = (i + 1) % res;
            let j1 = (j + 1) % res;
            let v = vals[i * res + j];
            let vr = vals[i1 * res + j];
            let vu = vals[i * res + j1];
            if sign(v) != sign(vr) {
                let p = bisect(tm, (xc(i), yc(j)), (xc(i) + h, yc(j)));
                seeds.push((p.0.rem_euclid(TAU), p.1.rem_euclid(TAU)));
            }
            if sign(v) != sign(vu) {
                let p = bisect(tm, (xc(i), yc(j)), (xc(i), yc(j) + h));
                seeds.push((p.0.rem_euclid(TAU), p.1.rem_euclid(TAU)));
            }
        }
    }
    // singular points from cells whose four edges all change sign
    let mut singulars: Vec<(f64, f64)> = Vec::new();
    for i in 0..res {
        for j in 0..res {
            let i1 = (i + 1) % res;
            let j1 = (j + 1) % res;
            let c00 = vals[i * res + j];
            let c10 = vals[i1 * res + j];
            let c01 = vals[i * res + j1];
            let c11 = vals[i1 * res + j1];
            let crossings = usize::from(sign(c00) != sign(c10))
                + usize::from(sign(c01) != sign(c11))
                + usize::from(sign(c00) != sign(c01))
                + usize::from(sign(c10) != sign(c11));
            if crossings == 4 {
                if let Some(x) = newton_singular(tm, (xc(i) + 0.5 * h, yc(j) + 0.5 * h), 2.0 * h)
                {
                    let x = (x.0.rem_euclid(TAU), x.1.rem_euclid(TAU));
                    if singulars.iter().all(|&s| dist(s, x) > 0.25 * h) {
                        singulars.push(x);
                    }
                }
            }
        }
    }

    let step = h / 32.0;
    let tracer = Tracer {
        tm,
        step,
        singulars: &singulars,
    };
    let mut used = vec![false; seeds.len()];
    let seed_grid = bucket_points(&seeds, h);
    let mut out = Vec::new();
    for s in 0..seeds.len() {
        if used[s] {
            continue;
        }
        used[s] = true;
        let Some(curve) = tracer.trace(seeds[s]) else {
            continue;
        };
        // mark seeds the new curve passes through
        for &p in &curve.0 {
            for &id in seed_grid.near(p) {
                if dist(seeds[id], p) < 0.9 * step {
                    used[id] = true;
                }
            }
        }
        let (torus, closed) = curve;
        let mut image = PointCloud {
            points: Vec::with_capacity(torus.len()),
            source: "caustic".into(),
            params: format!("resolution={}", resolution),
            graph_hash: String::new(),
        };
        for &(z1, z2) in &torus {
            image.points.push(tm.eval(&[z1, z2]));
        }
        out.push(CausticCurve {
            torus,
            image,
            closed,
        });
    }
    Ok(out)
}

struct Tracer<'a> {
    tm: &'a TorusMap,
    step: f64,
    singulars: &'a [(f64, f64)],
}

impl Tracer<'_> {
    /// Trace the connected component through a seed: forward until closure
    /// or a dead end, and if open, backward as well.
    fn trace(&self, seed: (f64, f64)) -> Option<(Vec<(f64, f64)>, bool)> {
        let t0 = self.tangent(seed)?;
        let (mut fwd, closed) = self.trace_dir(seed, t0);
        if closed {
            return Some((fwd, true));
        }
        let (bwd, _) = self.trace_dir(seed, (-t0.0, -t0.1));
        let mut pts: Vec<(f64, f64)> = bwd.into_iter().skip(1).rev().collect();
        pts.append(&mut fwd);
        Some((pts, false))
    }

    /// Unit tangent of the zero set (perpendicular to the gradient).
    fn tangent(&self, z: (f64, f64)) -> Option<(f64, f64)> {
        let (gx, gy) = grad(self.tm, z.0, z.1);
        let n = (gx * gx + gy * gy).sqrt();
        if n < 1e-9 {
            return None;
        }
        Some((-gy / n, gx / n))
    }

    fn trace_dir(&self, start: (f64, f64), dir0: (f64, f64)) -> (Vec<(f64, f64)>, bool) {
        let mut pts = vec![start];
        let mut z = start;
        let mut dir = dir0;
        let max_steps = 4_000_000usize;
        for steps in 0..max_steps {
            // step over a singular point when one sits in front of us
            if let Some(&x) = self
                .singulars
                .iter()
                .find(|&&x| {
                    let d = short_diff(x, z);
                    let along = d.0 * dir.0 + d.1 * dir.1;
                    let cross = (d.0 * dir.1 - d.1 * dir.0).abs();
                    along > 0.0 && along < 1.5 * self.step && cross < 0.5 * self.step
                })
            {
                if dist(x, z) > 1e-12 {
                    pts.push(x);
                }
                // continue straight through the crossing
                let beyond = (x.0 + self.step * dir.0, x.1 + self.step * dir.1);
                let Some(corrected) = project_to_zero(self.tm, beyond, 0.6 * self.step) else {
                    return (pts, false);
                };
                let d = short_diff(corrected, x);
                let n = (d.0 * d.0 + d.1 * d.1).sqrt();
                if n < 1e-12 {
                    return (pts, false);
                }
                dir = (d.0 / n, d.1 / n);
                z = corrected;
                pts.push((z.0.rem_euclid(TAU), z.1.rem_euclid(TAU)));
                continue;
            }
            let predictor = (z.0 + self.step * dir.0, z.1 + self.step * dir.1);
            let Some(corrected) = project_to_zero(self.tm, predictor, 0.6 * self.step) else {
                return (pts, false);
            };
            // keep the direction coherent
            let d = short_diff(corrected, z);
            let n = (d.0 * d.0 + d.1 * d.1).sqrt();
            if n < 1e-13 {
                return (pts, false);
            }
            let new_dir = (d.0 / n, d.1 / n);
            if new_dir.0 * dir.0 + new_dir.1 * dir.1 < 0.0 {
                // corrector folded back; give up on this direction
                return (pts, false);
            }
            dir = new_dir;
            z = corrected;
            let zc = (z.0.rem_euclid(TAU), z.1.rem_euclid(TAU));
            if steps > 2 && dist(zc, start) < 0.6 * self.step {
                return (pts, true);
            }
            pts.push(zc);
        }
        (pts, false)
    }
}

/// Uniform bucket index over points for nearby lookups.
struct PointBuckets {
    cell: f64,
    ncell: i64,
    map: HashMap<(i64, i64), Vec<usize>>,
}

impl PointBuckets {
    fn key(&self, p: (f64, f64)) -> (i64, i64) {
        (
            ((p.0 / self.cell).floor() as i64).rem_euclid(self.ncell),
            ((p.1 / self.cell).floor() as i64).rem_euclid(self.ncell),
        )
    }

    fn near(&self, p: (f64, f64)) -> impl Iterator<Item = &usize> {
        let (ci, cj) = self.key(p);
        let mut out = Vec::new();
        for di in -1..=1i64 {
            for dj in -1..=1i64 {
                let k = (
                    (ci + di).rem_euclid(self.ncell),
                    (cj + dj).rem_euclid(self.ncell),
                );
                if let Some(ids) = self.map.get(&k) {
                    out.extend(ids.iter());
                }
            }
        }
        out.into_iter()
    }
}

fn bucket_points(points: &[(f64, f64)], cell: f64) -> PointBuckets {
    let ncell = (TAU / cell).ceil() as i64;
    let mut b = PointBuckets {
        cell,
        ncell,
        map: HashMap::new(),
    };
    for (i, &p) in points.iter().enumerate() {
        let k = b.key(p);
        b.map.entry(k).or_default().push(i);
    }
    b
}
