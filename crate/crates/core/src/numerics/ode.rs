//! Dormand-Prince 5(4) with adaptive steps, transporting a complex vector
//! along a polyline in the complex plane.

use crate::error::{Error, Result};
use crate::fuchsian::FuchsianSystem;
use num_complex::Complex64;

#[derive(Clone, Debug, PartialEq)]
pub struct PathPlan {
    pub waypoints: Vec<Complex64>,
    /// Distance every segment keeps from every singular point.
    pub min_clearance: f64,
}

impl PathPlan {
    pub fn new(waypoints: Vec<Complex64>, min_clearance: f64) -> Self {
        PathPlan { waypoints, min_clearance }
    }

    /// Straight segment between two points.
    pub fn line(from: Complex64, to: Complex64, min_clearance: f64) -> Self {
        PathPlan::new(vec![from, to], min_clearance)
    }

    /// Smallest distance from `p` to the polyline.
    pub fn distance_to(&self, p: Complex64) -> f64 {
        if self.waypoints.len() == 1 {
            return (self.waypoints[0] - p).norm();
        }
        self.waypoints
            .windows(2)
            .map(|w| {
                let d = w[1] - w[0];
                let len2 = d.norm_sqr();
                let s = if len2 == 0.0 { 0.0 } else { (((p - w[0]) * d.conj()).re / len2).clamp(0.0, 1.0) };
                (w[0] + d * s - p).norm()
            })
            .fold(f64::INFINITY, f64::min)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OdeTol {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_steps: usize,
}

impl Default for OdeTol {
    fn default() -> Self {
        OdeTol { abs_tol: 1e-14, rel_tol: 1e-12, max_steps: 200_000 }
    }
}

const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
/// Fifth-order weights minus the embedded fourth-order ones.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

/// Transport `y` along `path` for `dy/dz = rhs(z, y)`. The right-hand side
/// writes its result into the output slice.
pub fn transport<F>(rhs: F, singular: &[Complex64], path: &PathPlan, y0: &[Complex64], tol: &OdeTol) -> Result<Vec<Complex64>>
where
    F: Fn(Complex64, &[Complex64], &mut [Complex64]),
{
    if !(path.min_clearance > 0.0) {
        return Err(Error::InvalidArgument("min_clearance must be positive".into()));
    }
    for s in singular {
        let d = path.distance_to(*s);
        if d < path.min_clearance {
            return Err(Error::PathThroughSingularity(d));
        }
    }
    let mut y = y0.to_vec();
    for w in path.waypoints.windows(2) {
        y = segment(&rhs, w[0], w[1], &y, tol)?;
    }
    Ok(y)
}

fn segment<F>(rhs: &F, z0: Complex64, z1: Complex64, y0: &[Complex64], tol: &OdeTol) -> Result<Vec<Complex64>>
where
    F: Fn(Complex64, &[Complex64], &mut [Complex64]),
{
    let n = y0.len();
    let dz = z1 - z0;
    if dz.norm() == 0.0 {
        return Ok(y0.to_vec());
    }
    // d y / d s = dz * rhs(z0 + s dz, y), s in [0, 1]
    let f = |s: f64, y: &[Complex64], out: &mut [Complex64]| {
        rhs(z0 + dz * s, y, out);
        for o in out.iter_mut() {
            *o *= dz;
        }
    };
    let zero = Complex64::new(0.0, 0.0);
    let mut k = vec![vec![zero; n]; 7];
    let mut tmp = vec![zero; n];
    let mut y = y0.to_vec();
    let mut s = 0.0;
    let mut h: f64 = 0.01;
    f(s, &y, &mut k[0]);
    for _ in 0..tol.max_steps {
        if s >= 1.0 {
            return Ok(y);
        }
        h = h.min(1.0 - s);
        for st in 1..7 {
            for i in 0..n {
                let mut acc = y[i];
                for j in 0..st {
                    acc += k[j][i] * (A[st][j] * h);
                }
                tmp[i] = acc;
            }
            let (_, tail) = k.split_at_mut(st);
            f(s + C[st] * h, &tmp, &mut tail[0]);
        }
        // stage 7 was evaluated at the fifth-order solution, which is tmp
        let mut err = 0.0f64;
        for i in 0..n {
            let e: Complex64 = (0..7).map(|j| k[j][i] * (E[j] * h)).sum();
            let scale = tol.abs_tol + tol.rel_tol * y[i].norm().max(tmp[i].norm());
            err = err.max(e.norm() / scale);
        }
        if !err.is_finite() {
            return Err(Error::StiffnessFailure(format!("non-finite error estimate at z = {}", z0 + dz * s)));
        }
        if err <= 1.0 {
            s += h;
            y.copy_from_slice(&tmp);
            let last = k[6].clone();
            k[0] = last;
        }
        let factor = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
        h *= factor;
        if h < 1e-12 && s < 1.0 {
            return Err(Error::StiffnessFailure(format!("step underflow at z = {}", z0 + dz * s)));
        }
    }
    Err(Error::StiffnessFailure(format!("step budget exhausted at z = {}", z0 + dz * s)))
}

/// Transport along a path for a Fuchsian system with numeric residues.
pub fn ode_solve_path(sys: &FuchsianSystem, path: &PathPlan, initial: &[Complex64], tol: &OdeTol) -> Result<Vec<Complex64>> {
    if initial.len() != sys.size {
        return Err(Error::InvalidArgument(format!("initial vector has {} entries for a {}x{} system", initial.len(), sys.size, sys.size)));
    }
    let pts = sys.singular_points_f64();
    let res: Vec<Vec<Vec<f64>>> = sys
        .residues
        .iter()
        .map(|m| m.iter().map(|r| r.iter().map(crate::exactalg::to_f64).collect()).collect())
        .collect();
    let rhs = |z: Complex64, y: &[Complex64], out: &mut [Complex64]| {
        for o in out.iter_mut() {
            *o = Complex64::new(0.0, 0.0);
        }
        for (p, a) in pts.iter().zip(&res) {
            let w = (z - p).inv();
            for (i, o) in out.iter_mut().enumerate() {
                let row: Complex64 = a[i].iter().zip(y).map(|(aij, yj)| yj * *aij).sum();
                *o += w * row;
            }
        }
    };
    transport(rhs, &pts, path, initial, tol)
}
