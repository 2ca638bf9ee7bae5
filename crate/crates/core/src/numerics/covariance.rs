//! The projective integral `F(Z) = int prod_j |l_j(tau)|^{alpha_j} (tau_0
//! dtau_1 - tau_1 dtau_0)` over an arc between two zeros, and its behaviour
//! under `Z -> gZ` and `Z -> Zh`.
//!
//! With `tau = (cos th, sin th)` the form becomes `d th`, and each linear form
//! is `l_j = R_j sin(th - th_j)` where `th_j = -atan2(z_0j, z_1j)`.

use super::quad::{tanh_sinh, QuadResult, QuadSpec};
use super::rel_err;
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// 2 x (n+1) real configuration, rows first.
pub type RealConfig = [Vec<f64>; 2];

fn check_sum(alpha: &[f64]) -> Result<()> {
    let s: f64 = alpha.iter().sum();
    if (s + 2.0).abs() > 1e-12 {
        return Err(Error::ExponentSumViolation(format!("{s}")));
    }
    Ok(())
}

fn angles(z: &RealConfig) -> Vec<(f64, f64)> {
    (0..z[0].len())
        .map(|j| {
            let (a, b) = (z[0][j], z[1][j]);
            ((-a.atan2(b)).rem_euclid(PI), a.hypot(b))
        })
        .collect()
}

/// `F(Z)` over the arc from the zero of column `p` to that of column `q`,
/// counter-clockwise. No other zero may lie inside the arc.
pub fn projective_integral(z: &RealConfig, alpha: &[f64], cycle: (usize, usize), q: &QuadSpec) -> Result<QuadResult> {
    check_sum(alpha)?;
    let n1 = z[0].len();
    if z[1].len() != n1 || alpha.len() != n1 {
        return Err(Error::InvalidArgument("configuration and exponents disagree in size".into()));
    }
    let (p, r) = cycle;
    if p >= n1 || r >= n1 || p == r {
        return Err(Error::InvalidArgument(format!("bad cycle {cycle:?}")));
    }
    let ang = angles(z);
    if ang.iter().any(|a| a.1 == 0.0) {
        return Err(Error::DegenerateConfiguration("zero column".into()));
    }
    let th_p = ang[p].0;
    let delta = (ang[r].0 - th_p).rem_euclid(PI);
    if delta == 0.0 {
        return Err(Error::DegenerateConfiguration(format!("columns {p} and {r} are proportional")));
    }
    for (j, &(th, _)) in ang.iter().enumerate() {
        if j != p && j != r {
            let off = (th - th_p).rem_euclid(PI);
            if off < delta {
                return Err(Error::InvalidArgument(format!("zero of column {j} lies inside the arc {cycle:?}")));
            }
        }
    }
    let f = |s: f64, sc: f64| {
        let mut v = delta;
        for (j, &(th, rad)) in ang.iter().enumerate() {
            let l = if j == p {
                rad * (delta * s).sin()
            } else if j == r {
                rad * (delta * sc).sin()
            } else {
                rad * (th_p + delta * s - th).sin().abs()
            };
            v *= l.powf(alpha[j]);
        }
        Complex64::new(v, 0.0)
    };
    tanh_sinh(f, q, (alpha[p], alpha[r]))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Comparison {
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
}

impl Comparison {
    fn new(lhs: f64, rhs: f64) -> Self {
        Comparison { lhs, rhs, abs_err: (lhs - rhs).abs(), rel_err: rel_err(Complex64::new(lhs, 0.0), Complex64::new(rhs, 0.0)) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CovarianceReport {
    /// `F(gZ)` against `F(Z)/det g`.
    pub linear: Comparison,
    /// `F(Zh)` against `F(Z) prod h_j^{alpha_j}`.
    pub scale: Comparison,
}

/// Check both transformation laws for `det g > 0` and positive `h`, so that
/// the arc and the real branch are carried along consistently.
pub fn covariance_check(
    z: &RealConfig,
    g: &[[f64; 2]; 2],
    h: &[f64],
    alpha: &[f64],
    cycle: (usize, usize),
    q: &QuadSpec,
) -> Result<CovarianceReport> {
    let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if !(det > 0.0) {
        return Err(Error::InvalidArgument(format!("det g = {det} must be positive")));
    }
    if h.len() != z[0].len() || h.iter().any(|&x| !(x > 0.0)) {
        return Err(Error::InvalidArgument("h must be a positive diagonal of matching size".into()));
    }
    let base = projective_integral(z, alpha, cycle, q)?.value.re;
    let gz: RealConfig = [
        (0..z[0].len()).map(|j| g[0][0] * z[0][j] + g[0][1] * z[1][j]).collect(),
        (0..z[0].len()).map(|j| g[1][0] * z[0][j] + g[1][1] * z[1][j]).collect(),
    ];
    let zh: RealConfig = [
        z[0].iter().zip(h).map(|(x, s)| x * s).collect(),
        z[1].iter().zip(h).map(|(x, s)| x * s).collect(),
    ];
    let fg = projective_integral(&gz, alpha, cycle, q)?.value.re;
    let fh = projective_integral(&zh, alpha, cycle, q)?.value.re;
    let factor: f64 = h.iter().zip(alpha).map(|(s, a)| s.powf(*a)).product();
    Ok(CovarianceReport { linear: Comparison::new(fg, base / det), scale: Comparison::new(fh, base * factor) })
}

/// `Phi(tau; Z) = prod_j l_j^{alpha_j}`, `l_j = tau_0 z_0j + tau_1 z_1j`;
/// all `l_j` must be positive.
pub fn master_value(z: &RealConfig, alpha: &[f64], tau: [f64; 2]) -> Result<f64> {
    let mut v = 1.0;
    for j in 0..alpha.len() {
        let l = tau[0] * z[0][j] + tau[1] * z[1][j];
        if !(l > 0.0) {
            return Err(Error::InvalidArgument(format!("l_{j} = {l} is not positive")));
        }
        v *= l.powf(alpha[j]);
    }
    Ok(v)
}

/// `d Phi / d z_{p i} = alpha_i tau_p / l_i * Phi`.
pub fn master_derivative(z: &RealConfig, alpha: &[f64], tau: [f64; 2], p: usize, i: usize) -> Result<f64> {
    let l = tau[0] * z[0][i] + tau[1] * z[1][i];
    Ok(alpha[i] * tau[p] / l * master_value(z, alpha, tau)?)
}
