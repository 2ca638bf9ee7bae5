//! Gauss' function beyond the unit disk by integrating its differential
//! equation from a point where the series converges fast.

use super::ode::{transport, OdeTol, PathPlan};
use super::special::hyp2f1_series;
use super::cycles::Side;
use crate::error::Result;
use num_complex::Complex64;

/// Below this modulus the series is used directly.
const SERIES_RADIUS: f64 = 0.8;
const START: f64 = 0.5;
const DETOUR: f64 = 0.6;

/// `F(a, b; c; w)` on the principal sheet (cut along `[1, inf)`). For `w` on
/// the cut, `side` picks the limit `w + i0` (upper) or `w - i0` (lower).
pub fn hyp2f1(a: Complex64, b: Complex64, c: Complex64, w: Complex64, side: Side) -> Result<Complex64> {
    Ok(hyp2f1_pair(a, b, c, w, side)?.0)
}

/// `F'(a, b; c; w)`, same conventions as [`hyp2f1`].
pub fn hyp2f1_derivative(a: Complex64, b: Complex64, c: Complex64, w: Complex64, side: Side) -> Result<Complex64> {
    Ok(hyp2f1_pair(a, b, c, w, side)?.1)
}

fn series_pair(a: Complex64, b: Complex64, c: Complex64, w: Complex64) -> Result<(Complex64, Complex64)> {
    let f = hyp2f1_series(a, b, c, w)?.value;
    let d = hyp2f1_series(a + 1.0, b + 1.0, c + 1.0, w)?.value * a * b / c;
    Ok((f, d))
}

fn hyp2f1_pair(a: Complex64, b: Complex64, c: Complex64, w: Complex64, side: Side) -> Result<(Complex64, Complex64)> {
    if w.norm() < SERIES_RADIUS {
        return series_pair(a, b, c, w);
    }
    let start = Complex64::new(START, 0.0);
    let sigma = if w.im > 0.0 || (w.im == 0.0 && side == Side::Upper) { 1.0 } else { -1.0 };
    let h = sigma * DETOUR.max(w.im.abs());
    // Up from the start, across, then straight to the target: the path never
    // meets the real axis again, so it stays on the principal sheet.
    let path = PathPlan::new(
        vec![start, Complex64::new(START, sigma * DETOUR), Complex64::new(w.re, h), w],
        (0.5 * (w - 1.0).norm()).min(0.1),
    );
    let y0 = series_pair(a, b, c, start)?;
    let rhs = |z: Complex64, y: &[Complex64], out: &mut [Complex64]| {
        // z(1-z) F'' + (c - (a+b+1) z) F' - ab F = 0
        let zz = z * (1.0 - z);
        out[0] = y[1];
        out[1] = (a * b * y[0] - (c - (a + b + 1.0) * z) * y[1]) / zz;
    };
    let tol = OdeTol { abs_tol: 1e-15, rel_tol: 1e-13, max_steps: 500_000 };
    let sing = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
    let y = transport(rhs, &sing, &path, &[y0.0, y0.1], &tol)?;
    Ok((y[0], y[1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn log_continuation() {
        // F(1,1;2;w) = -log(1-w)/w, principal log
        for w in [Complex64::new(0.9, 0.5), Complex64::new(-3.0, 0.0), Complex64::new(2.5, -1.0)] {
            let v = hyp2f1(c(1.0), c(1.0), c(2.0), w, Side::Upper).unwrap();
            let exact = -(1.0 - w).ln() / w;
            assert!((v - exact).norm() < 1e-11, "{w}: {v} vs {exact}");
        }
        // on the cut: 1 - (w + i0) has argument -pi
        let w = c(3.0);
        let up = hyp2f1(c(1.0), c(1.0), c(2.0), w, Side::Upper).unwrap();
        let lo = hyp2f1(c(1.0), c(1.0), c(2.0), w, Side::Lower).unwrap();
        let l = Complex64::new(2f64.ln(), -std::f64::consts::PI);
        assert!((up - (-l / w)).norm() < 1e-11);
        assert!((lo - (-l.conj() / w)).norm() < 1e-11);
    }

    #[test]
    fn binomial_on_the_cut() {
        // F(a, b; b; w) = (1 - w)^{-a}
        let a = 0.3;
        let w = c(2.0);
        let up = hyp2f1(c(a), c(0.7), c(0.7), w, Side::Upper).unwrap();
        let exact = Complex64::from_polar(1.0, -std::f64::consts::PI).powf(-a);
        assert!((up - exact).norm() < 1e-11, "{up} vs {exact}");
    }
}
