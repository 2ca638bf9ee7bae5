use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Series evaluation is refused for `|z| >= 1 - SERIES_MARGIN`.
pub const SERIES_MARGIN: f64 = 0.02;

/// `(a)_n = a (a+1) ... (a+n-1)`, `(a)_0 = 1`.
pub fn pochhammer(a: Complex64, n: i64) -> Result<Complex64> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("Pochhammer index {n} is negative")));
    }
    Ok((0..n).fold(Complex64::new(1.0, 0.0), |acc, k| acc * (a + k as f64)))
}

fn is_nonpositive_integer(x: Complex64) -> bool {
    x.im == 0.0 && x.re <= 0.0 && x.re == x.re.round()
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `log Gamma(z)`, Lanczos with reflection for `Re z < 1/2`. Only `exp` of the
/// result is branch-independent.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::PolePar(format!("Gamma has a pole at {}", z.re)));
    }
    Ok(ln_gamma_unchecked(z))
}

fn ln_gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let pi = Complex64::new(PI, 0.0);
        return pi.ln() - (pi * z).sin().ln() - ln_gamma_unchecked(1.0 - z);
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, p) in LANCZOS.iter().enumerate().skip(1) {
        x += *p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(ln_gamma(z)?.exp())
}

/// `B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)`.
pub fn beta(a: Complex64, b: Complex64) -> Result<Complex64> {
    let s = a + b;
    if is_nonpositive_integer(s) && !is_nonpositive_integer(a) && !is_nonpositive_integer(b) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok((ln_gamma(a)? + ln_gamma(b)? - ln_gamma(s)?).exp())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    pub err_est: f64,
    pub terms: usize,
}

pub fn hyp2f1_series(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<SeriesValue> {
    hyp2f1_series_with(a, b, c, z, 1e-17)
}

/// Power series of Gauss' function, stopped once three consecutive terms are
/// below `rel_tol * |sum|`.
pub fn hyp2f1_series_with(a: Complex64, b: Complex64, c: Complex64, z: Complex64, rel_tol: f64) -> Result<SeriesValue> {
    if is_nonpositive_integer(c) {
        return Err(Error::PolePar("c is a non-positive integer".into()));
    }
    if z.norm() >= 1.0 - SERIES_MARGIN {
        return Err(Error::OutsideDisk(format!("|z| = {} >= {}", z.norm(), 1.0 - SERIES_MARGIN)));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut abs_sum = 1.0;
    let mut small = 0;
    let mut n = 0usize;
    while small < 3 {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        abs_sum += term.norm();
        n += 1;
        if term.norm() <= rel_tol * sum.norm() {
            small += 1;
        } else {
            small = 0;
        }
        if n > 1_000_000 {
            return Err(Error::InvalidArgument("series did not settle within 10^6 terms".into()));
        }
    }
    let r = z.norm();
    let err_est = term.norm() * r / (1.0 - r) + 4.0 * f64::EPSILON * abs_sum;
    Ok(SeriesValue { value: sum, err_est, terms: n + 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::c;

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(c(0.3), 0).unwrap(), c(1.0));
        assert_eq!(pochhammer(c(2.0), 3).unwrap(), c(24.0));
        assert_eq!(pochhammer(c(1.0), 6).unwrap(), c(720.0));
        assert!(pochhammer(c(1.0), -1).is_err());
    }

    #[test]
    fn gamma_and_beta() {
        assert!((gamma(c(0.5)).unwrap() - c(PI.sqrt())).norm() < 1e-14);
        assert!((beta(c(1.0), c(1.0)).unwrap() - c(1.0)).norm() < 1e-14);
        assert!((beta(c(2.0), c(3.0)).unwrap() - c(1.0 / 12.0)).norm() < 1e-15);
        // reflection branch: Gamma(-1/2) = -2 sqrt(pi)
        assert!((gamma(c(-0.5)).unwrap() - c(-2.0 * PI.sqrt())).norm() < 1e-13);
        assert!(matches!(ln_gamma(c(-2.0)), Err(Error::PolePar(_))));
    }

    #[test]
    fn series_closed_forms() {
        assert_eq!(hyp2f1_series(c(0.3), c(0.2), c(0.7), c(0.0)).unwrap().value, c(1.0));
        let v = hyp2f1_series(c(1.0), c(1.0), c(2.0), c(0.5)).unwrap();
        assert!((v.value - c(2.0 * 2f64.ln())).norm() < 1e-15);
        let v = hyp2f1_series(c(0.5), c(0.37), c(0.37), c(0.25)).unwrap();
        assert!((v.value - c(0.75f64.powf(-0.5))).norm() < 1e-15);
        assert!(matches!(hyp2f1_series(c(1.0), c(1.0), c(-2.0), c(0.5)), Err(Error::PolePar(_))));
        assert!(matches!(hyp2f1_series(c(1.0), c(1.0), c(2.0), c(0.99)), Err(Error::OutsideDisk(_))));
    }
}
