//! Integrals of `t^{a-1} (1-t)^{c-a-1} (1-zt)^{-b} dt` over the six segments
//! joining `0, 1, 1/z, inf` for real `z` in (0, 1).
//!
//! Every segment is pulled back to (0, 1) by a Moebius map chosen so that each
//! factor becomes a positive base raised to a real power. The branch of the
//! original integrand is the principal one on (0, 1), continued to the other
//! segments through the upper or lower half `t`-plane; the resulting constant
//! phase is multiplied in at the end.

use super::quad::{tanh_sinh, QuadResult, QuadSpec};
use crate::arrangement::MasterFunction;
use crate::cohomology::OneForm;
use crate::error::{Error, Result};
use crate::exactalg::to_f64;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Upper,
    Lower,
}

impl Side {
    fn sign(self) -> f64 {
        match self {
            Side::Upper => 1.0,
            Side::Lower => -1.0,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Upper => "upper",
            Side::Lower => "lower",
        })
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "upper" | "up" => Ok(Side::Upper),
            "lower" | "down" => Ok(Side::Lower),
            _ => Err(Error::Parse(format!("side '{s}' is neither upper nor lower"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CycleId {
    InfZero,
    ZeroOne,
    OneInvZ,
    OneInf,
    InvZInf,
    ZeroInvZ,
}

impl CycleId {
    pub const ALL: [CycleId; 6] =
        [CycleId::InfZero, CycleId::ZeroOne, CycleId::OneInvZ, CycleId::OneInf, CycleId::InvZInf, CycleId::ZeroInvZ];

    pub fn as_str(self) -> &'static str {
        match self {
            CycleId::InfZero => "inf0",
            CycleId::ZeroOne => "01",
            CycleId::OneInvZ => "1-1z",
            CycleId::OneInf => "1inf",
            CycleId::InvZInf => "1zinf",
            CycleId::ZeroInvZ => "0-1z",
        }
    }

    /// The side on which the beta-function relations with Kummer's
    /// solutions hold with their customary phases.
    pub fn default_side(self) -> Side {
        match self {
            CycleId::InfZero | CycleId::OneInf => Side::Lower,
            _ => Side::Upper,
        }
    }

    /// Whether the segment leaves the real interval (0, 1), i.e. whether
    /// the side matters.
    pub fn has_side(self) -> bool {
        self != CycleId::ZeroOne
    }
}

impl fmt::Display for CycleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CycleId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "inf0" | "inf-0" => CycleId::InfZero,
            "01" | "0-1" => CycleId::ZeroOne,
            "1-1z" => CycleId::OneInvZ,
            "1inf" | "1-inf" => CycleId::OneInf,
            "1zinf" | "1z-inf" => CycleId::InvZInf,
            "0-1z" => CycleId::ZeroInvZ,
            _ => return Err(Error::Parse(format!("unknown cycle '{s}'"))),
        })
    }
}

/// Elementary pieces: (0,1), (1,1/z), (1/z,inf), (-inf,0).
#[derive(Clone, Copy)]
enum Piece {
    A,
    B,
    C,
    D,
}

fn pieces(cycle: CycleId) -> &'static [Piece] {
    match cycle {
        CycleId::ZeroOne => &[Piece::A],
        CycleId::OneInvZ => &[Piece::B],
        CycleId::InvZInf => &[Piece::C],
        CycleId::InfZero => &[Piece::D],
        CycleId::ZeroInvZ => &[Piece::A, Piece::B],
        CycleId::OneInf => &[Piece::B, Piece::C],
    }
}

fn check_exponent(name: &str, e: f64) -> Result<()> {
    if e > -1.0 {
        Ok(())
    } else {
        Err(Error::DivergentEndpoint(format!("local exponent {e} at t = {name}")))
    }
}

fn piece_integral(a: f64, b: f64, c: f64, z: f64, p: Piece, side: Side, q: &QuadSpec) -> Result<(Complex64, QuadResult)> {
    let s = side.sign();
    let (e0, e1, e_inv, e_inf) = (a - 1.0, c - a - 1.0, -b, b - c);
    let r = match p {
        Piece::A => {
            check_exponent("0", e0)?;
            check_exponent("1", e1)?;
            let f = |x: f64, xc: f64| Complex64::new(x.powf(e0) * xc.powf(e1) * (1.0 - z * x).powf(-b), 0.0);
            (Complex64::new(1.0, 0.0), tanh_sinh(f, q, (e0, e1))?)
        }
        Piece::B => {
            check_exponent("1", e1)?;
            check_exponent("1/z", e_inv)?;
            // t = 1 + L s, L = (1-z)/z; 1 - zt = (1-z)(1-s)
            let l = (1.0 - z) / z;
            let f = |x: f64, xc: f64| {
                Complex64::new((1.0 + l * x).powf(e0) * (l * x).powf(e1) * ((1.0 - z) * xc).powf(-b) * l, 0.0)
            };
            // (1-t) turns from positive to negative through arg -s*pi
            (Complex64::from_polar(1.0, -s * PI * e1), tanh_sinh(f, q, (e1, e_inv))?)
        }
        Piece::C => {
            check_exponent("1/z", e_inv)?;
            check_exponent("inf", e_inf)?;
            // t = 1/(z(1-s))
            let f = |x: f64, xc: f64| {
                Complex64::new(z.powf(1.0 - c) * x.powf(-b) * xc.powf(b - c) * (1.0 - z + z * x).powf(e1), 0.0)
            };
            (Complex64::from_polar(1.0, -s * PI * e1 + s * PI * b), tanh_sinh(f, q, (-b, b - c))?)
        }
        Piece::D => {
            check_exponent("0", e0)?;
            check_exponent("inf", e_inf)?;
            // t = -s/(1-s), traversed from -inf to 0
            let f = |x: f64, xc: f64| Complex64::new(x.powf(e0) * xc.powf(b - c) * (1.0 - (1.0 - z) * x).powf(-b), 0.0);
            (Complex64::from_polar(1.0, s * PI * e0), tanh_sinh(f, q, (e0, b - c))?)
        }
    };
    Ok((r.0 * r.1.value, r.1))
}

/// Cycle integral with the cycle's default side.
pub fn euler_cycle_integral(a: f64, b: f64, c: f64, z: f64, cycle: CycleId, q: &QuadSpec) -> Result<QuadResult> {
    euler_cycle_integral_on(a, b, c, z, cycle, cycle.default_side(), q)
}

pub fn euler_cycle_integral_on(a: f64, b: f64, c: f64, z: f64, cycle: CycleId, side: Side, q: &QuadSpec) -> Result<QuadResult> {
    let zero_ok = cycle == CycleId::ZeroOne && z == 0.0;
    if !zero_ok && !(z > 0.0 && z < 1.0) {
        return Err(Error::InvalidArgument(format!("z = {z} must lie in (0, 1) for cycle {cycle}")));
    }
    let mut value = Complex64::new(0.0, 0.0);
    let mut err_est = 0.0;
    let mut levels_used = 0;
    let mut evals = 0;
    for &p in pieces(cycle) {
        let (v, r) = piece_integral(a, b, c, z, p, side, q)?;
        value += v;
        err_est += r.err_est;
        levels_used = levels_used.max(r.levels_used);
        evals += r.evals;
    }
    Ok(QuadResult { value, err_est, levels_used, evals })
}

/// `int_0^1 Phi(t) eta(t) dt` for a master function on the canonical
/// configuration, with the symbol `z` set to `z`. All other zeros of the
/// linear forms must lie off [0, 1] so that `Phi` is real and positive there.
pub fn form_integral_01(m: &MasterFunction, eta: &OneForm, z: f64, q: &QuadSpec) -> Result<QuadResult> {
    let arr = m.arrangement();
    let zc = Complex64::new(z, 0.0);
    let num = eta.to_numeric(arr, zc)?;
    let exps: Vec<f64> = m.exponents().iter().map(to_f64).collect();
    for (j, &(p, qq)) in num.forms.iter().enumerate().skip(3) {
        if qq.norm() != 0.0 {
            let root = -p / qq;
            if root.im == 0.0 && (0.0..=1.0).contains(&root.re) {
                return Err(Error::InvalidArgument(format!("zero of l_{j} at t = {} lies on [0, 1]", root.re)));
            }
        }
    }
    let e0 = exps[1] - num.order_at(1) as f64;
    let e1 = exps[2] - num.order_at(2) as f64;
    // Each pole term is folded into its own power of l_j, so that 1/t^k is
    // never formed separately from t^alpha near the endpoints.
    let f = |x: f64, xc: f64| {
        let t = Complex64::new(x, 0.0);
        let mut lv: Vec<f64> = num.linear_values(t).iter().map(|l| l.re).collect();
        lv[1] = x;
        lv[2] = xc;
        let pw: Vec<f64> = lv.iter().zip(&exps).map(|(l, e)| l.powf(*e)).collect();
        let phi: f64 = pw.iter().skip(1).product();
        let mut s = num.poly.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * t + c) * phi;
        for &(j, k, c) in &num.poles {
            let rest: f64 = pw.iter().enumerate().skip(1).filter(|&(i, _)| i != j).map(|(_, p)| p).product();
            s += c * (lv[j].powf(exps[j] - k as f64) * rest);
        }
        s
    };
    tanh_sinh(f, q, (e0, e1))
}
