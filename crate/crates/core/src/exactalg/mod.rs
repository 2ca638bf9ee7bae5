//! Exact arithmetic: big rationals, polynomials and normalized rational
//! functions in the single symbol `z`, partial fractions, and small dense
//! linear algebra over any exact field.

mod linalg;
mod partial;
mod poly;
mod ratfunc;

pub use linalg::{det, inverse, mat_mul, rank, rank_ratfunc, solve, Matrix, Scalar};
pub use partial::{rational_roots, residue_decompose, residue_decompose_at, PartialFractions, PoleTerm};
pub use poly::Poly;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`. Decimal points are rejected on purpose so that
/// floating input never leaks into exact computations.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("'{s}' is not a rational of the form p/q"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rat::new(n, d))
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn to_f64(r: &Rat) -> f64 {
    // Large numerators and denominators overflow f64 separately; scale first.
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            let shift = r.numer().bits().max(r.denom().bits()) as i64 - 60;
            let n = (r.numer() >> shift.max(0) as usize).to_f64().unwrap_or(0.0);
            let d = (r.denom() >> shift.max(0) as usize).to_f64().unwrap_or(1.0);
            n / d
        }
    }
}

/// Display a rational as `p/q` or `p`.
pub fn fmt_rat(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
