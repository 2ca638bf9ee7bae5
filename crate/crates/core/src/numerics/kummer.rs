//! Kummer's six local solutions of Gauss' equation and their relation to
//! the cycle integrals through beta-function multiples.

use super::cycles::{euler_cycle_integral_on, CycleId, Side};
use super::hyp::hyp2f1;
use super::quad::QuadSpec;
use super::special::beta;
use super::{c as cx, rel_err};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Two readings of the solutions at 1 and infinity. `Corrected` uses
/// `f_4 = (1-z)^{c-a-b} F(c-a, c-b; c-a-b+1; 1-z)` and
/// `f_6 = z^{-b} F(b-c+1, b; b-a+1; 1/z)`; `AsPrinted` uses `F(c-a, c-a; ...)`
/// for `f_4` and the argument `z` for `f_6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KummerVariant {
    Corrected,
    AsPrinted,
}

/// Local solution `f_index`, `index` in 1..=6. When the argument of `F`
/// lands on its cut, `cut_side` selects `w + i0` (upper) or `w - i0`.
pub fn kummer_local(
    index: usize,
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
    variant: KummerVariant,
    cut_side: Side,
) -> Result<Complex64> {
    let one = cx(1.0);
    let f = |a, b, c, w| hyp2f1(a, b, c, w, cut_side);
    Ok(match index {
        1 => f(a, b, c, z)?,
        2 => z.powc(one - c) * f(a - c + 1.0, b - c + 1.0, 2.0 - c, z)?,
        3 => f(a, b, a + b - c + 1.0, one - z)?,
        4 => {
            let second = if variant == KummerVariant::Corrected { c - b } else { c - a };
            (one - z).powc(c - a - b) * f(c - a, second, c - a - b + 1.0, one - z)?
        }
        5 => z.powc(-a) * f(a, a - c + 1.0, a - b + 1.0, z.inv())?,
        6 => {
            let w = if variant == KummerVariant::Corrected { z.inv() } else { z };
            z.powc(-b) * f(b - c + 1.0, b, b - a + 1.0, w)?
        }
        _ => return Err(Error::InvalidArgument(format!("Kummer index {index} is not in 1..6"))),
    })
}

/// One of the six beta-function relations: the integral of
/// `Phi phi_01` over `cycle` equals `phase * B(beta_args) * f_kummer`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relation {
    pub index: usize,
    pub cycle: CycleId,
    pub kummer: usize,
}

impl Relation {
    pub fn new(index: usize) -> Result<Self> {
        let (cycle, kummer) = match index {
            1 => (CycleId::ZeroOne, 1),
            2 => (CycleId::InvZInf, 2),
            3 => (CycleId::InfZero, 3),
            4 => (CycleId::OneInvZ, 4),
            5 => (CycleId::ZeroInvZ, 5),
            6 => (CycleId::OneInf, 6),
            _ => return Err(Error::InvalidArgument(format!("relation index {index} is not in 1..6"))),
        };
        Ok(Relation { index, cycle, kummer })
    }

    pub fn letter(&self) -> char {
        (b'a' + (self.index - 1) as u8) as char
    }

    /// `phase * B(..)` multiplying the Kummer solution.
    pub fn factor(&self, a: f64, b: f64, c: f64) -> Result<Complex64> {
        let e = |x: f64| Complex64::from_polar(1.0, PI * x);
        Ok(match self.index {
            1 => beta(cx(a), cx(c - a))?,
            2 => e(a + b - c + 1.0) * beta(cx(b - c + 1.0), cx(1.0 - b))?,
            3 => e(1.0 - a) * beta(cx(a), cx(b - c + 1.0))?,
            4 => e(a - c + 1.0) * beta(cx(c - a), cx(1.0 - b))?,
            5 => beta(cx(a), cx(1.0 - b))?,
            6 => e(-(a + b - c + 1.0)) * beta(cx(b - c + 1.0), cx(c - a))?,
            _ => unreachable!(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RelationResult {
    pub relation: Relation,
    pub cycle: CycleId,
    pub side: Side,
    pub variant: KummerVariant,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_err: f64,
    pub rel_err: f64,
}

/// Check relation `index` (1..=6 for a..f) with its standard cycle and the
/// corrected Kummer solutions.
pub fn relation_check(index: usize, a: f64, b: f64, c: f64, z: f64, q: &QuadSpec) -> Result<RelationResult> {
    let r = Relation::new(index)?;
    relation_check_with(index, r.cycle, r.cycle.default_side(), KummerVariant::Corrected, a, b, c, z, q)
}

/// Same with the cycle, side and Kummer reading chosen by the caller, for
/// searching which combination a relation actually holds for.
#[allow(clippy::too_many_arguments)]
pub fn relation_check_with(
    index: usize,
    cycle: CycleId,
    side: Side,
    variant: KummerVariant,
    a: f64,
    b: f64,
    c: f64,
    z: f64,
    q: &QuadSpec,
) -> Result<RelationResult> {
    let relation = Relation::new(index)?;
    let lhs = euler_cycle_integral_on(a, b, c, z, cycle, side, q)?.value;
    // At real z in (0, 1) only f_5 and f_6 hit the cut of F, at 1/z > 1; the
    // relations hold with the upper limit there.
    let f = kummer_local(relation.kummer, cx(a), cx(b), cx(c), cx(z), variant, Side::Upper)?;
    let rhs = relation.factor(a, b, c)? * f;
    Ok(RelationResult { relation, cycle, side, variant, lhs, rhs, abs_err: (lhs - rhs).norm(), rel_err: rel_err(lhs, rhs) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_prefactor_and_f1() {
        let (a, b, c) = (cx(0.3), cx(0.2), cx(0.7));
        let z = cx(1e-30);
        let f2 = kummer_local(2, a, b, c, z, KummerVariant::Corrected, Side::Upper).unwrap();
        assert!((f2 * z.powc(c - 1.0) - 1.0).norm() < 1e-12);
        let f1 = kummer_local(1, a, b, c, cx(0.4), KummerVariant::Corrected, Side::Upper).unwrap();
        let s = super::super::hyp2f1_series(a, b, c, cx(0.4)).unwrap().value;
        assert_eq!(f1, s);
    }

    #[test]
    fn b_to_zero_degenerates_to_beta() {
        let (a, c, z) = (1.0 / 3.0, 5.0 / 7.0, 0.5);
        let r = relation_check(1, a, 0.0, c, z, &QuadSpec::default()).unwrap();
        let bb = beta(cx(a), cx(c - a)).unwrap();
        assert!((r.lhs - bb).norm() / bb.norm() < 1e-12);
        let f1 = kummer_local(1, cx(a), cx(0.0), cx(c), cx(z), KummerVariant::Corrected, Side::Upper).unwrap();
        assert_eq!(f1, cx(1.0));
    }
}
