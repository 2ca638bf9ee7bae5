//! Basis forms: the consecutive dlog ratios for general `n`, the named
//! Gauss-case forms, and the shift that absorbs a shared factor into `Phi`.

use super::forms::{OneForm, TRational};
use crate::arrangement::{BranchTag, MasterFunction};
use crate::error::{Error, Result};
use crate::exactalg::{fmt_rat, int, Rat, RatFunc};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisForm {
    pub label: String,
    pub pair: (BranchTag, BranchTag),
    pub form: OneForm,
}

fn tag_of(j: usize) -> BranchTag {
    match j {
        1 => BranchTag::Zero,
        2 => BranchTag::One,
        _ => BranchTag::Inv(j),
    }
}

/// `dlog(l_j / l_{j+1})` for `j = 1..n-1`. For `n = 3` these are
/// `dt/(t(1-t))` and `(z-1) dt/((1-t)(1-zt))`.
pub fn default_basis(m: &MasterFunction) -> Vec<BasisForm> {
    let forms = m.arrangement().forms();
    (1..m.n())
        .map(|j| {
            let form = TRational::pole(j, 1, forms[j].q.clone()).sub(&TRational::pole(j + 1, 1, forms[j + 1].q.clone()));
            let pair = (tag_of(j), tag_of(j + 1));
            BasisForm { label: format!("phi[{},{}]", pair.0, pair.1), pair, form }
        })
        .collect()
}

/// Named one-forms of the Gauss case, `Phi = t^a (1-t)^{c-a} (1-zt)^{-b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GaussForm {
    /// `dt/t`
    InfZero,
    /// `dt/(t(1-t))`
    ZeroOne,
    /// `(z-1) dt/((1-t)(1-zt))`
    OneInvZ,
    /// `z dt/((1-t)(1-zt))`
    OneInvZTilde,
    /// `dt/(1-t)`
    OneInf,
    /// `z dt/(1-zt)`
    InvZInf,
    /// `dt/(t(1-zt))`
    ZeroInvZ,
}

impl GaussForm {
    pub fn label(self) -> &'static str {
        match self {
            GaussForm::InfZero => "phi[inf,0]",
            GaussForm::ZeroOne => "phi[0,1]",
            GaussForm::OneInvZ => "phi[1,1/z]",
            GaussForm::OneInvZTilde => "phi~[1,1/z]",
            GaussForm::OneInf => "phi[1,inf]",
            GaussForm::InvZInf => "phi[1/z,inf]",
            GaussForm::ZeroInvZ => "phi[0,1/z]",
        }
    }

    pub fn pair(self) -> (BranchTag, BranchTag) {
        use BranchTag::*;
        match self {
            GaussForm::InfZero => (Infinity, Zero),
            GaussForm::ZeroOne => (Zero, One),
            GaussForm::OneInvZ | GaussForm::OneInvZTilde => (One, Inv(3)),
            GaussForm::OneInf => (One, Infinity),
            GaussForm::InvZInf => (Inv(3), Infinity),
            GaussForm::ZeroInvZ => (Zero, Inv(3)),
        }
    }
}

/// Requires the Gauss arrangement `l_1 = t, l_2 = 1-t, l_3 = 1-zt`.
pub fn gauss_form(which: GaussForm, m: &MasterFunction) -> Result<BasisForm> {
    if m.n() != 3 {
        return Err(Error::InvalidArgument(format!("Gauss-case forms need n = 3, got n = {}", m.n())));
    }
    let arr = m.arrangement();
    let inv = |j| TRational::pole(j, 1, RatFunc::one());
    let z = m.config().params()[0].clone();
    let form = match which {
        GaussForm::InfZero => inv(1),
        GaussForm::ZeroOne => arr.mul(&inv(1), &inv(2)),
        GaussForm::OneInvZ => arr.mul(&inv(2), &inv(3)).scale(&(&z - &RatFunc::one())),
        GaussForm::OneInvZTilde => arr.mul(&inv(2), &inv(3)).scale(&z),
        GaussForm::OneInf => inv(2),
        GaussForm::InvZInf => inv(3).scale(&z),
        GaussForm::ZeroInvZ => arr.mul(&inv(1), &inv(3)),
    };
    Ok(BasisForm { label: which.label().into(), pair: which.pair(), form })
}

/// The six basis pairs `(phi_01, X)` of the Gauss case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairTag {
    InfZero,
    OneInvZ,
    OneInvZTilde,
    OneInf,
    InvZInf,
    ZeroInvZ,
}

impl PairTag {
    pub const ALL: [PairTag; 6] =
        [PairTag::InfZero, PairTag::OneInvZ, PairTag::OneInvZTilde, PairTag::OneInf, PairTag::InvZInf, PairTag::ZeroInvZ];

    pub fn as_str(self) -> &'static str {
        match self {
            PairTag::InfZero => "inf0",
            PairTag::OneInvZ => "1-1z",
            PairTag::OneInvZTilde => "tilde-1-1z",
            PairTag::OneInf => "1inf",
            PairTag::InvZInf => "1zinf",
            PairTag::ZeroInvZ => "0-1z",
        }
    }

    pub fn second(self) -> GaussForm {
        match self {
            PairTag::InfZero => GaussForm::InfZero,
            PairTag::OneInvZ => GaussForm::OneInvZ,
            PairTag::OneInvZTilde => GaussForm::OneInvZTilde,
            PairTag::OneInf => GaussForm::OneInf,
            PairTag::InvZInf => GaussForm::InvZInf,
            PairTag::ZeroInvZ => GaussForm::ZeroInvZ,
        }
    }

    /// Whether the hand derivation this catalog comes from absorbs the shared
    /// `(1-t)^{-1}` into `Phi` for this pair.
    pub fn shifted(self) -> bool {
        matches!(self, PairTag::OneInvZ | PairTag::OneInvZTilde)
    }
}

impl fmt::Display for PairTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PairTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "inf0" | "inf-0" => PairTag::InfZero,
            "1-1z" => PairTag::OneInvZ,
            "tilde-1-1z" | "t1-1z" => PairTag::OneInvZTilde,
            "1inf" | "1-inf" => PairTag::OneInf,
            "1zinf" | "1z-inf" => PairTag::InvZInf,
            "0-1z" => PairTag::ZeroInvZ,
            _ => return Err(Error::UnknownPair(s.into())),
        })
    }
}

pub fn gauss_basis(tag: PairTag, m: &MasterFunction) -> Result<Vec<BasisForm>> {
    Ok(vec![gauss_form(GaussForm::ZeroOne, m)?, gauss_form(tag.second(), m)?])
}

/// Record of a factor `l_j^{-1}` moved from the basis forms into `Phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftRecord {
    /// `None` for the identity shift.
    pub index: Option<usize>,
    pub old_exponent: Option<Rat>,
    pub new_exponent: Option<Rat>,
}

impl ShiftRecord {
    pub fn identity() -> Self {
        ShiftRecord { index: None, old_exponent: None, new_exponent: None }
    }

    pub fn is_identity(&self) -> bool {
        self.index.is_none()
    }
}

impl fmt::Display for ShiftRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.index, &self.old_exponent, &self.new_exponent) {
            (Some(j), Some(o), Some(n)) => write!(f, "alpha_{j}: {} -> {}", fmt_rat(o), fmt_rat(n)),
            _ => f.write_str("identity"),
        }
    }
}

/// Absorb a factor `l_j^{-1}` shared by every basis form into `Phi`:
/// `alpha_j` drops by one and each form is multiplied by `l_j`. The integrals
/// `Phi * phi` are unchanged, so any connection computed afterwards agrees
/// with the unshifted one.
///
/// Fails for `t^{-1}`, and for any factor whose removal leaves a form with no
/// finite pole (such as bare `dt`), which cannot serve as a basis element.
pub fn shift_exponents(m: &MasterFunction, basis: &[BasisForm]) -> Result<(MasterFunction, Vec<BasisForm>, ShiftRecord)> {
    let mut common: Option<Vec<usize>> = None;
    for b in basis {
        let idx: Vec<usize> = b.form.poles().keys().copied().collect();
        common = Some(match common {
            None => idx,
            Some(c) => c.into_iter().filter(|j| idx.contains(j)).collect(),
        });
    }
    let common = common.unwrap_or_default();
    if common.is_empty() {
        return Ok((m.clone(), basis.to_vec(), ShiftRecord::identity()));
    }
    let Some(&j) = common.iter().find(|&&j| j != 1) else {
        return Err(Error::UnabsorbableFactor("t^-1".into()));
    };
    let arr = m.arrangement();
    let lj = arr.form(j);
    let stripped: Vec<BasisForm> = basis
        .iter()
        .map(|b| BasisForm { form: arr.mul(&b.form, &lj), ..b.clone() })
        .collect();
    if stripped.iter().any(|b| b.form.poles().is_empty()) {
        return Err(Error::UnabsorbableFactor(format!("l_{j}^-1 (a stripped form has no finite pole)")));
    }
    let old = m.exponent(j).clone();
    let new = &old - int(1);
    let shifted = m.with_exponent(j, new.clone());
    Ok((shifted, stripped, ShiftRecord { index: Some(j), old_exponent: Some(old), new_exponent: Some(new) }))
}
