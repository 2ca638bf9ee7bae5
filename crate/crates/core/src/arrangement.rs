//! Point configurations on the projective line and the master function
//! `Phi = prod_j l_j(t)^{alpha_j}` built from them.
//!
//! Canonical coordinates: columns `(1,0), (0,1), (1,-1), (1,-z_3), ...`, which
//! give the linear forms `l_0 = 1, l_1 = t, l_2 = 1 - t, l_j = 1 - z_j t`.

use crate::cohomology::TRational;
use crate::error::{Error, Result};
use crate::exactalg::{fmt_rat, int, is_integer, Rat, RatFunc};
use std::fmt;

/// `l(t) = p + q t`, coefficients rational in the symbol `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    pub p: RatFunc,
    pub q: RatFunc,
}

impl LinearForm {
    pub fn new(p: RatFunc, q: RatFunc) -> Self {
        LinearForm { p, q }
    }

    pub fn is_constant(&self) -> bool {
        self.q.is_zero()
    }

    /// Zero of the form, `-p/q`; `None` for constant forms.
    pub fn root(&self) -> Option<RatFunc> {
        (!self.is_constant()).then(|| -(&self.p / &self.q))
    }

    pub fn eval(&self, t: &RatFunc) -> RatFunc {
        &self.p + &(&self.q * t)
    }
}

/// A fixed family of linear forms with the partial-fraction data needed to
/// multiply rational functions of `t` whose poles sit at their zeros.
#[derive(Clone, Debug)]
pub struct Arrangement {
    forms: Vec<LinearForm>,
    /// `lam[i][j] = l_j(r_i)` for non-constant `i != j`.
    pub(crate) lam: Vec<Vec<RatFunc>>,
    /// `mu[i][j] = q_j / q_i`, the slope of `l_j` in the local coordinate `l_i`.
    pub(crate) mu: Vec<Vec<RatFunc>>,
}

impl Arrangement {
    pub fn new(forms: Vec<LinearForm>) -> Result<Self> {
        let n = forms.len();
        let mut lam = vec![vec![RatFunc::zero(); n]; n];
        let mut mu = vec![vec![RatFunc::zero(); n]; n];
        for i in 0..n {
            let Some(ri) = forms[i].root() else { continue };
            for j in 0..n {
                if i == j {
                    continue;
                }
                lam[i][j] = forms[j].eval(&ri);
                if lam[i][j].is_zero() {
                    return Err(Error::DegenerateConfiguration(format!(
                        "l_{i} and l_{j} share the zero t = {ri}"
                    )));
                }
                mu[i][j] = &forms[j].q / &forms[i].q;
            }
        }
        Ok(Arrangement { forms, lam, mu })
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Indices of forms with a finite zero.
    pub fn pole_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.forms.len()).filter(|&j| !self.forms[j].is_constant())
    }

    /// Index of the form vanishing at `t = location`.
    pub fn index_of_root(&self, location: &RatFunc) -> Option<usize> {
        self.pole_indices().find(|&j| self.forms[j].root().as_ref() == Some(location))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BranchTag {
    Zero,
    One,
    /// `1/z_j`, the zero of `l_j`, `j >= 3`.
    Inv(usize),
    Infinity,
}

impl fmt::Display for BranchTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchTag::Zero => f.write_str("0"),
            BranchTag::One => f.write_str("1"),
            BranchTag::Inv(j) => write!(f, "1/z{j}"),
            BranchTag::Infinity => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchPoint {
    pub tag: BranchTag,
    /// `None` is the point at infinity.
    pub location: Option<RatFunc>,
}

/// Canonical configuration: `n >= 3` and the cross-ratio parameters
/// `z_3, ..., z_n` (stored from index 0). Any of them may be the symbol `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigZ {
    params: Vec<RatFunc>,
}

impl ConfigZ {
    pub fn new(params: Vec<RatFunc>) -> Result<Self> {
        if params.is_empty() {
            return Err(Error::InvalidArgument("need n >= 3, i.e. at least one parameter".into()));
        }
        for (i, zi) in params.iter().enumerate() {
            if zi.is_zero() || zi.is_one() {
                return Err(Error::DegenerateConfiguration(format!("z_{} = {zi}", i + 3)));
            }
            if params[..i].contains(zi) {
                return Err(Error::DegenerateConfiguration(format!("repeated parameter {zi}")));
            }
        }
        Ok(ConfigZ { params })
    }

    /// The Gr(2,4) case: one symbolic parameter.
    pub fn gauss() -> Self {
        ConfigZ { params: vec![RatFunc::z()] }
    }

    pub fn n(&self) -> usize {
        self.params.len() + 2
    }

    pub fn params(&self) -> &[RatFunc] {
        &self.params
    }

    pub fn forms(&self) -> Vec<LinearForm> {
        let one = RatFunc::one;
        let mut v = vec![
            LinearForm::new(one(), RatFunc::zero()),
            LinearForm::new(RatFunc::zero(), one()),
            LinearForm::new(one(), -one()),
        ];
        v.extend(self.params.iter().map(|z| LinearForm::new(one(), -z)));
        v
    }

    pub fn branch_points(&self) -> Vec<BranchPoint> {
        let mut v = vec![
            BranchPoint { tag: BranchTag::Zero, location: Some(RatFunc::zero()) },
            BranchPoint { tag: BranchTag::One, location: Some(RatFunc::one()) },
        ];
        for (i, z) in self.params.iter().enumerate() {
            v.push(BranchPoint { tag: BranchTag::Inv(i + 3), location: Some(z.inv().expect("z_j != 0")) });
        }
        v.push(BranchPoint { tag: BranchTag::Infinity, location: None });
        v
    }
}

fn minor(raw: &[Vec<RatFunc>; 2], i: usize, j: usize) -> RatFunc {
    &(&raw[0][i] * &raw[1][j]) - &(&raw[0][j] * &raw[1][i])
}

/// Bring a 2 x (n+1) matrix to canonical form by the left GL(2) action and
/// column scaling. The resulting `z_j` is the cross-ratio
/// `[v2,v1][v0,vj] / ([v0,v2][vj,v1])` of the columns.
pub fn normalize_z_matrix(raw: &[Vec<RatFunc>; 2]) -> Result<ConfigZ> {
    let cols = raw[0].len();
    if raw[1].len() != cols || cols < 4 {
        return Err(Error::InvalidArgument(format!(
            "expected a 2 x (n+1) matrix with n >= 3, got rows of length {} and {}",
            raw[0].len(),
            raw[1].len()
        )));
    }
    for i in 0..cols {
        for j in i + 1..cols {
            if minor(raw, i, j).is_zero() {
                return Err(Error::DegenerateConfiguration(format!("columns {i} and {j} are proportional")));
            }
        }
    }
    let params = (3..cols)
        .map(|j| {
            let n = &minor(raw, 2, 1) * &minor(raw, 0, j);
            let d = &minor(raw, 0, 2) * &minor(raw, j, 1);
            &n / &d
        })
        .collect();
    ConfigZ::new(params)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// All `n+1` exponents are live and must sum to `-2`.
    Projective,
    /// `l_0 = 1`, so `alpha_0` is carried for bookkeeping only.
    NonProjected,
}

#[derive(Clone, Debug)]
pub struct MasterFunction {
    config: ConfigZ,
    arr: Arrangement,
    exponents: Vec<Rat>,
    mode: Mode,
}

/// Build `Phi` on a canonical configuration. `exponents` has `n+1` entries
/// `(alpha_0, ..., alpha_n)`, or `n` entries `(alpha_1, ..., alpha_n)` in
/// non-projected mode, in which case `alpha_0` is set to `-2 - sum`.
pub fn build_master(config: &ConfigZ, exponents: &[Rat], mode: Mode) -> Result<MasterFunction> {
    let n = config.n();
    let exps: Vec<Rat> = match (mode, exponents.len()) {
        (_, k) if k == n + 1 => exponents.to_vec(),
        (Mode::NonProjected, k) if k == n => {
            let s: Rat = exponents.iter().sum();
            std::iter::once(int(-2) - s).chain(exponents.iter().cloned()).collect()
        }
        (_, k) => {
            return Err(Error::InvalidArgument(format!("{k} exponents for n = {n}")));
        }
    };
    let live = match mode {
        Mode::Projective => 0,
        Mode::NonProjected => 1,
    };
    for (j, a) in exps.iter().enumerate().skip(live) {
        if is_integer(a) {
            return Err(Error::ResonantExponent(format!("alpha_{j} = {}", fmt_rat(a))));
        }
    }
    let tail: Rat = exps[1..].iter().sum();
    match mode {
        Mode::Projective => {
            let s = &exps[0] + &tail;
            if s != int(-2) {
                return Err(Error::ExponentSumViolation(fmt_rat(&s)));
            }
        }
        Mode::NonProjected => {
            if is_integer(&tail) {
                return Err(Error::ResonantExponent(format!("alpha_1 + ... + alpha_n = {}", fmt_rat(&tail))));
            }
        }
    }
    Ok(MasterFunction::unchecked(config.clone(), exps, mode))
}

impl MasterFunction {
    /// Skips the non-resonance checks; meant for tests that need degenerate
    /// exponents such as all zeros.
    pub fn unchecked(config: ConfigZ, exponents: Vec<Rat>, mode: Mode) -> Self {
        let arr = Arrangement::new(config.forms()).expect("canonical configurations are in general position");
        MasterFunction { config, arr, exponents, mode }
    }

    /// `t^a (1-t)^{c-a} (1-zt)^{-b}`
    pub fn gauss(a: &Rat, b: &Rat, c: &Rat) -> Result<Self> {
        build_master(&ConfigZ::gauss(), &[a.clone(), c - a, -b], Mode::NonProjected)
    }

    pub fn config(&self) -> &ConfigZ {
        &self.config
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arr
    }

    pub fn exponents(&self) -> &[Rat] {
        &self.exponents
    }

    pub fn exponent(&self, j: usize) -> &Rat {
        &self.exponents[j]
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.config.n()
    }

    /// Same arrangement with `alpha_j` replaced.
    pub fn with_exponent(&self, j: usize, value: Rat) -> Self {
        let mut m = self.clone();
        m.exponents[j] = value;
        m
    }

    /// Sum of the exponents of the non-constant forms; the degree of `Phi`
    /// at infinity enters the polynomial-part reduction through it.
    pub fn finite_exponent_sum(&self) -> Rat {
        self.arr.pole_indices().map(|j| self.exponents[j].clone()).sum()
    }

    /// Exponent-wise product of two master functions on the same configuration.
    pub fn product(&self, other: &MasterFunction) -> Result<Self> {
        if self.config != other.config {
            return Err(Error::InvalidArgument("master functions live on different configurations".into()));
        }
        let e = self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect();
        Ok(MasterFunction::unchecked(self.config.clone(), e, self.mode))
    }
}

/// `d log Phi = sum_j alpha_j q_j / l_j dt`, simple poles only.
pub fn dlog_phi(m: &MasterFunction) -> TRational {
    let mut out = TRational::zero();
    for j in m.arr.pole_indices() {
        let c = m.arr.forms()[j].q.scale(&m.exponents[j]);
        out = out.add(&TRational::pole(j, 1, c));
    }
    out
}

/// `d_z log Phi` as a function of `t`, differentiating in the symbol `z`.
pub fn dz_log_phi(m: &MasterFunction) -> TRational {
    let mut out = TRational::zero();
    for (j, l) in m.arr.forms().iter().enumerate() {
        let a = &m.exponents[j];
        if l.is_constant() {
            // l_0 = 1 in canonical form; kept general for arbitrary arrangements.
            if !l.p.derivative().is_zero() {
                out = out.add(&TRational::constant((&l.p.derivative() / &l.p).scale(a)));
            }
            continue;
        }
        let (dp, dq) = (l.p.derivative(), l.q.derivative());
        let gamma = &dq / &l.q;
        let beta = &dp - &(&gamma * &l.p);
        out = out.add(&TRational::constant(gamma.scale(a))).add(&TRational::pole(j, 1, beta.scale(a)));
    }
    out
}

impl fmt::Display for MasterFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .arr
            .forms()
            .iter()
            .enumerate()
            .filter(|(_, l)| !l.is_constant())
            .map(|(j, l)| {
                let lin = if l.p.is_zero() {
                    format!("({}) t", l.q)
                } else {
                    format!("({} + ({}) t)", l.p, l.q)
                };
                format!("{lin}^({})", fmt_rat(&self.exponents[j]))
            })
            .collect();
        f.write_str(&parts.join(" * "))
    }
}
