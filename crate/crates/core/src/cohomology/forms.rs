//! Rational functions of `t` with poles confined to an arrangement, stored as
//! principal parts at each `l_j` plus a polynomial part. The same type is used
//! for zero-forms `g` and for the `dt`-coefficient of one-forms.

use crate::arrangement::Arrangement;
use crate::exactalg::{Rat, RatFunc};
use num_complex::Complex64;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;

/// `sum_j sum_k poles[j][k-1] / l_j^k + sum_i poly[i] t^i`
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TRational {
    poles: BTreeMap<usize, Vec<RatFunc>>,
    poly: Vec<RatFunc>,
}

/// A one-form `eta(t) dt`, represented by its coefficient.
pub type OneForm = TRational;

fn trim(v: &mut Vec<RatFunc>) {
    while v.last().is_some_and(RatFunc::is_zero) {
        v.pop();
    }
}

fn add_at(v: &mut Vec<RatFunc>, i: usize, c: &RatFunc) {
    if c.is_zero() {
        return;
    }
    if v.len() <= i {
        v.resize(i + 1, RatFunc::zero());
    }
    v[i] = &v[i] + c;
}

fn binom(n: i64, k: usize) -> Rat {
    // generalized binomial, n may be negative
    let mut acc = Rat::one();
    for i in 0..k as i64 {
        acc = acc * Rat::from_integer((n - i).into()) / Rat::from_integer((i + 1).into());
    }
    acc
}

impl TRational {
    pub fn zero() -> Self {
        TRational::default()
    }

    pub fn constant(c: RatFunc) -> Self {
        TRational::monomial(0, c)
    }

    /// `c t^k`
    pub fn monomial(k: usize, c: RatFunc) -> Self {
        let mut poly = Vec::new();
        add_at(&mut poly, k, &c);
        TRational { poles: BTreeMap::new(), poly }
    }

    /// `c / l_j^k`, `k >= 1`.
    pub fn pole(j: usize, k: usize, c: RatFunc) -> Self {
        assert!(k >= 1, "pole order must be positive");
        let mut out = TRational::zero();
        out.add_pole(j, k, &c);
        out
    }

    pub fn from_poly(coeffs: Vec<RatFunc>) -> Self {
        let mut poly = coeffs;
        trim(&mut poly);
        TRational { poles: BTreeMap::new(), poly }
    }

    fn add_pole(&mut self, j: usize, k: usize, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let v = self.poles.entry(j).or_default();
        add_at(v, k - 1, c);
        trim(v);
        if v.is_empty() {
            self.poles.remove(&j);
        }
    }

    fn add_poly(&mut self, i: usize, c: &RatFunc) {
        add_at(&mut self.poly, i, c);
        trim(&mut self.poly);
    }

    pub fn is_zero(&self) -> bool {
        self.poles.is_empty() && self.poly.is_empty()
    }

    pub fn poles(&self) -> &BTreeMap<usize, Vec<RatFunc>> {
        &self.poles
    }

    pub fn poly(&self) -> &[RatFunc] {
        &self.poly
    }

    pub fn pole_coeff(&self, j: usize, k: usize) -> RatFunc {
        self.poles.get(&j).and_then(|v| v.get(k - 1)).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn pole_order(&self, j: usize) -> usize {
        self.poles.get(&j).map_or(0, Vec::len)
    }

    pub fn add(&self, o: &TRational) -> TRational {
        let mut out = self.clone();
        for (&j, v) in &o.poles {
            for (k, c) in v.iter().enumerate() {
                out.add_pole(j, k + 1, c);
            }
        }
        for (i, c) in o.poly.iter().enumerate() {
            out.add_poly(i, c);
        }
        out
    }

    pub fn sub(&self, o: &TRational) -> TRational {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> TRational {
        self.scale(&-RatFunc::one())
    }

    pub fn scale(&self, c: &RatFunc) -> TRational {
        if c.is_zero() {
            return TRational::zero();
        }
        TRational {
            poles: self.poles.iter().map(|(&j, v)| (j, v.iter().map(|x| x * c).collect())).collect(),
            poly: self.poly.iter().map(|x| x * c).collect(),
        }
    }

    /// Residues at the zeros of `l_1..l_{len-1}`: coefficients of `1/l_j`.
    pub fn simple_residues(&self, len: usize) -> Vec<RatFunc> {
        (1..len).map(|j| self.pole_coeff(j, 1)).collect()
    }

    /// Numeric view at a real or complex value of the symbol `z`.
    pub fn to_numeric(&self, arr: &Arrangement, z: Complex64) -> crate::Result<NumericTFunc> {
        let ev = |c: &RatFunc| c.eval_c(z);
        let mut poles = Vec::new();
        for (&j, v) in &self.poles {
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    poles.push((j, k + 1, ev(c)?));
                }
            }
        }
        let poly = self.poly.iter().map(ev).collect::<crate::Result<_>>()?;
        let forms = arr
            .forms()
            .iter()
            .map(|l| Ok((ev(&l.p)?, ev(&l.q)?)))
            .collect::<crate::Result<_>>()?;
        Ok(NumericTFunc { poles, poly, forms })
    }
}

/// Floating-point evaluation of a [`TRational`] at fixed `z`.
#[derive(Clone, Debug)]
pub struct NumericTFunc {
    pub poles: Vec<(usize, usize, Complex64)>,
    pub poly: Vec<Complex64>,
    /// `(p_j, q_j)` evaluated.
    pub forms: Vec<(Complex64, Complex64)>,
}

impl NumericTFunc {
    pub fn linear_values(&self, t: Complex64) -> Vec<Complex64> {
        self.forms.iter().map(|&(p, q)| p + q * t).collect()
    }

    /// Value at `t`, with `l_j(t)` supplied by the caller (so that values near
    /// a zero can be computed without cancellation).
    pub fn eval_with(&self, t: Complex64, lvals: &[Complex64]) -> Complex64 {
        let mut s = self.poly.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * t + c);
        for &(j, k, c) in &self.poles {
            s += c / lvals[j].powi(k as i32);
        }
        s
    }

    pub fn order_at(&self, j: usize) -> usize {
        self.poles.iter().filter(|p| p.0 == j).map(|p| p.1).max().unwrap_or(0)
    }
}

impl Arrangement {
    /// `l_j` as an element of [`TRational`].
    pub fn form(&self, j: usize) -> TRational {
        let l = &self.forms()[j];
        TRational::from_poly(vec![l.p.clone(), l.q.clone()])
    }

    /// Product of two rational functions of `t` over this arrangement.
    pub fn mul(&self, a: &TRational, b: &TRational) -> TRational {
        let mut out = TRational::zero();
        // polynomial * polynomial
        for (i, x) in a.poly.iter().enumerate() {
            for (k, y) in b.poly.iter().enumerate() {
                out.add_poly(i + k, &(x * y));
            }
        }
        for (p, q) in [(a, b), (b, a)] {
            if q.poly.is_empty() {
                continue;
            }
            for (&j, v) in &p.poles {
                for (k, c) in v.iter().enumerate() {
                    out = out.add(&self.poly_over_power(&q.poly, j, k + 1).scale(c));
                }
            }
        }
        for (&i, vi) in &a.poles {
            for (&j, vj) in &b.poles {
                for (k, ci) in vi.iter().enumerate() {
                    if ci.is_zero() {
                        continue;
                    }
                    for (m, cj) in vj.iter().enumerate() {
                        if cj.is_zero() {
                            continue;
                        }
                        let c = ci * cj;
                        if i == j {
                            out.add_pole(i, k + m + 2, &c);
                        } else {
                            out = out.add(&self.pole_product(i, k + 1, j, m + 1).scale(&c));
                        }
                    }
                }
            }
        }
        out
    }

    /// `P(t) / l_j^k` in partial fractions.
    fn poly_over_power(&self, poly: &[RatFunc], j: usize, k: usize) -> TRational {
        let l = &self.forms()[j];
        // Rewrite P in powers of l_j using t = (l_j - p_j) / q_j.
        let qi = l.q.inv().expect("non-constant form");
        let shift = [-(&l.p * &qi), qi];
        let mut e: Vec<RatFunc> = Vec::new();
        for c in poly.iter().rev() {
            let mut next = vec![RatFunc::zero(); e.len() + 1];
            for (i, x) in e.iter().enumerate() {
                next[i] = &next[i] + &(x * &shift[0]);
                next[i + 1] = &next[i + 1] + &(x * &shift[1]);
            }
            next[0] = &next[0] + c;
            e = next;
        }
        let mut out = TRational::zero();
        let lj = self.form(j);
        let mut lpow = TRational::constant(RatFunc::one());
        for (i, c) in e.iter().enumerate() {
            if i < k {
                out.add_pole(j, k - i, c);
            } else {
                out = out.add(&lpow.scale(c));
                lpow = self.mul(&lpow, &lj);
            }
        }
        out
    }

    /// `1 / (l_i^k l_j^m)` for `i != j`, by expanding each factor about the
    /// other's zero: with `l_j = lam + mu l_i` near `r_i`, the coefficient of
    /// `l_i^{-s}` is `lam^{-m} binom(-m, k-s) (mu/lam)^{k-s}`.
    fn pole_product(&self, i: usize, k: usize, j: usize, m: usize) -> TRational {
        let mut out = TRational::zero();
        for (a, ka, b, mb) in [(i, k, j, m), (j, m, i, k)] {
            let lam = &self.lam[a][b];
            let ratio = &self.mu[a][b] / lam;
            let base = lam.pow(-(mb as i32)).expect("distinct zeros");
            let mut pw = RatFunc::one();
            for n in 0..ka {
                let s = ka - n;
                out.add_pole(a, s, &(&base * &pw).scale(&binom(-(mb as i64), n)));
                pw = &pw * &ratio;
            }
        }
        out
    }

    /// `d/dt`
    pub fn d_dt(&self, a: &TRational) -> TRational {
        let mut out = TRational::zero();
        for (i, c) in a.poly.iter().enumerate().skip(1) {
            out.add_poly(i - 1, &c.scale(&Rat::from_integer(i.into())));
        }
        for (&j, v) in &a.poles {
            let q = &self.forms()[j].q;
            for (k, c) in v.iter().enumerate() {
                let k = k + 1;
                out.add_pole(j, k + 1, &(c * q).scale(&-Rat::from_integer(k.into())));
            }
        }
        out
    }

    /// Derivative in the symbol `z` at fixed `t`: coefficients and the forms
    /// `l_j` both move. With `d_z l = beta + gamma l`, where `gamma = q'/q` and
    /// `beta = p' - gamma p`, the term `c/l^k` contributes
    /// `c'/l^k - k c (beta/l^{k+1} + gamma/l^k)`.
    pub fn d_param(&self, a: &TRational) -> TRational {
        let mut out = TRational::zero();
        for (i, c) in a.poly.iter().enumerate() {
            out.add_poly(i, &c.derivative());
        }
        for (&j, v) in &a.poles {
            let l = &self.forms()[j];
            let gamma = &l.q.derivative() / &l.q;
            let beta = &l.p.derivative() - &(&gamma * &l.p);
            for (k, c) in v.iter().enumerate() {
                let k = k + 1;
                let kc = c.scale(&Rat::from_integer(k.into()));
                out.add_pole(j, k, &c.derivative());
                out.add_pole(j, k + 1, &-(&kc * &beta));
                out.add_pole(j, k, &-(&kc * &gamma));
            }
        }
        out
    }
}

impl fmt::Display for TRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (&j, v) in &self.poles {
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    let pw = if k == 0 { String::new() } else { format!("^{}", k + 1) };
                    parts.push(format!("({c})/l{j}{pw}"));
                }
            }
        }
        for (i, c) in self.poly.iter().enumerate() {
            if !c.is_zero() {
                parts.push(match i {
                    0 => format!("({c})"),
                    1 => format!("({c}) t"),
                    _ => format!("({c}) t^{i}"),
                });
            }
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}
