//! The first Weyl algebra in `z` and `d = d/dz`, normal ordered
//! (all `z` to the left), with `d z = z d + 1`.

use super::ScalarODE2;
use crate::error::{Error, Result};
use crate::exactalg::{fmt_rat, int, Poly, Rat, RatFunc};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Sparse `sum c_{i,j} z^i d^j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeylElement {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl WeylElement {
    pub fn zero() -> Self {
        WeylElement::default()
    }

    pub fn constant(c: Rat) -> Self {
        WeylElement::term(0, 0, c)
    }

    /// `c z^i d^j`
    pub fn term(i: u32, j: u32, c: Rat) -> Self {
        let mut w = WeylElement::zero();
        w.add_term(i, j, c);
        w
    }

    pub fn z() -> Self {
        WeylElement::term(1, 0, Rat::one())
    }

    pub fn d() -> Self {
        WeylElement::term(0, 1, Rat::one())
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rat> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, o: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> WeylElement {
        let mut out = WeylElement::zero();
        for (&(i, j), x) in &self.terms {
            out.add_term(i, j, x * c);
        }
        out
    }

    pub fn neg(&self) -> WeylElement {
        self.scale(&int(-1))
    }

    pub fn sub(&self, o: &WeylElement) -> WeylElement {
        self.add(&o.neg())
    }

    /// Product with normal ordering: `d^b z^c = sum_k C(b,k) c!/(c-k)! z^{c-k} d^{b-k}`.
    pub fn mul(&self, o: &WeylElement) -> WeylElement {
        let mut out = WeylElement::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &o.terms {
                let mut binom = Rat::one();
                let mut falling = Rat::one();
                for k in 0..=b.min(c) {
                    out.add_term(a + c - k, b + d - k, x * y * &binom * &falling);
                    binom = binom * int((b - k) as i64) / int(k as i64 + 1);
                    falling *= int((c - k) as i64);
                }
            }
        }
        out
    }

    /// Coefficient of `d^j` as a polynomial in `z`.
    pub fn d_coeff(&self, j: u32) -> Poly {
        let deg = self.terms.keys().map(|k| k.0).max().unwrap_or(0) as usize;
        let mut cs = vec![Rat::zero(); deg + 1];
        for (&(i, jj), c) in &self.terms {
            if jj == j {
                cs[i as usize] += c;
            }
        }
        Poly::new(cs)
    }

    /// Normalize a second-order operator to `d^2 + p d + q`.
    pub fn to_scalar_ode(&self) -> Result<ScalarODE2> {
        if self.terms.keys().any(|k| k.1 > 2) {
            return Err(Error::InvalidArgument("operator order exceeds 2".into()));
        }
        let lead = self.d_coeff(2);
        if lead.is_zero() {
            return Err(Error::InvalidArgument("operator is not of order 2".into()));
        }
        let p = RatFunc::new(self.d_coeff(1), lead.clone())?;
        let q = RatFunc::new(self.d_coeff(0), lead)?;
        Ok(ScalarODE2 { p, q, component: 0 })
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| {
                let zs = match i {
                    0 => String::new(),
                    1 => "z".into(),
                    _ => format!("z^{i}"),
                };
                let ds = match j {
                    0 => String::new(),
                    1 => "d".into(),
                    _ => format!("d^{j}"),
                };
                format!("({}){zs}{ds}", fmt_rat(c))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// From the defining equations on Gr(2,4) with exponents
/// `(alpha_0, ..., alpha_3)`, eliminate to a single operator in `z`:
/// `-d (alpha_1 + alpha_2 + 1 + z d) - (alpha_1 + 1 + z d)(alpha_3 - z d)`.
/// Returns the normalized equation, the operator itself, and
/// `(a, b, c) = (alpha_1 + 1, -alpha_3, alpha_1 + alpha_2 + 2)`.
pub fn weyl_reduce(alphas: &[Rat; 4]) -> Result<(ScalarODE2, WeylElement, (Rat, Rat, Rat))> {
    let s: Rat = alphas.iter().sum();
    if s != int(-2) {
        return Err(Error::ExponentSumViolation(fmt_rat(&s)));
    }
    let [_, a1, a2, a3] = alphas;
    let zd = WeylElement::z().mul(&WeylElement::d());
    let first = WeylElement::d().mul(&WeylElement::constant(a1 + a2 + int(1)).add(&zd));
    let second = WeylElement::constant(a1 + int(1)).add(&zd).mul(&WeylElement::constant(a3.clone()).sub(&zd));
    let op = first.neg().sub(&second);
    let ode = op.to_scalar_ode()?;
    Ok((ode, op, (a1 + int(1), -a3, a1 + a2 + int(2))))
}
