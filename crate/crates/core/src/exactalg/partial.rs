//! Partial fractions over Q. Poles are found with the rational root theorem,
//! which suffices because every denominator met in practice factors into
//! linear terms; anything left over is reported, never approximated.

use super::{fmt_rat, Poly, Rat, RatFunc};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleTerm {
    pub pole: Rat,
    pub order: usize,
    pub coeff: Rat,
}

/// `poly + sum coeff / (z - pole)^order`
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PartialFractions {
    pub poly: Poly,
    pub terms: Vec<PoleTerm>,
}

impl PartialFractions {
    pub fn recombine(&self) -> RatFunc {
        let mut acc = RatFunc::from_poly(self.poly.clone());
        for t in &self.terms {
            let den = Poly::linear_root(&t.pole).pow(t.order as u32);
            acc = acc + RatFunc::new(Poly::constant(t.coeff.clone()), den).expect("nonzero");
        }
        acc
    }

    pub fn max_order(&self) -> usize {
        self.terms.iter().map(|t| t.order).max().unwrap_or(0)
    }

    /// Coefficient of `1/(z - pole)`; zero if absent.
    pub fn residue_at(&self, pole: &Rat) -> Rat {
        self.terms
            .iter()
            .find(|t| &t.pole == pole && t.order == 1)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(Rat::zero)
    }
}

pub fn residue_decompose(f: &RatFunc) -> Result<PartialFractions> {
    let roots = rational_roots(f.den());
    let found: usize = roots.iter().map(|(_, m)| m).sum();
    if Some(found) != f.den().degree() {
        let mut rest = f.den().clone();
        for (r, m) in &roots {
            rest = rest.divrem(&Poly::linear_root(r).pow(*m as u32))?.0;
        }
        return Err(Error::NonlinearDenominator(rest.to_string()));
    }
    decompose(f, &roots)
}

/// Decomposition with caller-supplied candidate poles; every root of the
/// denominator must be among them.
pub fn residue_decompose_at(f: &RatFunc, poles: &[Rat]) -> Result<PartialFractions> {
    let mut rest = f.den().clone();
    let mut roots = Vec::new();
    for r in poles {
        let lin = Poly::linear_root(r);
        let mut m = 0;
        loop {
            let (q, rem) = rest.divrem(&lin)?;
            if !rem.is_zero() {
                break;
            }
            rest = q;
            m += 1;
        }
        if m > 0 {
            roots.push((r.clone(), m));
        }
    }
    if rest.degree() != Some(0) {
        return Err(Error::NonlinearDenominator(rest.to_string()));
    }
    decompose(f, &roots)
}

fn decompose(f: &RatFunc, roots: &[(Rat, usize)]) -> Result<PartialFractions> {
    let (q, _) = f.num().divrem(f.den())?;
    let mut terms = Vec::new();
    for (r, m) in roots {
        // den = (z - r)^m * e; expand num/e about r to m terms.
        let (e, _) = f.den().divrem(&Poly::linear_root(r).pow(*m as u32))?;
        let ns = f.num().taylor_shift(r);
        let es = e.taylor_shift(r);
        let g = series_div(ns.coeffs(), es.coeffs(), *m);
        for (i, gi) in g.into_iter().enumerate() {
            if !gi.is_zero() {
                terms.push(PoleTerm { pole: r.clone(), order: m - i, coeff: gi });
            }
        }
    }
    terms.sort_by(|a, b| a.pole.cmp(&b.pole).then(a.order.cmp(&b.order)));
    Ok(PartialFractions { poly: q, terms })
}

/// First `n` coefficients of the power series `a / b`, with `b[0] != 0`.
fn series_div(a: &[Rat], b: &[Rat], n: usize) -> Vec<Rat> {
    let get = |v: &[Rat], i: usize| v.get(i).cloned().unwrap_or_else(Rat::zero);
    let b0 = b[0].recip();
    let mut out: Vec<Rat> = Vec::with_capacity(n);
    for k in 0..n {
        let mut s = get(a, k);
        for (j, oj) in out.iter().enumerate() {
            s -= oj * get(b, k - j);
        }
        out.push(s * &b0);
    }
    out
}

/// All rational roots with multiplicity, sorted ascending.
pub fn rational_roots(p: &Poly) -> Vec<(Rat, usize)> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    if rest.degree().unwrap_or(0) == 0 {
        return out;
    }
    let zero_mult = rest.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        out.push((Rat::zero(), zero_mult));
        rest = Poly::new(rest.coeffs()[zero_mult..].to_vec());
    }
    if rest.degree().unwrap_or(0) > 0 {
        let ints = integer_coeffs(&rest);
        let lead = ints.last().unwrap().abs();
        let tail = ints[0].abs();
        let mut cands = Vec::new();
        for num in divisors(&tail) {
            for den in divisors(&lead) {
                if num.gcd(&den).is_one() {
                    let r = Rat::new(num.clone(), den.clone());
                    cands.push(-&r);
                    cands.push(r);
                }
            }
        }
        for r in cands {
            let lin = Poly::linear_root(&r);
            let mut m = 0;
            while rest.degree().unwrap_or(0) > 0 && rest.eval(&r).is_zero() {
                rest = rest.divrem(&lin).expect("nonzero").0;
                m += 1;
            }
            if m > 0 {
                out.push((r, m));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn integer_coeffs(p: &Poly) -> Vec<BigInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs().iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect()
}

/// Positive divisors via trial division. A cofactor left after trial division
/// up to 10^6 is treated as prime; roots hiding behind such cofactors then
/// surface as a `NonlinearDenominator` report rather than a wrong answer.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &d * &d <= n && d <= limit {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for dv in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(dv * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

impl std::fmt::Display for PartialFractions {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if !self.poly.is_zero() {
            parts.push(self.poly.to_string());
        }
        for t in &self.terms {
            let base = if t.pole.is_zero() { "z".to_string() } else { format!("(z - {})", fmt_rat(&t.pole)) };
            let pw = if t.order == 1 { String::new() } else { format!("^{}", t.order) };
            parts.push(format!("{}/{base}{pw}", fmt_rat(&t.coeff)));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        f.write_str(&parts.join(" + "))
    }
}
