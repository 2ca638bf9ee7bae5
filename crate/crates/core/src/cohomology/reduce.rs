use super::basis::BasisForm;
use super::forms::{OneForm, TRational};
use crate::arrangement::{dlog_phi, dz_log_phi, MasterFunction};
use crate::error::{Error, Result};
use crate::exactalg::{fmt_rat, inverse, rank_ratfunc, residue_decompose, Matrix, Rat, RatFunc};
use num_traits::Zero;

/// `nabla g = dg + g dlog Phi`, returned as the coefficient of `dt`.
pub fn nabla0(g: &TRational, m: &MasterFunction) -> OneForm {
    let arr = m.arrangement();
    arr.d_dt(g).add(&arr.mul(g, &dlog_phi(m)))
}

/// `nabla_z phi = d_z phi + (d_z log Phi) phi`, `t` held fixed.
pub fn nabla_z(phi: &OneForm, m: &MasterFunction) -> OneForm {
    let arr = m.arrangement();
    arr.d_param(phi).add(&arr.mul(&dz_log_phi(m), phi))
}

/// Strip every pole of order >= 2 and the polynomial part by subtracting
/// exact forms. Returns the simple-pole remainder and the accumulated `g`
/// with `eta = remainder + nabla g`.
pub fn reduce_to_simple(eta: &OneForm, m: &MasterFunction) -> Result<(OneForm, TRational)> {
    let arr = m.arrangement();
    let mut eta = eta.clone();
    let mut g = TRational::zero();
    // highest order first; nabla(l_j^{1-K}) only touches orders <= K at j
    while let Some((j, k)) =
        eta.poles().iter().map(|(&j, v)| (j, v.len())).filter(|&(_, k)| k >= 2).max_by_key(|&(_, k)| k)
    {
        let c = eta.pole_coeff(j, k);
        let local = m.exponent(j) - Rat::from_integer((k - 1).into());
        if local.is_zero() {
            return Err(Error::ResonantExponent(format!(
                "alpha_{j} = {} while lowering a pole of order {k}",
                fmt_rat(m.exponent(j))
            )));
        }
        let lead = arr.forms()[j].q.scale(&local);
        let h = TRational::pole(j, k - 1, &c / &lead);
        eta = eta.sub(&nabla0(&h, m));
        g = g.add(&h);
    }
    let s = m.finite_exponent_sum();
    while let Some(d) = eta.poly().len().checked_sub(1) {
        let c = eta.poly()[d].clone();
        let lead = &s + Rat::from_integer((d + 1).into());
        if lead.is_zero() {
            return Err(Error::ResonantExponent(format!(
                "exponent sum {} cancels degree {} at infinity",
                fmt_rat(&s),
                d + 1
            )));
        }
        let h = TRational::monomial(d + 1, c.scale(&lead.recip()));
        eta = eta.sub(&nabla0(&h, m));
        g = g.add(&h);
    }
    Ok((eta, g))
}

/// Coordinates of a one-form in a basis, with the witness `g` such that
/// `eta - sum coords_i basis_i = nabla g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomClass {
    pub labels: Vec<String>,
    pub coords: Vec<RatFunc>,
    pub witness: TRational,
}

/// A basis with its simple-pole data reduced once, ready for many reductions.
#[derive(Clone, Debug)]
pub struct PreparedBasis {
    forms: Vec<BasisForm>,
    witnesses: Vec<TRational>,
    /// Inverse of the matrix with columns `v_1..v_{n-1}, delta`.
    inv: Matrix<RatFunc>,
    len: usize,
}

impl PreparedBasis {
    pub fn new(basis: &[BasisForm], m: &MasterFunction) -> Result<Self> {
        let n = m.n();
        if basis.len() != n - 1 {
            return Err(Error::InvalidArgument(format!("basis has {} forms, expected n - 1 = {}", basis.len(), n - 1)));
        }
        let len = m.arrangement().len();
        let mut cols = Vec::with_capacity(n);
        let mut witnesses = Vec::with_capacity(n - 1);
        for b in basis {
            let (s, g) = reduce_to_simple(&b.form, m)?;
            cols.push(s.simple_residues(len));
            witnesses.push(g);
        }
        cols.push(dlog_phi(m).simple_residues(len));
        let rows: Matrix<RatFunc> = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        let inv = inverse(&rows).ok_or(Error::SingularBasis)?;
        Ok(PreparedBasis { forms: basis.to_vec(), witnesses, inv, len })
    }

    pub fn forms(&self) -> &[BasisForm] {
        &self.forms
    }

    pub fn reduce(&self, eta: &OneForm, m: &MasterFunction) -> Result<CohomClass> {
        let (s, g) = reduce_to_simple(eta, m)?;
        let r = s.simple_residues(self.len);
        let x: Vec<RatFunc> = self
            .inv
            .iter()
            .map(|row| row.iter().zip(&r).fold(RatFunc::zero(), |acc, (a, b)| acc + a * b))
            .collect();
        let (coords, lambda) = x.split_at(x.len() - 1);
        let mut witness = g.add(&TRational::constant(lambda[0].clone()));
        for (xi, gi) in coords.iter().zip(&self.witnesses) {
            witness = witness.sub(&gi.scale(xi));
        }
        Ok(CohomClass {
            labels: self.forms.iter().map(|b| b.label.clone()).collect(),
            coords: coords.to_vec(),
            witness,
        })
    }
}

pub fn reduce(eta: &OneForm, basis: &[BasisForm], m: &MasterFunction) -> Result<CohomClass> {
    PreparedBasis::new(basis, m)?.reduce(eta, m)
}

/// `A(z) = sum_s A_s / (z - s)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueForm {
    pub points: Vec<Rat>,
    pub residues: Vec<Matrix<Rat>>,
}

#[derive(Clone, Debug)]
pub struct Connection {
    pub labels: Vec<String>,
    /// Row `i` holds the coordinates of `nabla_z basis_i`.
    pub matrix: Matrix<RatFunc>,
    /// Present when every entry has only simple rational poles and no
    /// polynomial part.
    pub residues: Option<ResidueForm>,
}

/// Connection matrix of `nabla_z` in the given basis.
pub fn gauss_manin(basis: &[BasisForm], m: &MasterFunction) -> Result<Connection> {
    let pb = PreparedBasis::new(basis, m)?;
    let matrix = basis
        .iter()
        .map(|b| Ok(pb.reduce(&nabla_z(&b.form, m), m)?.coords))
        .collect::<Result<Matrix<RatFunc>>>()?;
    let residues = residue_form(&matrix);
    Ok(Connection { labels: pb.forms.iter().map(|b| b.label.clone()).collect(), matrix, residues })
}

/// Residue decomposition of a matrix of rational functions, if it has the
/// Fuchsian shape.
pub fn residue_form(matrix: &Matrix<RatFunc>) -> Option<ResidueForm> {
    let mut decomp = Vec::new();
    let mut points: Vec<Rat> = Vec::new();
    for row in matrix {
        let mut r = Vec::new();
        for e in row {
            let pf = residue_decompose(e).ok()?;
            if !pf.poly.is_zero() || pf.max_order() > 1 {
                return None;
            }
            for t in &pf.terms {
                if !points.contains(&t.pole) {
                    points.push(t.pole.clone());
                }
            }
            r.push(pf);
        }
        decomp.push(r);
    }
    points.sort();
    let residues = points
        .iter()
        .map(|s| decomp.iter().map(|row| row.iter().map(|pf| pf.residue_at(s)).collect()).collect())
        .collect();
    Some(ResidueForm { points, residues })
}

/// Rank of the span of the given forms in cohomology: reduce to simple-pole
/// residue vectors and quotient by the residue vector of `dlog Phi`.
pub fn cohomology_rank(forms: &[OneForm], m: &MasterFunction) -> Result<usize> {
    let len = m.arrangement().len();
    let delta = dlog_phi(m).simple_residues(len);
    let mut rows = vec![delta];
    for f in forms {
        rows.push(reduce_to_simple(f, m)?.0.simple_residues(len));
    }
    Ok(rank_ratfunc(&rows) - 1)
}
