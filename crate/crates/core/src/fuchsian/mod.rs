//! First-order Fuchsian systems `f' = sum_s A_s/(z - s) f`, their reduction
//! to a scalar second-order equation, the closed-form catalog for the six
//! Gauss-case bases, and the Weyl-algebra route from the defining equations.

mod catalog;
mod weyl;

pub use catalog::catalog_matrix;
pub use weyl::{weyl_reduce, WeylElement};

use crate::cohomology::{Connection, ResidueForm};
use crate::error::{Error, Result};
use crate::exactalg::{det, to_f64, Matrix, Poly, Rat, RatFunc};
use num_complex::Complex64;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuchsianSystem {
    pub size: usize,
    pub singular_points: Vec<Rat>,
    pub residues: Vec<Matrix<Rat>>,
    pub basis_labels: Vec<String>,
}

impl FuchsianSystem {
    pub fn from_residue_form(rf: &ResidueForm, labels: Vec<String>) -> Self {
        FuchsianSystem {
            size: labels.len(),
            singular_points: rf.points.clone(),
            residues: rf.residues.clone(),
            basis_labels: labels,
        }
    }

    pub fn from_connection(conn: &Connection) -> Result<Self> {
        let rf = conn
            .residues
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("connection matrix is not of Fuchsian residue form".into()))?;
        Ok(FuchsianSystem::from_residue_form(rf, conn.labels.clone()))
    }

    /// Residue at `s`; zero if `s` is not a singular point.
    pub fn residue_at(&self, s: &Rat) -> Matrix<Rat> {
        self.singular_points
            .iter()
            .position(|p| p == s)
            .map(|i| self.residues[i].clone())
            .unwrap_or_else(|| vec![vec![Rat::zero(); self.size]; self.size])
    }

    /// `A(z)` as exact rational functions.
    pub fn matrix(&self) -> Matrix<RatFunc> {
        let mut out = vec![vec![RatFunc::zero(); self.size]; self.size];
        for (s, a) in self.singular_points.iter().zip(&self.residues) {
            let inv = RatFunc::new(Poly::one(), Poly::linear_root(s)).expect("nonzero");
            for i in 0..self.size {
                for j in 0..self.size {
                    out[i][j] = &out[i][j] + &inv.scale(&a[i][j]);
                }
            }
        }
        out
    }

    pub fn eval(&self, z: Complex64) -> Matrix<Complex64> {
        let mut out = vec![vec![Complex64::zero(); self.size]; self.size];
        for (s, a) in self.singular_points.iter().zip(&self.residues) {
            let w = (z - to_f64(s)).inv();
            for i in 0..self.size {
                for j in 0..self.size {
                    out[i][j] += w * to_f64(&a[i][j]);
                }
            }
        }
        out
    }

    /// Sum over singular points of the residue traces.
    pub fn trace_sum(&self) -> Rat {
        self.residues.iter().map(|a| (0..self.size).map(|i| a[i][i].clone()).sum::<Rat>()).sum()
    }

    pub fn singular_points_f64(&self) -> Vec<Complex64> {
        self.singular_points.iter().map(|s| Complex64::new(to_f64(s), 0.0)).collect()
    }
}

/// `f'' + p f' + q f = 0`, satisfied by component `component` of a system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarODE2 {
    pub p: RatFunc,
    pub q: RatFunc,
    pub component: usize,
}

impl ScalarODE2 {
    /// Gauss' equation: `p = c/z + (a+b+1-c)/(z-1)`, `q = ab/(z(z-1))`.
    pub fn gauss(a: &Rat, b: &Rat, c: &Rat) -> Self {
        let z = RatFunc::z();
        let zm1 = &z - &RatFunc::one();
        let one = Rat::from_integer(1.into());
        let p = &RatFunc::constant(c.clone()) / &z + &RatFunc::constant(a + b + one - c) / &zm1;
        let q = &RatFunc::constant(a * b) / &(&z * &zm1);
        ScalarODE2 { p, q, component: 0 }
    }

    pub fn same_operator(&self, o: &ScalarODE2) -> bool {
        self.p == o.p && self.q == o.q
    }
}

/// Eliminate the other component of a 2x2 system. Uses the row of
/// `component`; if its coupling entry vanishes identically the other row is
/// used instead (the returned `component` says which).
pub fn to_scalar(sys: &FuchsianSystem, component: usize) -> Result<ScalarODE2> {
    if sys.size != 2 || component > 1 {
        return Err(Error::InvalidArgument("scalar elimination is implemented for 2x2 systems".into()));
    }
    let a = sys.matrix();
    let k = if !a[component][1 - component].is_zero() {
        component
    } else if !a[1 - component][component].is_zero() {
        1 - component
    } else {
        return Err(Error::NotCyclic);
    };
    let o = 1 - k;
    let (a11, a12, a21, a22) = (&a[k][k], &a[k][o], &a[o][k], &a[o][o]);
    // f2 = (f1' - a11 f1)/a12, substituted into the second row.
    let l = &a12.derivative() / a12;
    let p = -(a11 + a22) - &l;
    let q = &(a11 * a22) - &(a12 * a21) - a11.derivative() + a11 * &l;
    Ok(ScalarODE2 { p, q, component: k })
}

pub fn det_connection(sys: &FuchsianSystem) -> RatFunc {
    det(&sys.matrix())
}
