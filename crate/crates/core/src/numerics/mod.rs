//! Floating-point layer: special functions, double-exponential quadrature,
//! twisted-cycle integrals, Kummer's local solutions, ODE transport along
//! complex paths, and the covariance checks of the projective integral.

mod covariance;
mod cycles;
mod hyp;
mod kummer;
mod ode;
mod quad;
mod special;

pub use covariance::{covariance_check, master_derivative, master_value, projective_integral, Comparison, CovarianceReport};
pub use cycles::{euler_cycle_integral, euler_cycle_integral_on, form_integral_01, CycleId, Side};
pub use hyp::{hyp2f1, hyp2f1_derivative};
pub use kummer::{kummer_local, relation_check, relation_check_with, KummerVariant, Relation, RelationResult};
pub use ode::{ode_solve_path, transport, OdeTol, PathPlan};
pub use quad::{tanh_sinh, QuadResult, QuadSpec};
pub use special::{beta, gamma, hyp2f1_series, hyp2f1_series_with, ln_gamma, pochhammer, SeriesValue, SERIES_MARGIN};

use num_complex::Complex64;

pub(crate) fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `|a - b| / |b|`, falling back to the absolute error when `b` is zero.
pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    let d = (a - b).norm();
    if b.norm() == 0.0 {
        d
    } else {
        d / b.norm()
    }
}
