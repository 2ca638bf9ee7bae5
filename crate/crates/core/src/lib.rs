//! Exact derivation of Gauss-Manin connections for hypergeometric integrals
//! by twisted-cohomology reduction, with numeric cross-checks.

pub mod arrangement;
pub mod cohomology;
pub mod error;
pub mod exactalg;
pub mod fuchsian;
pub mod numerics;
pub mod par;
pub mod verify;

pub use error::{Error, Result};
