//! Twisted de Rham cohomology on the punctured line: the covariant derivative
//! `nabla = d + dlog Phi`, reduction of one-forms to a basis modulo exact
//! forms, and the Gauss-Manin connection in the parameter `z`.

mod basis;
mod forms;
mod reduce;

pub use basis::{default_basis, gauss_basis, gauss_form, shift_exponents, BasisForm, GaussForm, PairTag, ShiftRecord};
pub use forms::{NumericTFunc, OneForm, TRational};
pub use reduce::{
    cohomology_rank, gauss_manin, nabla0, nabla_z, reduce, reduce_to_simple, CohomClass, Connection, PreparedBasis,
    ResidueForm,
};
