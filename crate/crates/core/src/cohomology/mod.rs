//! Cochains of subgroups of `⟨s, t, w⟩ ≅ (Z/3)³` with coefficients in integer
//! lattices, `μ₃` and multiplicative groups of functions.

mod cochain;
mod connecting;
mod group;
mod linear;
mod module;

pub use cochain::{arguments, cochain_table_json, differential, first_difference, is_cocycle, Cochain};
pub use connecting::{carry, connecting_cocycle, cyclic_exponent, symbol_cocycle};
pub use group::FiniteGroup;
pub use linear::{
    bar_cohomology, coboundary_witness, differential_matrix, differential_rows, mod3, tate_h_minus1, TateResult,
    BAR_ROW_LIMIT,
};
pub use module::{ExponentLattice, GLattice, GModule, LinearModule, Mu3, Multiplicative};

use thiserror::Error;

use crate::exact::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("input cochain is not a cocycle")]
    NotACocycle,
    #[error("invalid short exact sequence data: {0}")]
    InvalidExtension(String),
    #[error("value outside the module: {0}")]
    OutsideModule(String),
    #[error("bar cohomology only implemented up to degree 2, got {0}")]
    DegreeTooLarge(usize),
    #[error("size guard exceeded: {rows} rows > limit {limit}")]
    SizeGuard { rows: usize, limit: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("internal error: {0}")]
    Internal(String),
}
