//! The 27 lines of `x³ + λy³ + μz³ + λμν t³ = 0`, the Picard lattice and
//! the Galois action on both.

mod automorphism;
mod divisor;
mod functions;
mod lines;
mod pic;
mod polynomial;

pub use automorphism::FieldAutomorphism;
pub use divisor::{
    action_on_divisors, add as divisor_add, apply_to_divisor, class_equivariance_defect, class_map, d0_basis,
    d0_combination, divisor_class, divisor_index, divisor_of_function, line_divisor, lines_in_plane,
    scale as divisor_scale, sub as divisor_sub, DivisorVector, DIVISOR_BASIS_NAMES,
};
pub use functions::{alpha_plane, basic_function, beta_plane, surface_relations, MonomialFunction, SurfaceRelation};
pub use lines::{build_lines, lines_intersect, plane_pair, LineFamily, LineLabel, LinearForm, PlanePair, VARIABLES};
pub use pic::{
    action_on_lines, action_on_pic, action_on_pic_from, apply_matrix, class_of_line, exceptional_lines,
    intersection, intersection_form, invariant_sublattice, lines_dump, pic_dictionary, IncidenceGraph, LineTable,
    LinesDump, PicVector, HYPERPLANE, PIC_BASIS_NAMES,
};
pub use polynomial::Polynomial;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("a line does not meet itself transversally; intersection undefined")]
    SelfIntersection,
    #[error("divisor outside 𝒟: unsupported atom {0}")]
    DivisorOutsideD(String),
    #[error("function is not homogeneous of degree 0 (degree {0})")]
    Inhomogeneous(i64),
    #[error("internal consistency error: {0}")]
    Inconsistent(String),
}
