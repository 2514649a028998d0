//! Exact color Lie algebra computations over a cyclotomic field.

pub mod algebra;
pub mod casimir;
pub mod catalog;
pub mod error;
pub mod gmatrix;
pub mod grading;
pub mod linalg;
pub mod loopext;
pub mod scalar;
pub mod specfile;
pub mod verdict;

pub use algebra::{
    bracket_generator_quadratic, check_antisymmetry, check_jacobi, check_support, graded_center, quad_to_matrix,
    BasisElement, ColorAlgebra, QuadElement,
};
pub use casimir::{
    bilinear_form, build_casimir, check_form_properties, forms_of_degree, invert_form, solve_commutants,
    verify_centrality, Commutant, GradedForm, InverseForm,
};
pub use error::*;
pub use gmatrix::{ctr_permutation_check, j_membership, GradedMatrix, GradedSpace, JForm, JSymmetry, PartMembership};
pub use grading::{validate_factor, Bicharacter, GradingContext, Group, GroupElement};
pub use loopext::{check_loop_antisymmetry, loop_bracket, verify_loop_jacobi, ExtensionData, LoopElement};
pub use scalar::{parse_scalar, CycScalar, DEFAULT_CONDUCTOR};
pub use specfile::{AlgebraSpec, ParsedSpec};
pub use catalog::CatalogEntry;
pub use linalg::Mat;
pub use verdict::{LawCheck, LawTally, Verdict};
