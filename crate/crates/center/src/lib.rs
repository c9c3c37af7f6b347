//! The Drinfeld center of the 2-group algebra in the equivariantization
//! model, the Fourier 2-transform to class functors, algebras carried by
//! 2-characters and an independent full-center construction.

mod algebra;
mod lagrangian;
mod object;

use twochar_charfun::CharError;
use twochar_scalars::ScalarError;
use twochar_twogroup::Violation;

pub use algebra::{character_algebra, full_center_oracle, AlgebraStructure};
pub use lagrangian::{check_lagrangian, splitting_basis, LagrangianReport};
pub use object::{
    center_tensor, conjugation_splitting, phi_transform, psi_transform, unit_hom_dim, validate_center, CenterObject,
};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum CenterError {
    #[error("representation fails validation ({} violations)", .0.len())]
    InvalidRep(Vec<Violation>),
    #[error("center objects live over different 2-groups")]
    AmbientMismatch,
    #[error("malformed center data: {0}")]
    Shape(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
