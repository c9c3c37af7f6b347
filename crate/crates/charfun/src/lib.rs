//! 2-characters of monomial 2-representations as class functors, their
//! Day convolution, inner products, joint characters with their modular
//! transformations, and fusion rules.

mod character;
mod day;
mod fingerprint;
mod functor;
mod inner;
mod joint;

use twochar_scalars::ScalarError;
use twochar_twogroup::Violation;
use twochar_twrep::RepError;

pub use character::{dimensions, two_character, unit_functor};
pub use day::{braiding, day_convolution, DayProduct, Summand};
pub use fingerprint::{decompose, decompose_bounded, fingerprint, fusion_table, FusionTable};
pub use functor::{validate_class_functor, ClassFunctor, Pi2Rep};
pub use inner::{inner_product, invariants_at_unit, InnerProduct};
pub use joint::{
    all_joint_inputs, canonical_joint_inputs, conjugate_joint, joint_character, joint_character_of, left_dual,
    modular_s, modular_t, JointInput,
};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("representation fails validation ({} violations)", .0.len())]
    InvalidRep(Vec<Violation>),
    #[error("class functors live over different 2-groups")]
    AmbientMismatch,
    #[error("malformed class functor: {0}")]
    Shape(String),
    #[error("{g} and {h} do not commute")]
    NotCommuting { g: usize, h: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("basis fingerprints are linearly dependent{}", if *extended { "" } else { "; retry with extended fingerprints" })]
    DegenerateBasis { extended: bool },
    #[error("{0} nonnegative integer decompositions fit the fingerprints")]
    Ambiguous(usize),
    #[error("not in the nonnegative integer span of the basis: {0}")]
    NotInSpan(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
