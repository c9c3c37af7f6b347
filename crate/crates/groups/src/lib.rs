//! Finite groups, finite abelian groups with their duals, and actions of
//! one on the other.
//!
//! Elements are dense indices `0..n`. Symbolic names only appear in the CLI.

mod abelian;
mod action;
mod finite;

pub use abelian::{AbelianGroup, DualCharacter};
pub use action::{validate_action, ActionError, GroupAction};
pub use finite::{build_group, ConjugacyClass, FiniteGroup, GroupError, GroupSpec};
