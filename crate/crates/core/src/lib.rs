//! Biordered sets of finite semigroups, Graham-Houghton and Nambooripad
//! 2-complexes, and the fundamental groups that describe maximal subgroups
//! of free idempotent generated semigroups.
//!
//! The pipeline: generate a [`FiniteSemigroup`] of partial maps, compute its
//! [`GreenData`], extract the [`Biorder`] of idempotents, find singular
//! E-squares, build [`complex::gh_complex`] or
//! [`complex::nambooripad_complex`], and read off a [`GroupPresentation`] of
//! a component together with its abelianization.

pub mod biorder;
pub mod complex;
pub mod error;
pub mod green;
pub mod partial_map;
pub mod presentation;
pub mod rees;
pub mod semigroup;
pub mod snf;
pub mod torus;
mod util;

pub use biorder::{Biorder, EChain, ESquare, SingularizationWitness, SquareMode};
pub use complex::TwoComplex;
pub use error::{Error, Result};
pub use green::GreenData;
pub use partial_map::PartialMap;
pub use presentation::GroupPresentation;
pub use rees::IncidenceSystem;
pub use semigroup::FiniteSemigroup;
pub use snf::AbelianInvariants;


