//! Exact computer algebra for compatible Hom-Lie triple systems.
//!
//! A Hom-Lie triple system is a vector space with a trilinear bracket and a
//! twisting endomorphism; a *compatible* pair is two such brackets on one
//! twisted space whose every linear combination is again a Hom-Lie triple
//! system. This crate represents finite-dimensional instances by exact
//! rational structure constants and mechanizes the associated theory:
//!
//! * exhaustive, witness-producing verifiers for every axiom
//!   ([`verify`]);
//! * constructions: semidirect products, adjoint representations, brackets
//!   induced from Hom-Lie algebras, Nijenhuis deformations ([`construct`]);
//! * the graded bracket on cochains with Maurer-Cartan characterizations
//!   ([`graded`]);
//! * cochain spaces, coboundary matrices and cohomology over the rationals
//!   ([`cochain`], [`coboundary`]);
//! * linear deformation theory, with a double oracle in which polynomial
//!   identities in the deformation parameter are expanded exactly
//!   ([`deform`]);
//! * abelian extensions and their classification by second cohomology, with
//!   explicit equivalence witnesses ([`extend`]).
//!
//! Everything is exact: scalars are arbitrary-precision rationals and every
//! identity check is an equality test, never a tolerance comparison.

pub mod algebra;
pub mod coboundary;
pub mod cochain;
pub mod construct;
pub mod deform;
mod error;
pub mod extend;
pub mod fixtures;
pub mod graded;
pub mod matrix;
pub mod multilinear;
pub mod rational;
pub mod report;
pub mod representation;
pub mod unshuffle;
pub mod verify;

pub mod book;

pub use algebra::{CompatibleHomLts, HomLts, HomSpace, Side, TriBracket};
pub use error::{Error, Result};
pub use matrix::{kernel_basis, rank, solve, Matrix};
pub use multilinear::MultiLinearMap;
pub use rational::{parse_rat, rat, rat_int, Rat};
pub use report::{AxiomCheck, AxiomReport, Witness, DEFAULT_WITNESS_LIMIT};
pub use representation::{
    adjoint_of, adjoint_representation, CompatibleRepresentation, Representation, ThetaGrid,
};
pub use unshuffle::{unshuffles, SignedPermutation};
