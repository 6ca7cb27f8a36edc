//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("structure constants violate antisymmetry at ({i},{j},{k},{l}): {lhs} vs -({rhs})")]
    NotAntisymmetric {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        lhs: String,
        rhs: String,
    },

    #[error("duplicate structure-constant entry at ({0:?})")]
    DuplicateEntry(Vec<usize>),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("cochain degree {requested} exceeds the configured cap {cap}")]
    DegreeCapExceeded { requested: usize, cap: usize },

    #[error("operator does not commute with the twist map")]
    TwistCommutation,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("tensor is not a member of the constrained cochain space: {0}")]
    NotACochain(String),

    #[error("the given pair is not a cocycle")]
    NotACocycle,

    #[error("invalid section: p ∘ σ is not the identity")]
    InvalidSection,

    #[error("{0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
