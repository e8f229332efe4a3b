//! The δ-derivation linear system, its exact solution at fixed `δ`, and the
//! scan for exceptional `δ`.
//!
//! Unknowns are the coordinates of `D(e_a)` in the module basis, column
//! `a·dim(V) + m`. Each basis pair `i < j` (lexicographic) contributes
//! `dim(V)` equations
//!
//! ```text
//! Σ_k c_ij^k D(e_k) + δ e_j•D(e_i) − δ e_i•D(e_j) = 0,
//! ```
//!
//! row `pair_index·dim(V) + m`. The constant part is `A`, the coefficient of
//! `δ` is `B`.

mod pencil;
mod scan;
mod space;
mod system;

pub use pencil::{pencil_blocks, PencilBlock, PencilElimination};
pub use scan::{scan, ScanOptions, ScanReport};
pub use space::{
    inner_derivations, is_delta_derivation, kernel_at, solve, DerivationSpace, Verdict,
};
pub use system::{assemble_system, DerivationSystem};

use thiserror::Error;

use crate::lie::LieError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("module is not a representation of the given algebra")]
    AlgebraMismatch,
    #[error("map has shape {got:?}, expected {expected:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error(
        "internal error: kernel vector {index} fails the derivation identity at pair {pair:?}"
    )]
    VerificationFailure { index: usize, pair: (usize, usize) },
    #[error(transparent)]
    Lie(#[from] LieError),
}
