//! Lie algebras given by structure constants and their finite-dimensional
//! representations.

mod algebra;
mod module;
mod schema;
mod weights;

pub use algebra::{sl2, LieAlgebra, SL2_E_MINUS, SL2_E_PLUS, SL2_H};
pub use module::{
    adjoint_module, direct_sum_modules, invariants, sl2_module, sl_n, tensor_module,
    tensor_modules, trivial_module, Representation,
};
pub use schema::{AlgebraSchema, ModuleSchema};
pub use weights::{weight_decomposition, WeightBlock};

pub use algebra::direct_sum_algebras;

use thiserror::Error;

use crate::arith::{ArithError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("index out of range: {index} (dimension {dim})")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket of basis element {0} with itself must vanish")]
    SelfBracket(usize),
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k}); residual {residual:?}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: Vec<Rational>,
    },
    #[error("action is not a representation on basis pair ({i}, {j})")]
    HomomorphismViolation { i: usize, j: usize },
    #[error("modules are defined over different algebras")]
    AlgebraMismatch,
    #[error("action matrix {index} has shape {rows}x{cols}, expected {dim}x{dim}")]
    ActionShape {
        index: usize,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("expected {expected} action matrices, got {got}")]
    ActionCount { expected: usize, got: usize },
    #[error("weight labels: expected {expected}, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("{what} of the designated element is not diagonal")]
    NotDiagonal { what: &'static str },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("direct sum of zero algebras or modules")]
    EmptySum,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Whether constructors run the exhaustive Jacobi / homomorphism checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Validation {
    #[default]
    Full,
    Skip,
}
