//! Closed-form predictions for semisimple algebras, and the machinery to hold
//! the solver to them.
//!
//! * [`expected_sl2_basis`]: explicit bases of `Der_δ(sl2, V(n))` for the
//!   exceptional values of `δ`, generated for any `n`.
//! * [`theorem_dimension`] / [`expected_basis`]: the same assembled over a
//!   direct sum of simple algebras and a module given summand by summand.
//! * [`verify_all`]: runs everything against [`crate::solve`] and
//!   [`crate::scan`] and collects a pass/fail report.

mod semisimple;
mod sl2;
mod verify;

pub use semisimple::{
    expected_basis, realize, theorem_dimension, IrrepKind, ModulePart, SimpleType,
};
pub use sl2::{expected_sl2_basis, CaseTag, ExpectedFamily, ExpectedMap};
pub use verify::{span_equal, verify_all, CheckOutcome, CheckResult, VerifyReport};

use thiserror::Error;

use crate::lie::LieError;
use crate::solver::SolveError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("case {case} is not defined for n = {n}: {reason}")]
    OutOfRange {
        case: CaseTag,
        n: i64,
        reason: &'static str,
    },
    #[error("unsupported descriptor: {0}")]
    Unsupported(String),
    #[error("maps have different shapes: {expected:?} vs {got:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}
