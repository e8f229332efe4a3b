//! Exact computation of δ-derivations of Lie algebras with values in
//! modules.
//!
//! A δ-derivation of `L` with values in an `L`-module `V` is a linear map
//! `D: L → V` with
//!
//! ```text
//! D([x, y]) = −δ y•D(x) + δ x•D(y)      for all x, y ∈ L.
//! ```
//!
//! For fixed `δ` this is a homogeneous linear system in the entries of `D`;
//! as `δ` varies it is a matrix pencil `A + δB`. The crate computes exact
//! kernel bases at rational `δ` ([`solve`]), finds every rational `δ` where
//! the pencil drops rank ([`scan`]), and checks the results against the
//! closed-form sl(2) families and semisimple dimension counts in
//! [`catalog`].
//!
//! All arithmetic is over `Q`; there is no floating point anywhere.

// index loops read better than iterator chains in the elimination code
#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod catalog;
pub mod lie;
pub mod linalg;
pub mod solver;

pub use arith::{parse_rational, rat, ArithError, Poly, Rational};
pub use lie::{
    adjoint_module, direct_sum_algebras, direct_sum_modules, invariants, sl2, sl2_module, sl_n,
    tensor_module, tensor_modules, trivial_module, weight_decomposition, LieAlgebra, LieError,
    Representation, Validation, WeightBlock,
};
pub use linalg::Matrix;
pub use solver::{
    assemble_system, inner_derivations, is_delta_derivation, kernel_at, scan, solve,
    DerivationSpace, DerivationSystem, ScanOptions, ScanReport, SolveError, Verdict,
};
