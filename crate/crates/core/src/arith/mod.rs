//! Exact scalars and univariate polynomials over the rationals.
//!
//! Every scalar in the engine is a [`Rational`]; the derivation parameter
//! `δ` appears as the indeterminate of [`Poly`].

mod factor;
mod poly;
mod rational;

pub use poly::{IntPoly, Poly};
pub use rational::{parse_rational, rat, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("the zero polynomial has every value as a root")]
    ZeroPolynomial,
    #[error("invalid rational literal {0:?}: expected p, -p or p/q")]
    BadRational(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}
