//! Exact Gaussian-rational scalars and dense matrices.
//!
//! Nothing in this crate uses floating point; every comparison is an exact
//! equality of reduced fractions.

mod gaussian;
mod matrix;
mod rank;

pub use gaussian::GaussianRational;
pub use matrix::{ExactMatrix, PowerPartialIsometry, Predicates};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `num/den` as a [`Rational`]. Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
