//! Exact arithmetic over the rationals: big rationals, univariate polynomials,
//! rational functions with power-series expansion, and exact linear algebra.
//!
//! Everything downstream (character theory, dimension tables, generating
//! series, Fourier–Jacobi expansions) is built on these types.  No floating
//! point is used anywhere in this crate.

mod linalg;
mod poly;
mod ratfun;

#[cfg(test)]
mod tests;

pub use linalg::{det_rational, rank, solve_linear, solve_linear_rational};
pub use poly::Polynomial;
pub use ratfun::{rf, RationalFunction, SeriesCoeffs};

use num_bigint::BigInt;

/// Arbitrary-precision rational number.  Always stored in lowest terms with a
/// positive denominator (maintained by `num_rational`).
pub type Rational = num_rational::BigRational;

/// The rational number `n/1`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The rational number `n/d`.  Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Errors raised by exact-arithmetic operations.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ExactMathError {
    /// A rational function whose denominator vanishes at 0 has no power-series
    /// expansion around 0.
    #[error("denominator has zero constant term")]
    ZeroConstantDenominator,
    /// Division of polynomials or rational functions by zero.
    #[error("division by zero")]
    DivisionByZero,
    /// A linear system whose coefficient matrix is singular.
    #[error("singular coefficient matrix")]
    SingularMatrix,
    /// Mismatched dimensions in a linear-algebra operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}
