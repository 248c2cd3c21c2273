//! Exact computation of the coefficient triangle `A(m, r)` that expands odd
//! powers over convolution sums:
//!
//! ```text
//! x^(2m+1) = sum_{k=1}^{x} sum_{r=0}^{m} A(m,r) * k^r * (x-k)^r
//! ```
//!
//! The triangle is computed by a Bernoulli-number recursion and, as an
//! independent oracle, by an exact linear solve against the symbolic
//! Faulhaber expansion of the right-hand side. Every identity is verifiable
//! symbolically (coefficient equality of polynomials) and numerically
//! (brute-force enumeration), all in arbitrary-precision rational arithmetic.

pub mod arith;
pub mod export;
pub mod poly;
pub mod selftest;
pub mod triangle;
pub mod verify;

pub use arith::{bernoulli, binomial, make_rational, BernoulliCache, Rational};
pub use poly::{convolution_sum_poly, power_sum_poly, PolynomialQ};
pub use triangle::{coeff_row_by_solve, leading_coeff, CoeffTriangle, SolveError};
pub use verify::{
    difference_table, rhs_value, verify_numeric, verify_symbolic, verify_symmetry, VerifyMode,
    VerifyReport,
};
