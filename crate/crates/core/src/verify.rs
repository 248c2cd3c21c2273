//! Per-m verification of the odd-power expansion: brute-force numeric
//! evaluation, exact symbolic expansion, and the index-shift symmetry.

use num::bigint::BigInt;
use num::traits::{One, Zero};
use serde::Serialize;

use crate::arith::{rat_int, rational_str, Rational};
use crate::poly::{convolution_sum_poly, PolynomialQ};
use crate::triangle::CoeffTriangle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyMode {
    Numeric,
    Symbolic,
    Symmetry,
}

impl std::fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerifyMode::Numeric => write!(f, "numeric"),
            VerifyMode::Symbolic => write!(f, "symbolic"),
            VerifyMode::Symmetry => write!(f, "symmetry"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub x: u64,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one verification run. `passed` implies `first_failure` is absent.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub m: u64,
    pub mode: VerifyMode,
    pub range: String,
    pub passed: bool,
    pub first_failure: Option<Failure>,
}

impl VerifyReport {
    fn pass(m: u64, mode: VerifyMode, range: String) -> Self {
        Self {
            m,
            mode,
            range,
            passed: true,
            first_failure: None,
        }
    }

    fn fail(m: u64, mode: VerifyMode, range: String, failure: Failure) -> Self {
        Self {
            m,
            mode,
            range,
            passed: false,
            first_failure: Some(failure),
        }
    }
}

/// Direct double-sum `sum_{k=1}^{x} sum_{r=0}^{m} A(m,r) k^r (x-k)^r`.
pub fn rhs_value(triangle: &mut CoeffTriangle, m: u64, x: u64) -> Rational {
    let row = triangle.row(m);
    let mut total = Rational::zero();
    for k in 1..=x {
        let base = BigInt::from(k) * BigInt::from(x - k);
        let mut pow = BigInt::one();
        for coeff in &row {
            total += coeff * rat_int(pow.clone());
            pow *= &base;
        }
    }
    total
}

/// Checks `rhs_value(m, x) = x^(2m+1)` exactly for every `x` in `[0, x_max]`.
pub fn verify_numeric(triangle: &mut CoeffTriangle, m: u64, x_max: u64) -> VerifyReport {
    let range = format!("x in [0, {x_max}]");
    for x in 0..=x_max {
        let expected = rat_int(BigInt::from(x).pow(2 * m as u32 + 1));
        let actual = rhs_value(triangle, m, x);
        if actual != expected {
            return VerifyReport::fail(
                m,
                VerifyMode::Numeric,
                range,
                Failure {
                    x,
                    expected: rational_str(&expected),
                    actual: rational_str(&actual),
                },
            );
        }
    }
    VerifyReport::pass(m, VerifyMode::Numeric, range)
}

/// Expands `sum_r A(m,r) * C_r(x)` and compares it, coefficient by
/// coefficient, with the monomial `x^(2m+1)`. Passing is a complete proof of
/// the identity at this `m`: two polynomials agreeing as coefficient
/// sequences agree on all of `Z`.
pub fn verify_symbolic(triangle: &mut CoeffTriangle, m: u64) -> VerifyReport {
    let expanded = expand_rhs(triangle, m);
    let target = PolynomialQ::monomial(Rational::one(), 2 * m as usize + 1);
    if expanded == target {
        VerifyReport::pass(m, VerifyMode::Symbolic, "polynomial".into())
    } else {
        // report the lowest power whose coefficients differ
        let bad = (0..=2 * m as usize + 1)
            .find(|&i| expanded.coeff(i) != target.coeff(i))
            .unwrap_or(0);
        VerifyReport::fail(
            m,
            VerifyMode::Symbolic,
            "polynomial".into(),
            Failure {
                x: bad as u64,
                expected: rational_str(&target.coeff(bad)),
                actual: rational_str(&expanded.coeff(bad)),
            },
        )
    }
}

/// The symbolic right-hand side `sum_r A(m,r) * C_r(x)` as a polynomial.
pub fn expand_rhs(triangle: &mut CoeffTriangle, m: u64) -> PolynomialQ {
    let row = triangle.row(m);
    let mut acc = PolynomialQ::zero();
    for (r, coeff) in row.iter().enumerate() {
        acc = acc.add(&convolution_sum_poly(r).scale(coeff));
    }
    acc
}

/// Checks the index-shift symmetry: summing `k = 1..=x` and `k = 0..=x-1`
/// gives the same value for every `x` in `[1, x_max]`, because the summand
/// `k^r (x-k)^r` vanishes at both `k = 0` and `k = x`.
pub fn verify_symmetry(triangle: &mut CoeffTriangle, m: u64, x_max: u64) -> VerifyReport {
    let range = format!("x in [1, {x_max}]");
    let row = triangle.row(m);
    let summand = |x: u64, k: u64| -> Rational {
        let base = rat_int(BigInt::from(k) * BigInt::from(x - k));
        let mut pow = Rational::one();
        let mut total = Rational::zero();
        for coeff in &row {
            total += coeff * &pow;
            pow *= &base;
        }
        total
    };
    for x in 1..=x_max {
        let upper: Rational = (1..=x).map(|k| summand(x, k)).sum();
        let lower: Rational = (0..x).map(|k| summand(x, k)).sum();
        if upper != lower {
            return VerifyReport::fail(
                m,
                VerifyMode::Symmetry,
                range,
                Failure {
                    x,
                    expected: rational_str(&upper),
                    actual: rational_str(&lower),
                },
            );
        }
    }
    VerifyReport::pass(m, VerifyMode::Symmetry, range)
}

/// Forward-difference columns `D^0..D^depth` of `x^p` on `[0, x_max]`.
/// Column `d` has `x_max + 1 - d` entries.
pub fn difference_table(p: u32, x_max: u64, depth: usize) -> Vec<Vec<BigInt>> {
    assert!(depth >= 1);
    let mut columns = Vec::with_capacity(depth + 1);
    let base: Vec<BigInt> = (0..=x_max).map(|x| BigInt::from(x).pow(p)).collect();
    columns.push(base);
    for _ in 0..depth {
        let prev = columns.last().unwrap();
        let next: Vec<BigInt> = prev.windows(2).map(|w| &w[1] - &w[0]).collect();
        columns.push(next);
    }
    columns
}
