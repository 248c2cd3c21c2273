//! Exact scalar arithmetic: normalized rationals, binomial coefficients and
//! Bernoulli numbers under the `B_1 = +1/2` convention.

use std::sync::{Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always fully reduced with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    ZeroDenominator,
}

impl std::fmt::Display for ArithError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ArithError::ZeroDenominator => write!(f, "zero denominator"),
        }
    }
}

impl std::error::Error for ArithError {}

/// Builds the reduced, sign-normalized fraction `num/den`.
pub fn make_rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational, ArithError> {
    let den = den.into();
    if den.is_zero() {
        return Err(ArithError::ZeroDenominator);
    }
    Ok(BigRational::new(num.into(), den))
}

/// Rational from an integer.
pub fn rat_int(n: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(n.into())
}

/// Rational from a reduced pair; panics on zero denominator. Internal shorthand
/// for literals whose denominators are statically nonzero.
pub fn rat(num: i64, den: i64) -> Rational {
    make_rational(num, den).expect("nonzero denominator")
}

/// `C(n, k)` as an exact integer; `0` when `k < 0` or `k > n`.
///
/// Running product with interleaved division: the partial product after step
/// `i` is `C(n-k+i, i)`, an integer, so every division is exact.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Grow-only table of Bernoulli numbers `B_0..=high_water` with `B_1 = +1/2`.
///
/// Entries are computed bottom-up from the defining recurrence
/// `sum_{j=0}^{n} C(n+1, j) B_j = n + 1`, which holds exactly in this
/// convention. Extending the table never changes existing entries.
#[derive(Debug, Clone)]
pub struct BernoulliCache {
    values: Vec<Rational>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self {
            values: vec![Rational::one()],
        }
    }

    pub fn high_water(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&mut self, n: usize) -> Rational {
        self.extend_to(n);
        self.values[n].clone()
    }

    fn extend_to(&mut self, n: usize) {
        while self.values.len() <= n {
            let i = self.values.len();
            // B_i = ((i+1) - sum_{j<i} C(i+1, j) B_j) / (i+1)
            let mut sum = Rational::zero();
            for (j, b) in self.values.iter().enumerate() {
                sum += Rational::from_integer(binomial(i as u64 + 1, j as i64)) * b;
            }
            let next = (rat_int(i as u64 + 1) - sum) / rat_int(i as u64 + 1);
            self.values.push(next);
        }
    }
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

fn shared_cache() -> &'static Mutex<BernoulliCache> {
    static CACHE: OnceLock<Mutex<BernoulliCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BernoulliCache::new()))
}

/// `B_n` under the `B_1 = +1/2` convention, backed by a process-wide cache.
pub fn bernoulli(n: usize) -> Rational {
    shared_cache().lock().unwrap().get(n)
}

/// Renders a rational as `num/den`, omitting the denominator when it is 1.
pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

/// True if the value is an integer.
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Sign-agnostic check used by text rendering.
pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
