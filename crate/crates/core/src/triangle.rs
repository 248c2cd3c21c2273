//! The coefficient triangle `A(m, r)` of the odd-power expansion
//! `x^(2m+1) = sum_{k=1}^{x} sum_{r=0}^{m} A(m,r) k^r (x-k)^r`,
//! computed two independent ways: by the Bernoulli recursion and by an exact
//! linear solve against the symbolic expansion.

use std::collections::HashMap;

use num::traits::{One, Zero};

use crate::arith::{bernoulli, binomial, rat_int, Rational};
use crate::poly::{convolution_sum_poly, PolynomialQ};

/// Memoized table of `A(m, r)` values.
///
/// Mutation is population-only: once an entry is stored it never changes.
#[derive(Debug, Default)]
pub struct CoeffTriangle {
    entries: HashMap<(u64, u64), Rational>,
}

impl CoeffTriangle {
    pub fn new() -> Self {
        Self::default()
    }

    /// `A(m, r)` by the recursion:
    /// diagonal `(2m+1)*C(2m,m)` when `r = m`; for `0 <= r < m`,
    /// `(2r+1)*C(2r,r) * sum_{d=2r+1}^{m} A(m,d) C(d,2r+1) (-1)^(d-1)/(d-r) B_(2d-2r)`;
    /// zero outside `0..=m`. An empty sum yields zero.
    pub fn coeff(&mut self, m: u64, r: i64) -> Rational {
        if r < 0 || r as u64 > m {
            return Rational::zero();
        }
        let r = r as u64;
        if let Some(v) = self.entries.get(&(m, r)) {
            return v.clone();
        }
        let value = if r == m {
            diagonal(m)
        } else {
            let mut sum = Rational::zero();
            for d in (2 * r + 1)..=m {
                let a_md = self.coeff(m, d as i64);
                let mut term = a_md * rat_int(binomial(d, 2 * r as i64 + 1));
                if d % 2 == 0 {
                    term = -term;
                }
                term = term / rat_int(d - r) * bernoulli((2 * d - 2 * r) as usize);
                sum += term;
            }
            rat_int(2 * r + 1) * rat_int(binomial(2 * r, r as i64)) * sum
        };
        self.entries.insert((m, r), value.clone());
        value
    }

    /// `[A(m,0), ..., A(m,m)]`
    pub fn row(&mut self, m: u64) -> Vec<Rational> {
        // Eq. well-founded order is descending r; recursion handles it, but
        // populate top-down so the memo fills in one pass.
        for r in (0..=m).rev() {
            self.coeff(m, r as i64);
        }
        (0..=m).map(|r| self.coeff(m, r as i64)).collect()
    }

    /// Overwrites a memo entry. Fault-injection hook for tests; never called
    /// by library or CLI code paths.
    #[doc(hidden)]
    pub fn inject_entry(&mut self, m: u64, r: u64, value: Rational) {
        self.entries.insert((m, r), value);
    }
}

/// Diagonal law `A(m, m) = (2m+1) * C(2m, m)`.
pub fn leading_coeff(m: u64) -> Rational {
    diagonal(m)
}

fn diagonal(m: u64) -> Rational {
    rat_int(2 * m + 1) * rat_int(binomial(2 * m, m as i64))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    /// The overdetermined system has no exact solution at this `m`: either an
    /// implementation bug or a falsified conjecture.
    Inconsistent { m: u64, power: usize },
    /// The square subsystem lost rank; always an internal error.
    Singular { m: u64 },
}

impl std::fmt::Display for SolveError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SolveError::Inconsistent { m, power } => {
                write!(f, "identity unsatisfiable at m={m} (residual at x^{power})")
            }
            SolveError::Singular { m } => write!(f, "singular subsystem at m={m}"),
        }
    }
}

impl std::error::Error for SolveError {}

/// Independent route: builds `sum_r A_r * C_r(x) = x^(2m+1)` as an exact
/// linear system over the coefficients of `x^1..x^(2m+1)` and solves it by
/// Gaussian elimination over the rationals. The system is overdetermined;
/// every non-pivot equation must have an exactly zero residual, which is a
/// per-m verification of the expansion identity.
pub fn coeff_row_by_solve(m: u64) -> Result<Vec<Rational>, SolveError> {
    let unknowns = m as usize + 1;
    let powers = 2 * m as usize + 1;
    let basis: Vec<PolynomialQ> = (0..unknowns).map(convolution_sum_poly).collect();

    // One equation per power of x, highest first so pivots land on the
    // diagonal (coeff of x^(2r+1) in C_r is nonzero).
    let mut matrix: Vec<Vec<Rational>> = Vec::with_capacity(powers);
    let mut rhs: Vec<Rational> = Vec::with_capacity(powers);
    for power in (1..=powers).rev() {
        matrix.push(basis.iter().map(|c| c.coeff(power)).collect());
        rhs.push(if power == powers {
            Rational::one()
        } else {
            Rational::zero()
        });
    }

    solve_overdetermined(matrix, rhs, m)
}

fn solve_overdetermined(
    mut a: Vec<Vec<Rational>>,
    mut b: Vec<Rational>,
    m: u64,
) -> Result<Vec<Rational>, SolveError> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivot_row_of_col = Vec::with_capacity(cols);
    let mut next_row = 0usize;

    for col in 0..cols {
        let Some(pivot) = (next_row..rows).find(|&r| !a[r][col].is_zero()) else {
            return Err(SolveError::Singular { m });
        };
        a.swap(next_row, pivot);
        b.swap(next_row, pivot);
        let inv = rat_int(1) / a[next_row][col].clone();
        for x in a[next_row].iter_mut() {
            *x *= &inv;
        }
        b[next_row] *= &inv;
        for r in 0..rows {
            if r != next_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..cols {
                    let delta = &a[next_row][c] * &factor;
                    a[r][c] -= delta;
                }
                let delta = &b[next_row] * &factor;
                b[r] -= delta;
            }
        }
        pivot_row_of_col.push(next_row);
        next_row += 1;
    }

    // Zero rows must carry zero right-hand sides or the system is inconsistent.
    for r in next_row..rows {
        debug_assert!(a[r].iter().all(Rational::is_zero));
        if !b[r].is_zero() {
            // rows were emitted for powers 2m+1 down to 1
            let power = 2 * m as usize + 1 - r;
            return Err(SolveError::Inconsistent { m, power });
        }
    }

    Ok(pivot_row_of_col.into_iter().map(|r| b[r].clone()).collect())
}
