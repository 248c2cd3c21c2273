//! Aggregated invariant suite behind the `selftest` CLI command.

use num::traits::{One, Zero};

use crate::arith::{binomial, rat_int, BernoulliCache, Rational};
use crate::poly::{power_sum_direct, power_sum_poly, PolynomialQ};
use crate::triangle::{coeff_row_by_solve, leading_coeff, CoeffTriangle};
use crate::verify::{verify_numeric, verify_symbolic, verify_symmetry};

use num::bigint::BigInt;

pub struct SelftestOutcome {
    pub lines: Vec<String>,
    pub passed: bool,
}

fn record(outcome: &mut SelftestOutcome, name: &str, ok: bool) {
    outcome
        .lines
        .push(format!("[{}] {name}", if ok { "PASS" } else { "FAIL" }));
    outcome.passed &= ok;
}

/// Runs every cross-module invariant and returns one line per check. Takes
/// the triangle by reference so harnesses can exercise fault detection.
pub fn run_selftest(triangle: &mut CoeffTriangle) -> SelftestOutcome {
    let mut outcome = SelftestOutcome {
        lines: Vec::new(),
        passed: true,
    };

    // Bernoulli convention and defining recurrence
    let mut cache = BernoulliCache::new();
    let mut ok = cache.get(1) == crate::arith::rat(1, 2);
    for n in 1..=31usize {
        ok &= cache.get(2 * n + 1).is_zero();
    }
    for n in 0..=64usize {
        let mut sum = Rational::zero();
        for j in 0..=n {
            sum += rat_int(binomial(n as u64 + 1, j as i64)) * cache.get(j);
        }
        ok &= sum == rat_int(n as u64 + 1);
    }
    record(&mut outcome, "bernoulli: B_1 = 1/2, odd zeros, recurrence n <= 64", ok);

    // Faulhaber telescoping
    let mut ok = true;
    for p in 0..=16usize {
        let s = power_sum_poly(p);
        ok &= s.sub(&s.shift_arg(-1)) == PolynomialQ::monomial(Rational::one(), p);
    }
    for p in 0..=10usize {
        let s = power_sum_poly(p);
        for x in (0..=200u64).step_by(20) {
            ok &= s.eval(&BigInt::from(x)) == rat_int(power_sum_direct(p, x));
        }
    }
    record(&mut outcome, "faulhaber: telescoping p <= 16, direct sums p <= 10", ok);

    // Route agreement between the recursion and the linear solve
    let mut ok = true;
    for m in 0..=20u64 {
        match coeff_row_by_solve(m) {
            Ok(solved) => ok &= triangle.row(m) == solved,
            Err(_) => ok = false,
        }
    }
    record(&mut outcome, "triangle: recursion row = solve row for m <= 20", ok);

    // Diagonal law and empty-sum zeros
    let mut ok = true;
    for m in 0..=20u64 {
        ok &= triangle.coeff(m, m as i64) == leading_coeff(m);
        for r in 0..m {
            if 2 * r + 1 > m {
                ok &= triangle.coeff(m, r as i64).is_zero();
            }
        }
    }
    record(&mut outcome, "triangle: diagonal law and empty-sum zeros for m <= 20", ok);

    // Constant term: every identity in the family ends "+ 1"
    let mut ok = true;
    for m in 0..=20u64 {
        ok &= triangle.coeff(m, 0).is_one();
    }
    record(&mut outcome, "triangle: constant term A(m,0) = 1 for m <= 20", ok);

    let mut ok = true;
    for m in 0..=12u64 {
        ok &= verify_symbolic(triangle, m).passed;
    }
    record(&mut outcome, "identity: symbolic expansion equals x^(2m+1) for m <= 12", ok);

    let mut ok = true;
    for m in 0..=8u64 {
        ok &= verify_numeric(triangle, m, 40).passed;
    }
    record(&mut outcome, "identity: numeric spot check m <= 8, x <= 40", ok);

    let mut ok = true;
    for m in 0..=8u64 {
        ok &= verify_symmetry(triangle, m, 30).passed;
    }
    record(&mut outcome, "identity: index-shift symmetry m <= 8, x <= 30", ok);

    // The published x^13 line is inconsistent with the diagonal law; the
    // derived row is the authoritative one and both routes agree on it.
    let row6 = triangle.row(6);
    let ok = row6[6] == rat_int(12012) && row6[6] != rat_int(51480);
    record(
        &mut outcome,
        "x^13 divergence: derived A(6,6) = 13*C(12,6) = 12012, not the published 51480",
        ok,
    );
    outcome.lines.push(format!(
        "note: the published x^13 identity (leading term 51480*k^5*(x-k)^7) breaks both \
         the k^r*(x-k)^r shape and the diagonal law; the derived row for m=6 is: {}",
        crate::export::identity_text(6, &row6)
    ));

    outcome.lines.push(if outcome.passed {
        "all checks passed".into()
    } else {
        "SELFTEST FAILED".into()
    });
    outcome
}
