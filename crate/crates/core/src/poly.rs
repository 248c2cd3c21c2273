//! Dense univariate polynomials over exact rationals, Faulhaber power-sum
//! polynomials, and the closed form of the convolution sum
//! `C_r(x) = sum_{k=1}^{x} k^r (x-k)^r`.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::arith::{bernoulli, binomial, rat_int, rational_str, Rational};

/// Dense polynomial in one variable; `coeffs[i]` is the coefficient of `x^i`.
/// The zero polynomial has an empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialQ {
    coeffs: Vec<Rational>,
}

impl PolynomialQ {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `c * x^power`
    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^power`.
    pub fn mul_xpow(&self, power: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); power];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Exact Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> Rational {
        let xr = rat_int(x.clone());
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &xr + c;
        }
        acc
    }

    /// Argument shift: returns `p(x + delta)`.
    pub fn shift_arg(&self, delta: i64) -> Self {
        let d = rat_int(delta);
        let mut acc = Self::zero();
        // Horner in (x + delta): acc <- acc*(x + delta) + c_i
        for c in self.coeffs.iter().rev() {
            let shifted = acc.mul_xpow(1).add(&acc.scale(&d));
            acc = shifted.add(&Self::monomial(c.clone(), 0));
        }
        acc
    }
}

impl std::fmt::Display for PolynomialQ {
    /// Descending powers, rationals as `num/den`, e.g. `1/6*x^3 - 1/6*x`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", rational_str(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", rational_str(&mag))?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Faulhaber polynomial `S_p` with `S_p(x) = sum_{k=1}^{x} k^p`, via
/// `(1/(p+1)) * sum_{j=0}^{p} C(p+1, j) B_j x^(p+1-j)` under `B_1 = +1/2`.
pub fn power_sum_poly(p: usize) -> PolynomialQ {
    let mut coeffs = vec![Rational::zero(); p + 2];
    let inv = rat_int(1) / rat_int(p as u64 + 1);
    for j in 0..=p {
        let term = rat_int(binomial(p as u64 + 1, j as i64)) * bernoulli(j) * &inv;
        coeffs[p + 1 - j] += term;
    }
    PolynomialQ::from_coeffs(coeffs)
}

/// Closed form of `C_r(x) = sum_{k=1}^{x} k^r (x-k)^r`: expand `(x-k)^r`
/// binomially and collapse each inner power sum with `power_sum_poly`.
pub fn convolution_sum_poly(r: usize) -> PolynomialQ {
    let mut acc = PolynomialQ::zero();
    for j in 0..=r {
        let mut c = rat_int(binomial(r as u64, j as i64));
        if j % 2 == 1 {
            c = -c;
        }
        let term = power_sum_poly(r + j).mul_xpow(r - j).scale(&c);
        acc = acc.add(&term);
    }
    acc
}

/// Direct enumeration `sum_{k=1}^{x} k^p`; verification route only.
pub fn power_sum_direct(p: usize, x: u64) -> BigInt {
    (1..=x).map(|k| BigInt::from(k).pow(p as u32)).sum()
}

/// Direct enumeration `sum_{k=1}^{x} k^r (x-k)^r`; verification route only.
pub fn convolution_sum_direct(r: usize, x: u64) -> BigInt {
    (1..=x)
        .map(|k| (BigInt::from(k) * BigInt::from(x - k)).pow(r as u32))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn poly(coeffs: &[(i64, i64)]) -> PolynomialQ {
        PolynomialQ::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn add_cancels_and_normalizes() {
        let x = poly(&[(0, 1), (1, 1)]);
        let neg_x = poly(&[(0, 1), (-1, 1)]);
        assert!(x.add(&neg_x).is_zero());

        let a = poly(&[(0, 1), (1, 2), (1, 2)]);
        let b = poly(&[(0, 1), (-1, 2), (1, 2)]);
        assert_eq!(a.add(&b), poly(&[(0, 1), (0, 1), (1, 1)]));

        let x2 = poly(&[(0, 1), (0, 1), (1, 1)]);
        assert_eq!(x.add(&x2).degree(), Some(2));
    }

    #[test]
    fn scale_by_zero_and_identity() {
        let p = poly(&[(0, 1), (-1, 6), (0, 1), (1, 6)]);
        assert!(p.scale(&Rational::zero()).is_zero());
        assert_eq!(p.scale(&Rational::one()), p);
        assert_eq!(p.scale(&rat(6, 1)), poly(&[(0, 1), (-1, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn eval_examples() {
        let cube = PolynomialQ::monomial(Rational::one(), 3);
        assert_eq!(cube.eval(&BigInt::from(3)), rat_int(27));
        assert!(PolynomialQ::zero().eval(&BigInt::from(1_000_000)).is_zero());
        let s1 = poly(&[(0, 1), (1, 2), (1, 2)]);
        assert_eq!(s1.eval(&BigInt::from(4)), rat_int(10));
    }

    #[test]
    fn power_sum_small() {
        assert_eq!(power_sum_poly(0), poly(&[(0, 1), (1, 1)]));
        assert_eq!(power_sum_poly(1), poly(&[(0, 1), (1, 2), (1, 2)]));
        assert_eq!(power_sum_poly(2), poly(&[(0, 1), (1, 6), (1, 2), (1, 3)]));
    }

    #[test]
    fn power_sum_telescopes() {
        for p in 0..=16usize {
            let s = power_sum_poly(p);
            let diff = s.sub(&s.shift_arg(-1));
            assert_eq!(diff, PolynomialQ::monomial(Rational::one(), p), "p={p}");
            assert!(s.coeff(0).is_zero(), "S_{p}(0) != 0");
        }
    }

    #[test]
    fn power_sum_matches_direct() {
        for p in 0..=10usize {
            let s = power_sum_poly(p);
            for x in 0..=60u64 {
                assert_eq!(
                    s.eval(&BigInt::from(x)),
                    rat_int(power_sum_direct(p, x)),
                    "p={p} x={x}"
                );
            }
        }
    }

    #[test]
    fn convolution_small() {
        assert_eq!(convolution_sum_poly(0), poly(&[(0, 1), (1, 1)]));
        assert_eq!(
            convolution_sum_poly(1),
            poly(&[(0, 1), (-1, 6), (0, 1), (1, 6)])
        );
        assert_eq!(
            convolution_sum_poly(2),
            poly(&[(0, 1), (-1, 30), (0, 1), (0, 1), (0, 1), (1, 30)])
        );
    }

    #[test]
    fn convolution_matches_direct_enumeration() {
        for r in 0..=12usize {
            let c = convolution_sum_poly(r);
            for x in 0..=50u64 {
                assert_eq!(
                    c.eval(&BigInt::from(x)),
                    rat_int(convolution_sum_direct(r, x)),
                    "r={r} x={x}"
                );
            }
        }
    }

    #[test]
    fn convolution_leading_coeff_and_parity() {
        for r in 0..=12usize {
            let c = convolution_sum_poly(r);
            assert_eq!(c.degree(), Some(2 * r + 1));
            let lead = c.coeff(2 * r + 1);
            let expected =
                rat_int(1) / (rat_int(2 * r as u64 + 1) * rat_int(binomial(2 * r as u64, r as i64)));
            assert_eq!(lead, expected, "leading coeff at r={r}");
            // no even-power terms (structural observation, not assumed anywhere)
            for i in (0..=2 * r).step_by(2) {
                assert!(c.coeff(i).is_zero(), "even term x^{i} in C_{r}");
            }
        }
    }

    #[test]
    fn display_rendering() {
        assert_eq!(convolution_sum_poly(1).to_string(), "1/6*x^3 - 1/6*x");
        assert_eq!(PolynomialQ::zero().to_string(), "0");
        assert_eq!(
            poly(&[(1, 1), (-1, 1), (2, 1)]).to_string(),
            "2*x^2 - x + 1"
        );
        assert_eq!(PolynomialQ::monomial(rat(-1, 2), 4).to_string(), "-1/2*x^4");
    }

    proptest! {
        #[test]
        fn eval_is_additive(
            a in proptest::collection::vec((-50i64..50, 1i64..20), 0..6),
            b in proptest::collection::vec((-50i64..50, 1i64..20), 0..6),
            x in -30i64..30,
        ) {
            let pa = PolynomialQ::from_coeffs(a.iter().map(|&(n, d)| rat(n, d)).collect());
            let pb = PolynomialQ::from_coeffs(b.iter().map(|&(n, d)| rat(n, d)).collect());
            let x = BigInt::from(x);
            prop_assert_eq!(pa.add(&pb).eval(&x), pa.eval(&x) + pb.eval(&x));
        }

        #[test]
        fn shift_matches_pointwise(
            a in proptest::collection::vec((-50i64..50, 1i64..20), 0..6),
            delta in -5i64..5,
            x in -20i64..20,
        ) {
            let p = PolynomialQ::from_coeffs(a.iter().map(|&(n, d)| rat(n, d)).collect());
            prop_assert_eq!(
                p.shift_arg(delta).eval(&BigInt::from(x)),
                p.eval(&BigInt::from(x + delta))
            );
        }
    }
}
