//! Dense univariate polynomials over the integers.
//!
//! Coefficients are exact [`BigInt`]s stored densely (index = exponent),
//! which suits the polynomials in this crate: they are dense in practice and
//! their degrees stay at desk scale.  Multiplication is schoolbook; division
//! is exact long division that reports a [`Error::NonZeroRemainder`] instead
//! of ever truncating.
//!
//! The zero polynomial is the empty coefficient vector.  Degree, maximum gap
//! and selfreciprocity are undefined for it and return errors rather than
//! sentinel values.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial with integer coefficients, stored densely.
///
/// Invariant: either `coeffs` is empty (the zero polynomial) or its last
/// entry is non-zero.  `PartialEq` on the stored vector is therefore a
/// canonical equality test.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    /// Build from dense coefficients (index = exponent), trimming trailing
    /// zeros to restore the invariant.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Build from machine-word coefficients; convenient in tests.
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// The binomial `x^n - 1`.
    pub fn x_power_minus_one(n: usize) -> Self {
        assert!(n > 0, "x^0 - 1 is the zero polynomial; construct it explicitly");
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial (no sentinel values).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The dense coefficient slice (index = exponent).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The non-zero terms as `(exponent, coefficient)` pairs, ascending.
    pub fn nonzero_terms(&self) -> Vec<(usize, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect()
    }

    /// Number of non-zero terms.
    pub fn num_nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Largest difference between consecutive exponents carrying non-zero
    /// coefficients; 0 for a single term.
    ///
    /// Errors with [`Error::ZeroPolynomial`] on the zero polynomial, whose
    /// gap structure is undefined.
    pub fn max_gap(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial { op: "max_gap" });
        }
        let mut best = 0usize;
        let mut prev: Option<usize> = None;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Some(p) = prev {
                best = best.max(k - p);
            }
            prev = Some(k);
        }
        Ok(best)
    }

    /// True when the coefficient sequence equals its own reversal, i.e.
    /// `x^deg * f(1/x) = f(x)`.
    ///
    /// Errors with [`Error::ZeroPolynomial`] on the zero polynomial.
    pub fn is_selfreciprocal(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial { op: "is_selfreciprocal" });
        }
        let n = self.coeffs.len();
        Ok((0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i]))
    }

    /// Evaluate at an integer point by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Sum.
    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.coeffs.iter().enumerate() {
            out[i] += b;
        }
        IntPoly::from_coeffs(out)
    }

    /// Difference.
    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.coeffs.iter().enumerate() {
            out[i] -= b;
        }
        IntPoly::from_coeffs(out)
    }

    /// Negation.
    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Exact quotient `self / divisor` in `Z[x]`.
    ///
    /// Long division over the integers; if any step requires a fractional
    /// coefficient, or a non-zero remainder survives, the divisor does not
    /// divide `self` and [`Error::NonZeroRemainder`] is returned — the result
    /// is never silently truncated.  Division by the zero polynomial errors
    /// with [`Error::ZeroPolynomial`].
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial { op: "exact_div divisor" });
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let deg_f = self.coeffs.len() - 1;
        let deg_d = divisor.coeffs.len() - 1;
        if deg_f < deg_d {
            return Err(Error::NonZeroRemainder);
        }
        let lead = &divisor.coeffs[deg_d];
        // Divisors here are typically sparse (x^n - 1 and products thereof),
        // so iterate only over their non-zero coefficients.
        let divisor_support: Vec<(usize, &BigInt)> = divisor
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); deg_f - deg_d + 1];
        for i in (0..quot.len()).rev() {
            let top = std::mem::take(&mut rem[i + deg_d]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return Err(Error::NonZeroRemainder);
            }
            for &(j, c) in &divisor_support[..divisor_support.len() - 1] {
                let prod = c * &q;
                rem[i + j] -= prod;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonZeroRemainder);
        }
        Ok(IntPoly::from_coeffs(quot))
    }
}

impl fmt::Display for IntPoly {
    /// Renders in descending exponent order, e.g. `x^2 - x + 1` or
    /// `3*x^4 + 2`.  The zero polynomial renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
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
            let unit = magnitude.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{magnitude}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{magnitude}*x^{k}")?,
            }
        }
        Ok(())
    }
}
