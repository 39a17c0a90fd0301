//! Dense univariate polynomials with integer coefficients.
//!
//! These carry Hilbert-series numerators: for a monomial ideal `I` in
//! `K[x1..xn]` the Hilbert series of `S/I` is `N(t)/(1-t)^n` with `N` an
//! integer polynomial. The two operations that matter are exact division by
//! powers of `(1-t)` (to read off top degrees of finite-length modules) and
//! series expansion (to compare against direct monomial counting).

use std::fmt;

use crate::error::{KernelError, Result};

/// A polynomial in `t` with `i64` coefficients, stored densely from degree 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    /// `coeffs[k]` is the coefficient of `t^k`; no trailing zeros.
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    /// Builds a polynomial from coefficients (degree 0 first); trailing zeros
    /// are trimmed.
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// The single term `c * t^d`.
    pub fn term(c: i64, d: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        Self { coeffs }
    }

    /// `1 - t^d`.
    pub fn one_minus_power(d: usize) -> Self {
        assert!(d >= 1);
        let mut coeffs = vec![0; d + 1];
        coeffs[0] = 1;
        coeffs[d] = -1;
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k` (0 beyond the degree).
    pub fn coefficient(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// The coefficient slice, degree 0 first, no trailing zeros.
    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    /// Value at `t = 1`, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| self.coefficient(k) + other.coefficient(k))
            .collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| self.coefficient(k) - other.coefficient(k))
            .collect();
        Self::new(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// Multiplies by `t^d`.
    pub fn shift(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; d];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Exact division by `(1-t)^power`.
    ///
    /// Division by `1-t` sends coefficients to their prefix sums; it is exact
    /// iff the total coefficient sum (the value at `t=1`) vanishes, and the
    /// division drops the degree by one. Returns
    /// [`KernelError::InexactDivision`] as soon as one of the `power` steps
    /// leaves a remainder.
    pub fn divide_by_one_minus_t(&self, power: usize) -> Result<Self> {
        let mut current = self.coeffs.clone();
        for step in 0..power {
            if current.is_empty() {
                continue; // 0 / (1-t) = 0, exactly
            }
            let mut acc = 0i64;
            for c in current.iter_mut() {
                acc += *c;
                *c = acc;
            }
            // The last prefix sum is the value at t=1; it must be 0 and is
            // removed (the quotient has degree one less).
            match current.pop() {
                Some(0) => {}
                _ => return Err(KernelError::InexactDivision { power: step + 1 }),
            }
            while current.last() == Some(&0) {
                current.pop();
            }
        }
        Ok(Self { coeffs: current })
    }

    /// First `limit+1` coefficients of the power series `self / (1-t)^power`.
    ///
    /// With `self` the numerator of a Hilbert series over `n = power`
    /// variables, the result is the Hilbert function in degrees `0..=limit`.
    pub fn series_coefficients(&self, power: usize, limit: usize) -> Vec<i64> {
        let mut out: Vec<i64> = (0..=limit).map(|k| self.coefficient(k)).collect();
        for _ in 0..power {
            let mut acc = 0i64;
            for c in out.iter_mut() {
                acc += *c;
                *c = acc;
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "t")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
