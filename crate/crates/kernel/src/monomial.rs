//! Exponent-vector monomials in a polynomial ring `K[x1,...,xn]`.
//!
//! A [`Monomial`] is a dense vector of non-negative exponents of fixed length
//! `n` (the ambient variable count). Variables are 1-based, `x1..xn`, and all
//! operations are pure; monomials are immutable values.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A monomial `x1^{a1} * x2^{a2} * ... * xn^{an}` stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// Builds a monomial from its exponent vector.
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The variable `x_i` (1-based) in `n` variables.
    pub fn variable(i: usize, n: usize) -> Self {
        Self::variable_power(i, 1, n)
    }

    /// The pure power `x_i^e` (1-based) in `n` variables.
    pub fn variable_power(i: usize, e: u32, n: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable index {i} out of range 1..={n}");
        let mut exps = vec![0; n];
        exps[i - 1] = e;
        Self { exps }
    }

    /// Number of ambient variables.
    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    /// The full exponent vector.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Total degree, the sum of all exponents.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// True for the constant monomial `1`.
    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Largest variable index dividing the monomial, `None` for the constant `1`.
    pub fn m_index(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0).map(|i| i + 1)
    }

    /// True iff `self` divides `other` componentwise.
    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum of exponents.
    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Self { exps }
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Self { exps }
    }

    /// Product of two monomials.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.ambient(), other.ambient(), "ambient mismatch");
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Self { exps }
    }

    /// Exact quotient `self / divisor`; the divisor must divide `self`.
    pub fn divide_exact(&self, divisor: &Self) -> Self {
        assert!(
            divisor.divides(self),
            "divide_exact: {divisor} does not divide {self}"
        );
        let exps = self
            .exps
            .iter()
            .zip(&divisor.exps)
            .map(|(a, b)| a - b)
            .collect();
        Self { exps }
    }

    /// Same exponents re-ambiented into `new_n >= n` variables.
    pub fn extend(&self, new_n: usize) -> Self {
        assert!(new_n >= self.ambient());
        let mut exps = self.exps.clone();
        exps.resize(new_n, 0);
        Self { exps }
    }

    /// Drops trailing variables; every dropped variable must have exponent 0.
    pub fn restrict(&self, m: usize) -> Self {
        assert!(self.m_index().unwrap_or(0) <= m, "restrict would lose exponents");
        Self {
            exps: self.exps[..m].to_vec(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (idx, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", idx + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d` in `n` variables, in lexicographic order
/// of exponent vectors.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, var: usize, remaining: u32) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(Monomial::new(current.clone()));
        current[var] = 0;
        return;
    }
    for e in 0..=remaining {
        current[var] = e;
        fill(out, current, var + 1, remaining - e);
    }
    current[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn m_index_of_mixed_monomial() {
        // x1^5*x3^2 in 4 variables
        assert_eq!(m(&[5, 0, 2, 0]).m_index(), Some(3));
        assert_eq!(Monomial::one(3).m_index(), None);
        assert_eq!(m(&[1, 0, 0, 0]).m_index(), Some(1));
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 4]).divides(&m(&[1, 6])));
        assert!(!m(&[5, 0]).divides(&m(&[2, 4])));
        assert!(Monomial::one(2).divides(&m(&[3, 7])));
    }

    #[test]
    fn lcm_gcd_quotient() {
        assert_eq!(m(&[5, 0]).lcm(&m(&[1, 4])), m(&[5, 4]));
        assert_eq!(m(&[5, 0, 2]).gcd(&m(&[1, 4, 2])), m(&[1, 0, 2]));
        assert_eq!(m(&[5, 0, 2]).divide_exact(&m(&[0, 0, 2])), m(&[5, 0, 0]));
    }

    #[test]
    #[should_panic(expected = "does not divide")]
    fn divide_by_non_divisor_panics() {
        m(&[1, 0]).divide_exact(&m(&[0, 1]));
    }

    #[test]
    fn degree_is_additive() {
        let a = m(&[2, 1, 0]);
        let b = m(&[0, 3, 4]);
        assert_eq!(a.multiply(&b).degree(), a.degree() + b.degree());
    }

    #[test]
    fn m_index_of_product_is_max() {
        let a = m(&[2, 0, 0]);
        let b = m(&[0, 3, 0]);
        assert_eq!(a.multiply(&b).m_index(), Some(2));
        assert_eq!(a.multiply(&Monomial::one(3)).m_index(), Some(1));
    }

    #[test]
    fn degree_enumeration() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(1, 5), vec![m(&[5])]);
        assert_eq!(monomials_of_degree(2, 0), vec![Monomial::one(2)]);
    }

    #[test]
    fn display_form() {
        assert_eq!(m(&[5, 0, 2, 0]).to_string(), "x1^5*x3^2");
        assert_eq!(m(&[1, 1]).to_string(), "x1*x2");
        assert_eq!(Monomial::one(4).to_string(), "1");
    }
}
