//! Monomial ideals as minimal generator sets.
//!
//! A [`MonomialIdeal`] is stored by its unique minimal monomial generating
//! set `G(I)`, kept sorted, so structural equality coincides with equality of
//! ideals. The zero ideal is the empty generator set; the unit ideal is
//! generated by `1`. Every operation documents its behavior on both.
//!
//! Alongside the ideal algebra (sum, product, intersection, colon,
//! saturation, truncation) this module computes Hilbert-series numerators
//! `N(t)` with `Hilb(S/I) = N(t)/(1-t)^n`, exactly over the integers, by the
//! standard pivot recursion with an inclusion–exclusion cross-check.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{KernelError, Result};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::polynomial::IntPolynomial;

/// A monomial ideal in `K[x1..xn]`, represented by `G(I)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    /// Minimal generators: none divides another, sorted by degree then
    /// descending-lexicographic exponents, no duplicates.
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, keeping only the
    /// divisibility-minimal generators. Idempotent.
    pub fn minimalize(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut sorted: Vec<Monomial> = gens.into_iter().collect();
        for g in &sorted {
            assert_eq!(g.ambient(), n, "generator ambient mismatch");
        }
        sorted.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| b.exponents().cmp(a.exponents()))
        });
        sorted.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for g in sorted {
            // Only earlier (lower-or-equal-degree) monomials can divide g.
            if !minimal.iter().any(|h| h.divides(&g)) {
                minimal.push(g);
            }
        }
        Self { n, gens: minimal }
    }

    /// The zero ideal `(0)` — empty generator set.
    pub fn zero(n: usize) -> Self {
        Self { n, gens: Vec::new() }
    }

    /// The unit ideal `(1) = S`.
    pub fn unit(n: usize) -> Self {
        Self {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The ideal generated by a single monomial.
    pub fn principal(g: Monomial) -> Self {
        let n = g.ambient();
        Self { n, gens: vec![g] }
    }

    /// Ambient variable count.
    pub fn ambient(&self) -> usize {
        self.n
    }

    /// The minimal generators, sorted by degree then exponents.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_one())
    }

    /// Proper and nonzero: a genuine ideal `0 ≠ I ⊊ S`.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    /// Membership: some minimal generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> bool {
        assert_eq!(u.ambient(), self.n, "ambient mismatch");
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Ideal containment `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `deg(I)`: maximum degree of a minimal generator (`None` for `(0)`).
    pub fn deg(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// Minimum degree of a minimal generator (`None` for `(0)`).
    pub fn min_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    /// `m(I)`: max of `m(u)` over minimal generators; `None` when no
    /// generator involves any variable (zero and unit ideals).
    pub fn m_index(&self) -> Option<usize> {
        self.gens.iter().filter_map(Monomial::m_index).max()
    }

    /// Componentwise max of all generators (`None` for `(0)`).
    pub fn lcm_of_generators(&self) -> Option<Monomial> {
        let mut it = self.gens.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, g| acc.lcm(g)))
    }

    /// `I + J`.
    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ambient mismatch");
        Self::minimalize(self.n, self.gens.iter().chain(&other.gens).cloned())
    }

    /// `I · J`. Products with the zero ideal are zero; with the unit ideal,
    /// the other operand.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ambient mismatch");
        let pairs = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.multiply(h)));
        Self::minimalize(self.n, pairs)
    }

    /// `I ∩ J` via pairwise lcms. Intersection with `(0)` is `(0)`.
    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ambient mismatch");
        let pairs = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.lcm(h)));
        Self::minimalize(self.n, pairs)
    }

    /// `(I : u)`, generated by `g / gcd(g, u)` over `g ∈ G(I)`.
    pub fn colon_monomial(&self, u: &Monomial) -> Self {
        assert_eq!(u.ambient(), self.n, "ambient mismatch");
        let quots = self.gens.iter().map(|g| g.divide_exact(&g.gcd(u)));
        Self::minimalize(self.n, quots)
    }

    /// `(I : x_j^∞)`: the j-th exponent of every generator set to zero.
    /// Fixed point of colon by `x_j`; `(0)` and `(1)` are unchanged.
    pub fn saturate_var(&self, j: usize) -> Self {
        assert!(j >= 1 && j <= self.n, "variable index out of range");
        let dropped = self.gens.iter().map(|g| {
            let mut exps = g.exponents().to_vec();
            exps[j - 1] = 0;
            Monomial::new(exps)
        });
        Self::minimalize(self.n, dropped)
    }

    /// `(I : (x1,…,xj)^∞)`, the intersection of the single-variable
    /// saturations for `k = 1..j`.
    ///
    /// Both inclusions are elementary: `x_k^N ∈ (x1..xj)^N` gives `⊆`, and if
    /// `x_k^{N_k}·u ∈ I` for every `k` then any monomial of degree `j·max N_k`
    /// in `x1..xj` has some exponent ≥ `max N_k`, so it multiplies `u` into `I`.
    pub fn saturate_prefix(&self, j: usize) -> Self {
        assert!(j >= 1 && j <= self.n, "variable index out of range");
        let mut acc = self.saturate_var(1);
        for k in 2..=j {
            acc = acc.intersect(&self.saturate_var(k));
        }
        acc
    }

    /// `I^sat`, the saturation with respect to the maximal ideal
    /// `(x1,…,xn)`.
    pub fn saturate(&self) -> Self {
        self.saturate_prefix(self.n)
    }

    /// The truncation `I_{≥e}`: the ideal generated by all monomials of `I`
    /// of degree ≥ e. Generators of degree ≥ e are kept; the rest are padded
    /// by every monomial of the missing degree. Equals `I` when
    /// `e ≤` the minimum generator degree.
    pub fn truncate(&self, e: u32) -> Self {
        let mut out: Vec<Monomial> = Vec::new();
        for g in &self.gens {
            let d = g.degree();
            if d >= e {
                out.push(g.clone());
            } else {
                for w in monomials_of_degree(self.n, e - d) {
                    out.push(g.multiply(&w));
                }
            }
        }
        Self::minimalize(self.n, out)
    }

    /// The extension ideal `I·S'` in `S' = K[x1..x_{new_n}]`, same generators.
    pub fn extend_ring(&self, new_n: usize) -> Self {
        assert!(new_n >= self.n, "extend_ring cannot drop variables");
        Self {
            n: new_n,
            gens: self.gens.iter().map(|g| g.extend(new_n)).collect(),
        }
    }

    /// The ideal generated by `G(I)` inside `K[x1..xm]`. Fails if a generator
    /// involves a variable above `m` — that signals a caller bug in chain
    /// construction, not a recoverable condition.
    pub fn restrict_ring(&self, m: usize) -> Result<Self> {
        assert!(m >= 1 && m <= self.n);
        for g in &self.gens {
            if let Some(idx) = g.m_index() {
                if idx > m {
                    return Err(KernelError::RestrictOutOfRange { m, failing_var: idx });
                }
            }
        }
        Ok(Self {
            n: m,
            gens: self.gens.iter().map(|g| g.restrict(m)).collect(),
        })
    }

    /// The numerator `N(t)` of the Hilbert series `Hilb(S/I) = N(t)/(1-t)^n`.
    ///
    /// Pivot recursion: for a pivot monomial `p`,
    /// `N(S/I) = N(S/(I + (p))) + t^{deg p} · N(S/(I : p))`,
    /// with base cases `N(S/(0)) = 1`, `N(S/S) = 0`, and
    /// `N = Π (1 - t^{d_i})` when the generators are pure powers (a monomial
    /// complete intersection). The pivot is the largest variable power of the
    /// generator with the largest exponent spread; intermediate results are
    /// memoized on their (canonical) generator sets.
    pub fn hilbert_numerator(&self) -> IntPolynomial {
        let mut memo: HashMap<Vec<Monomial>, IntPolynomial> = HashMap::new();
        self.hilbert_numerator_memo(&mut memo)
    }

    fn hilbert_numerator_memo(
        &self,
        memo: &mut HashMap<Vec<Monomial>, IntPolynomial>,
    ) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::one();
        }
        if self.is_unit() {
            return IntPolynomial::zero();
        }
        if let Some(hit) = memo.get(&self.gens) {
            return hit.clone();
        }
        let result = match self.hilbert_pivot() {
            None => {
                // All generators are pure powers; after minimalization they
                // sit on distinct variables, a complete intersection.
                let mut acc = IntPolynomial::one();
                for g in &self.gens {
                    acc = acc.mul(&IntPolynomial::one_minus_power(g.degree() as usize));
                }
                acc
            }
            Some(p) => {
                let plus = self.sum(&MonomialIdeal::principal(p.clone()));
                let colon = self.colon_monomial(&p);
                let n_plus = plus.hilbert_numerator_memo(memo);
                let n_colon = colon.hilbert_numerator_memo(memo);
                n_plus.add(&n_colon.shift(p.degree() as usize))
            }
        };
        memo.insert(self.gens.clone(), result.clone());
        result
    }

    /// Pivot for the Hilbert recursion: `None` when every generator is a pure
    /// power (base case); otherwise the variable power `x_j^{ν_j(g)}` where
    /// `g` is a mixed generator with maximal top exponent and `j` attains it.
    ///
    /// Any pivot dividing a mixed generator is correct; both recursion
    /// branches then strictly shrink the total generator degree, so the
    /// recursion terminates. This choice knocks out the largest exponent
    /// available, which keeps the recursion shallow in practice.
    fn hilbert_pivot(&self) -> Option<Monomial> {
        let mixed = self
            .gens
            .iter()
            .filter(|g| {
                g.exponents().iter().filter(|&&e| e > 0).count() >= 2
            })
            .max_by_key(|g| g.exponents().iter().max().copied().unwrap_or(0))?;
        let (j0, &e) = mixed
            .exponents()
            .iter()
            .enumerate()
            .max_by_key(|&(idx, &e)| (e, std::cmp::Reverse(idx)))
            .expect("mixed generator has a positive exponent");
        Some(Monomial::variable_power(j0 + 1, e, self.n))
    }

    /// Inclusion–exclusion form of the same numerator:
    /// `N(t) = Σ_{T ⊆ G(I)} (-1)^{|T|} t^{deg lcm(T)}`.
    ///
    /// Exponential in the generator count; it exists as an independent
    /// cross-check of `hilbert_numerator` and is guarded accordingly.
    pub fn hilbert_numerator_taylor(&self) -> IntPolynomial {
        assert!(
            self.gens.len() <= 20,
            "inclusion-exclusion cross-check is limited to 20 generators"
        );
        let mut acc = IntPolynomial::zero();
        for mask in 0u32..(1 << self.gens.len()) {
            let mut lcm = Monomial::one(self.n);
            for (idx, g) in self.gens.iter().enumerate() {
                if mask & (1 << idx) != 0 {
                    lcm = lcm.lcm(g);
                }
            }
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            acc = acc.add(&IntPolynomial::term(sign, lcm.degree() as usize));
        }
        acc
    }

    /// Hilbert function of `S/I` in degrees `0..=limit`, expanded from the
    /// exact numerator.
    pub fn hilbert_function(&self, limit: usize) -> Vec<i64> {
        self.hilbert_numerator().series_coefficients(self.n, limit)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (idx, g) in self.gens.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|e| Monomial::new(e.to_vec())))
    }

    /// The six-generator ideal used as the running worked example:
    /// (x1^7, x1^5 x2, x1^2 x2^4, x1 x2^6, x1^5 x3^2, x1 x2^4 x3^2) in 4 vars.
    pub(crate) fn worked_example() -> MonomialIdeal {
        ideal(
            4,
            &[
                &[7, 0, 0, 0],
                &[5, 1, 0, 0],
                &[2, 4, 0, 0],
                &[1, 6, 0, 0],
                &[5, 0, 2, 0],
                &[1, 4, 2, 0],
            ],
        )
    }

    #[test]
    fn minimalize_drops_multiples() {
        assert_eq!(
            ideal(2, &[&[2, 0], &[2, 1], &[0, 3]]),
            ideal(2, &[&[2, 0], &[0, 3]])
        );
        assert_eq!(MonomialIdeal::minimalize(2, []), MonomialIdeal::zero(2));
        assert_eq!(
            ideal(2, &[&[5, 0], &[1, 4], &[5, 1]]),
            ideal(2, &[&[5, 0], &[1, 4]])
        );
        // Idempotent: re-minimalizing the generator set changes nothing.
        let i = worked_example();
        assert_eq!(
            MonomialIdeal::minimalize(4, i.generators().to_vec()),
            i
        );
        assert_eq!(i.num_generators(), 6);
    }

    #[test]
    fn unit_ideal_absorbs_everything() {
        let u = MonomialIdeal::minimalize(
            3,
            [Monomial::one(3), Monomial::variable(2, 3)],
        );
        assert!(u.is_unit());
        assert_eq!(u, MonomialIdeal::unit(3));
    }

    #[test]
    fn membership() {
        let i = worked_example();
        assert!(i.contains(&Monomial::new(vec![5, 1, 1, 0]))); // x1^5*x2*x3
        assert!(!i.contains(&Monomial::new(vec![0, 6, 0, 0]))); // x2^6
        assert!(!MonomialIdeal::zero(2).contains(&Monomial::new(vec![3, 3])));
    }

    #[test]
    fn degree_and_m_index() {
        let i = worked_example();
        assert_eq!(i.deg(), Some(7));
        assert_eq!(i.min_generator_degree(), Some(6));
        assert_eq!(i.m_index(), Some(3));
        assert_eq!(MonomialIdeal::zero(2).deg(), None);
        assert_eq!(MonomialIdeal::unit(2).deg(), Some(0));
        assert_eq!(MonomialIdeal::unit(2).m_index(), None);
    }

    #[test]
    fn sum_product_intersect() {
        assert_eq!(
            ideal(2, &[&[2, 0]]).sum(&ideal(2, &[&[1, 0], &[0, 1]])),
            ideal(2, &[&[1, 0], &[0, 1]])
        );
        assert_eq!(
            ideal(2, &[&[1, 0]]).intersect(&ideal(2, &[&[0, 1]])),
            ideal(2, &[&[1, 1]])
        );
        assert_eq!(
            ideal(3, &[&[2, 0, 0], &[0, 2, 0]])
                .product(&ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
            ideal(
                3,
                &[
                    &[3, 0, 0],
                    &[2, 1, 0],
                    &[2, 0, 1],
                    &[1, 2, 0],
                    &[0, 3, 0],
                    &[0, 2, 1]
                ]
            )
        );
        // Zero and unit behave as neutral/absorbing elements.
        let j = ideal(2, &[&[1, 1]]);
        assert_eq!(j.product(&MonomialIdeal::zero(2)), MonomialIdeal::zero(2));
        assert_eq!(j.product(&MonomialIdeal::unit(2)), j);
        assert_eq!(j.intersect(&MonomialIdeal::zero(2)), MonomialIdeal::zero(2));
        assert_eq!(j.sum(&MonomialIdeal::zero(2)), j);
    }

    #[test]
    fn colon_by_monomial() {
        assert_eq!(
            ideal(2, &[&[5, 0], &[1, 4]]).colon_monomial(&Monomial::new(vec![0, 4])),
            ideal(2, &[&[1, 0]])
        );
        let i = worked_example();
        assert_eq!(i.colon_monomial(&Monomial::one(4)), i);
        assert_eq!(
            ideal(2, &[&[1, 1]]).colon_monomial(&Monomial::new(vec![1, 0])),
            ideal(2, &[&[0, 1]])
        );
    }

    #[test]
    fn single_variable_saturation() {
        let i = worked_example();
        assert_eq!(
            i.saturate_var(3),
            ideal(4, &[&[5, 0, 0, 0], &[1, 4, 0, 0]])
        );
        assert_eq!(
            i.saturate_var(3).saturate_var(2),
            ideal(4, &[&[1, 0, 0, 0]])
        );
        assert_eq!(MonomialIdeal::unit(3).saturate_var(2), MonomialIdeal::unit(3));
        assert_eq!(MonomialIdeal::zero(3).saturate_var(2), MonomialIdeal::zero(3));
        // Idempotent and extensive.
        let s = i.saturate_var(3);
        assert_eq!(s.saturate_var(3), s);
        assert!(s.contains_ideal(&i));
    }

    #[test]
    fn prefix_saturation() {
        let j1 = ideal(2, &[&[5, 0], &[1, 4]]);
        assert_eq!(j1.saturate_prefix(2), ideal(2, &[&[1, 0]]));
        assert_eq!(j1.saturate(), ideal(2, &[&[1, 0]]));
        let i = worked_example();
        assert_eq!(i.saturate_prefix(1), i.saturate_var(1));
        // Artinian ideal saturates to the unit ideal.
        let artinian = ideal(2, &[&[2, 0], &[0, 2]]);
        assert_eq!(artinian.saturate_prefix(2), MonomialIdeal::unit(2));
    }

    #[test]
    fn truncation() {
        assert_eq!(
            ideal(2, &[&[1, 0]]).truncate(2),
            ideal(2, &[&[2, 0], &[1, 1]])
        );
        let i = worked_example();
        assert_eq!(i.truncate(6), i); // min generator degree is 6
        assert_eq!(i.truncate(0), i);
        // Truncation monotonicity.
        assert_eq!(i.truncate(8).truncate(9), i.truncate(9));
        assert_eq!(
            MonomialIdeal::unit(2).truncate(2),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        assert_eq!(MonomialIdeal::zero(2).truncate(3), MonomialIdeal::zero(2));
    }

    #[test]
    fn ring_extension_and_restriction() {
        let j1 = ideal(2, &[&[5, 0], &[1, 4]]);
        let ext = j1.extend_ring(4);
        assert_eq!(ext, ideal(4, &[&[5, 0, 0, 0], &[1, 4, 0, 0]]));
        assert_eq!(ext.restrict_ring(2).unwrap(), j1);
        match worked_example().restrict_ring(2) {
            Err(KernelError::RestrictOutOfRange { m: 2, failing_var: 3 }) => {}
            other => panic!("expected RestrictOutOfRange, got {other:?}"),
        }
    }

    #[test]
    fn hilbert_numerator_examples() {
        assert_eq!(
            ideal(2, &[&[1, 0]]).hilbert_numerator(),
            IntPolynomial::new(vec![1, -1])
        );
        assert_eq!(
            ideal(2, &[&[5, 0], &[1, 4]]).hilbert_numerator(),
            IntPolynomial::new(vec![1, 0, 0, 0, 0, -2, 0, 0, 0, 1])
        );
        assert_eq!(MonomialIdeal::zero(3).hilbert_numerator(), IntPolynomial::one());
        assert_eq!(MonomialIdeal::unit(3).hilbert_numerator(), IntPolynomial::zero());
        // Complete intersection base case.
        assert_eq!(
            ideal(2, &[&[2, 0], &[0, 3]]).hilbert_numerator(),
            IntPolynomial::one_minus_power(2).mul(&IntPolynomial::one_minus_power(3))
        );
    }

    #[test]
    fn hilbert_routes_agree() {
        for i in [
            worked_example(),
            ideal(3, &[&[2, 1, 0], &[0, 2, 1], &[1, 0, 2]]),
            ideal(2, &[&[5, 0], &[1, 4]]),
            MonomialIdeal::zero(2),
            MonomialIdeal::unit(2),
        ] {
            assert_eq!(i.hilbert_numerator(), i.hilbert_numerator_taylor(), "on {i}");
        }
    }

    #[test]
    fn hilbert_function_matches_direct_count() {
        let i = ideal(3, &[&[2, 1, 0], &[0, 0, 3]]);
        let hf = i.hilbert_function(9);
        for k in 0..=9u32 {
            let count = monomials_of_degree(3, k)
                .iter()
                .filter(|u| !i.contains(u))
                .count() as i64;
            assert_eq!(hf[k as usize], count, "degree {k}");
        }
    }

    #[test]
    fn display_form() {
        assert_eq!(
            ideal(2, &[&[5, 0], &[1, 4]]).to_string(),
            "(x1^5, x1*x2^4)"
        );
        assert_eq!(MonomialIdeal::zero(2).to_string(), "(0)");
        assert_eq!(MonomialIdeal::unit(2).to_string(), "(1)");
    }
}
