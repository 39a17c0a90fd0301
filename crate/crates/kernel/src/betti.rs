//! Ground-truth regularity via multigraded Betti numbers.
//!
//! For a monomial ideal `I` and a multidegree `a`, the upper Koszul complex
//! `K^a(I)` has faces `σ ⊆ {1..n}` with `x^{a-σ} ∈ I`; its reduced homology
//! gives `β_{i,a}(I) = dim H̃_{i-1}(K^a(I))`, and
//! `reg(I) = max{ |a| - i : β_{i,a}(I) ≠ 0 }`.
//!
//! Multidegrees are enumerated over the lcm lattice of `G(I)` — nonzero
//! Betti numbers only occur there — with an exhaustive-multidegree variant
//! kept as a test-side validation of that restriction. Homology ranks are
//! computed by fraction-free integer elimination: an oracle must never be
//! approximately right, so there is no floating point anywhere.
//!
//! This is deliberately a desk-scale tool, guarded by [`BettiOracleConfig`];
//! it certifies the production methods on small inputs rather than competing
//! with them.

use std::collections::{BTreeMap, BTreeSet};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{KernelError, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polynomial::IntPolynomial;

/// A simplicial complex on vertices `1..=n`, faces stored as bitmasks
/// (bit `v-1` set ⟺ vertex `v` in the face).
///
/// The *void* complex (no faces at all) and the complex `{∅}` (only the
/// empty face) are distinct and both representable; they differ precisely in
/// `H̃_{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    /// Sorted face bitmasks, downward closed.
    faces: Vec<u32>,
}

impl SimplicialComplex {
    /// Builds a complex from face bitmasks; must be downward closed.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = u32>) -> Self {
        assert!(n <= 32);
        let mut faces: Vec<u32> = faces.into_iter().collect();
        faces.sort_unstable();
        faces.dedup();
        let c = Self { n, faces };
        debug_assert!(c.is_downward_closed(), "faces not closed under subsets");
        c
    }

    /// The complex with no faces at all.
    pub fn void(n: usize) -> Self {
        Self { n, faces: Vec::new() }
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Sorted face bitmasks.
    pub fn faces(&self) -> &[u32] {
        &self.faces
    }

    fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|&f| {
            (0..self.n).all(|v| f & (1 << v) == 0 || self.faces.contains(&(f & !(1 << v))))
        })
    }

    /// Reduced homology dimensions over the rationals, reported as a vector
    /// whose entry `i` is `dim H̃_{i-1}` — aligned so that entry `i` is the
    /// contribution to the Betti number `β_{i,a}`. Entry 0 is `H̃_{-1}`,
    /// which is 1 exactly for the complex `{∅}`.
    pub fn reduced_homology_dims(&self) -> Vec<usize> {
        // Faces grouped by cardinality; chain group D_k is spanned by the
        // faces of size k (the empty face spans D_0 of the augmented complex).
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); self.n + 1];
        for &f in &self.faces {
            by_size[f.count_ones() as usize].push(f);
        }
        // rank of the boundary map D_k -> D_{k-1} for k = 1..=n; ranks[k]
        // stores rank ∂_k, with ranks[0] = 0 (D_0 maps to zero) and an extra
        // trailing 0 for ∂_{n+1}.
        let mut ranks = vec![0usize; self.n + 2];
        for k in 1..=self.n {
            ranks[k] = boundary_rank(&by_size[k - 1], &by_size[k]);
        }
        // dim H̃_{k-1} = dim D_k - rank ∂_k - rank ∂_{k+1}.
        (0..=self.n)
            .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
            .collect()
    }
}

/// Rank of the simplicial boundary map from the span of `cols` (faces of
/// size k) to the span of `rows` (faces of size k-1), with the usual
/// alternating signs; exact integer elimination.
fn boundary_rank(rows: &[u32], cols: &[u32]) -> usize {
    if rows.is_empty() || cols.is_empty() {
        return 0;
    }
    let row_index: BTreeMap<u32, usize> = rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut matrix = vec![vec![0i128; cols.len()]; rows.len()];
    for (c, &face) in cols.iter().enumerate() {
        let mut sign = 1i128;
        for v in 0..32 {
            if face & (1 << v) != 0 {
                let sub = face & !(1 << v);
                let r = row_index[&sub]; // downward closure guarantees presence
                matrix[r][c] = sign;
                sign = -sign;
            }
        }
    }
    rank_fraction_free(matrix)
}

/// Rank of an integer matrix by Bareiss fraction-free elimination; all
/// intermediate values stay integers, so the result is exact.
fn rank_fraction_free(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev_pivot: i128 = 1;
    let mut row = 0;
    for col in 0..cols {
        // Find a pivot in this column at or below `row`.
        let Some(p) = (row..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col];
        for r in row + 1..rows {
            for c in col + 1..cols {
                m[r][c] = (m[r][c] * pivot - m[r][col] * m[row][c]) / prev_pivot;
            }
            m[r][col] = 0;
        }
        prev_pivot = pivot;
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// The upper Koszul complex `K^a(I)`: faces `σ ⊆ {1..n}` with `a - σ ≥ 0`
/// and `x^{a-σ} ∈ I`.
///
/// Downward closure is automatic: `x^{a-τ}` is a multiple of `x^{a-σ}` for
/// `τ ⊆ σ`. In particular the complex is void exactly when `x^a ∉ I`.
pub fn upper_koszul(ideal: &MonomialIdeal, a: &Monomial) -> SimplicialComplex {
    let n = ideal.ambient();
    assert_eq!(a.ambient(), n, "ambient mismatch");
    assert!(n <= 32);
    let mut faces = Vec::new();
    'sigma: for sigma in 0u32..(1 << n) {
        let mut exps = a.exponents().to_vec();
        for v in 0..n {
            if sigma & (1 << v) != 0 {
                if exps[v] == 0 {
                    continue 'sigma; // a - σ has a negative entry
                }
                exps[v] -= 1;
            }
        }
        if ideal.contains(&Monomial::new(exps)) {
            faces.push(sigma);
        }
    }
    SimplicialComplex { n, faces }
}

/// Scale guard for the oracle: it refuses inputs beyond these limits rather
/// than silently truncating.
#[derive(Debug, Clone, Copy)]
pub struct BettiOracleConfig {
    /// Maximum ambient variable count.
    pub max_ambient: usize,
    /// Maximum total degree of the lcm of the generators.
    pub max_lcm_degree: u32,
}

impl Default for BettiOracleConfig {
    fn default() -> Self {
        Self {
            max_ambient: 5,
            max_lcm_degree: 40,
        }
    }
}

/// The multigraded Betti numbers of an ideal: `(i, a) ↦ β_{i,a}(I)`,
/// nonzero entries only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    /// Nonzero entries `((i, a), β_{i,a})` in deterministic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Monomial, usize)> {
        self.entries.iter().map(|((i, a), &b)| (*i, a, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `β_{i,a}`.
    pub fn get(&self, i: usize, a: &Monomial) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// Total Betti number `β_i = Σ_a β_{i,a}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, &b)| b)
            .sum()
    }

    /// `reg(I) = max{|a| - i}` over nonzero entries; `None` for an empty
    /// table (the zero ideal).
    pub fn regularity(&self) -> Option<u32> {
        self.entries
            .keys()
            .map(|(i, a)| a.degree() - *i as u32)
            .max()
    }

    /// A `(i, a)` entry attaining the regularity: the first one in table
    /// order, so deterministic.
    pub fn regularity_witness(&self) -> Option<(usize, Monomial)> {
        let reg = self.regularity()?;
        self.entries
            .keys()
            .find(|(i, a)| a.degree() - *i as u32 == reg)
            .map(|(i, a)| (*i, a.clone()))
    }

    /// The Hilbert-series numerator of `S/I` reconstructed from the table by
    /// the Euler-characteristic identity
    /// `N(t) = 1 - Σ_{i,a} (-1)^i β_{i,a}(I) t^{|a|}`
    /// (the resolution of `S/I` is that of `I` shifted by one step).
    pub fn euler_numerator(&self) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for ((i, a), &b) in &self.entries {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            acc = acc.add(&IntPolynomial::term(sign * b as i64, a.degree() as usize));
        }
        acc
    }
}

/// All lcms of non-empty subsets of `G(I)` — the lcm lattice, minus the
/// bottom. Computed by closing the generator set under pairwise lcm.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let gens = ideal.generators();
    let mut lattice: BTreeSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = lattice.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for m in &frontier {
            for g in gens {
                let l = m.lcm(g);
                if lattice.insert(l.clone()) {
                    fresh.push(l);
                }
            }
        }
        frontier = fresh;
    }
    lattice.into_iter().collect()
}

fn check_scale(ideal: &MonomialIdeal, config: &BettiOracleConfig) -> Result<()> {
    let n = ideal.ambient();
    if n > config.max_ambient {
        return Err(KernelError::ScaleGuardExceeded {
            what: "ambient variable count",
            actual: n as u64,
            limit: config.max_ambient as u64,
        });
    }
    if let Some(lcm) = ideal.lcm_of_generators() {
        if lcm.degree() > config.max_lcm_degree {
            return Err(KernelError::ScaleGuardExceeded {
                what: "lcm degree",
                actual: lcm.degree() as u64,
                limit: config.max_lcm_degree as u64,
            });
        }
    }
    Ok(())
}

/// Betti numbers for each `(i, a)` with `a` in the given multidegree list.
fn table_over(ideal: &MonomialIdeal, multidegrees: Vec<Monomial>) -> BettiTable {
    #[cfg(feature = "parallel")]
    let iter = multidegrees.into_par_iter();
    #[cfg(not(feature = "parallel"))]
    let iter = multidegrees.into_iter();

    let per_degree: Vec<Vec<((usize, Monomial), usize)>> = iter
        .map(|a| {
            let dims = upper_koszul(ideal, &a).reduced_homology_dims();
            dims.into_iter()
                .enumerate()
                .filter(|&(_, d)| d > 0)
                .map(|(i, d)| ((i, a.clone()), d))
                .collect()
        })
        .collect();
    BettiTable {
        entries: per_degree.into_iter().flatten().collect(),
    }
}

fn table_over_seq(ideal: &MonomialIdeal, multidegrees: Vec<Monomial>) -> BettiTable {
    let mut entries = BTreeMap::new();
    for a in multidegrees {
        let dims = upper_koszul(ideal, &a).reduced_homology_dims();
        for (i, d) in dims.into_iter().enumerate() {
            if d > 0 {
                entries.insert((i, a.clone()), d);
            }
        }
    }
    BettiTable { entries }
}

/// The full multigraded Betti table of `I`, multidegrees drawn from the lcm
/// lattice (nonzero Betti numbers are supported there), independent
/// multidegrees processed in parallel.
pub fn betti_table(ideal: &MonomialIdeal, config: &BettiOracleConfig) -> Result<BettiTable> {
    check_scale(ideal, config)?;
    Ok(table_over(ideal, lcm_lattice(ideal)))
}

/// Sequential form of [`betti_table`]; always available, identical output.
pub fn betti_table_seq(ideal: &MonomialIdeal, config: &BettiOracleConfig) -> Result<BettiTable> {
    check_scale(ideal, config)?;
    Ok(table_over_seq(ideal, lcm_lattice(ideal)))
}

/// Test-side validation of the lattice restriction: the same table computed
/// over *every* multidegree below the generator lcm. Exponentially larger
/// than [`betti_table`]; only sensible on tiny inputs.
pub fn betti_table_exhaustive(
    ideal: &MonomialIdeal,
    config: &BettiOracleConfig,
) -> Result<BettiTable> {
    check_scale(ideal, config)?;
    let Some(lcm) = ideal.lcm_of_generators() else {
        return Ok(BettiTable {
            entries: BTreeMap::new(),
        });
    };
    let mut all = Vec::new();
    let caps = lcm.exponents();
    let total: u64 = caps.iter().map(|&c| c as u64 + 1).product();
    for code in 0..total {
        let mut rem = code;
        let exps = caps
            .iter()
            .map(|&c| {
                let radix = c as u64 + 1;
                let e = (rem % radix) as u32;
                rem /= radix;
                e
            })
            .collect();
        all.push(Monomial::new(exps));
    }
    Ok(table_over_seq(ideal, all))
}

/// Regularity read directly off the Betti table:
/// `reg(I) = max{|a| - i : β_{i,a}(I) ≠ 0}`.
pub fn regularity_betti(ideal: &MonomialIdeal, config: &BettiOracleConfig) -> Result<u32> {
    if !ideal.is_proper_nonzero() {
        return Err(KernelError::NotProper);
    }
    let table = betti_table(ideal, config)?;
    Ok(table
        .regularity()
        .expect("a proper nonzero ideal has β_0 entries"))
}
