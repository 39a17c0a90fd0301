//! Structural classifiers for monomial ideals.
//!
//! Three nested classes, each checked by exchange moves on minimal
//! generators:
//!
//! - **strongly stable**: `x_j·u/x_i ∈ I` whenever `j < i` and `x_i | u`;
//! - **stable**: `x_i·u/x_{m(u)} ∈ I` for `i < m(u)`;
//! - **Borel type**: `(I : x_j^∞) = (I : (x1..xj)^∞)` for every `j` — tested
//!   both by that saturation identity and by the equivalent exchange-with-
//!   powers condition.
//!
//! The class chain is strongly stable ⇒ stable ⇒ Borel type. The module also
//! computes associated primes of `S/I` by brute-force witness enumeration and
//! checks whether they form a chain under inclusion; for Borel-type ideals
//! they always do, and each is an initial segment `(x1,…,xr)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A monomial prime `(x_{i1},…,x_{ik})`, stored as its sorted variable
/// support.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeSupport {
    vars: Vec<usize>,
}

impl PrimeSupport {
    /// Builds a prime support from variable indices; must be non-empty.
    pub fn new(mut vars: Vec<usize>) -> Self {
        assert!(!vars.is_empty(), "a monomial prime has at least one variable");
        vars.sort_unstable();
        vars.dedup();
        assert!(vars[0] >= 1, "variables are 1-based");
        Self { vars }
    }

    /// Sorted 1-based variable indices.
    pub fn variables(&self) -> &[usize] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        false // by construction
    }

    /// Set inclusion of supports (= reverse inclusion of the primes as sets
    /// of monomials; we follow the support order throughout).
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.vars.iter().all(|v| other.vars.contains(v))
    }

    /// True iff the support is `{1, 2, …, r}` for some `r`.
    pub fn is_initial_segment(&self) -> bool {
        self.vars.iter().enumerate().all(|(k, &v)| v == k + 1)
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.vars.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{v}")?;
        }
        write!(f, ")")
    }
}

/// Stability: for every minimal generator `g` and every `i < m(g)`,
/// `x_i · g / x_{m(g)} ∈ I`. Checking minimal generators suffices: an
/// arbitrary `u ∈ I` is `g·w`, and the exchange on `u` reduces to one on `g`
/// or to divisibility by the same generator. Zero and unit ideals are stable
/// by convention.
pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    let n = ideal.ambient();
    ideal.generators().iter().all(|g| {
        let Some(m) = g.m_index() else {
            return true; // the generator 1 (unit ideal)
        };
        let stem = g.divide_exact(&Monomial::variable(m, n));
        (1..m).all(|i| ideal.contains(&stem.multiply(&Monomial::variable(i, n))))
    })
}

/// Strong stability (the characteristic-zero Borel-fixed property): for every
/// minimal generator `g`, every `i` with `ν_i(g) > 0`, every `j < i`,
/// `x_j · g / x_i ∈ I`. Zero and unit ideals are strongly stable by
/// convention.
pub fn is_strongly_stable(ideal: &MonomialIdeal) -> bool {
    let n = ideal.ambient();
    ideal.generators().iter().all(|g| {
        (1..=n).all(|i| {
            if g.exponent(i) == 0 {
                return true;
            }
            let stem = g.divide_exact(&Monomial::variable(i, n));
            (1..i).all(|j| ideal.contains(&stem.multiply(&Monomial::variable(j, n))))
        })
    })
}

/// Borel type via the defining saturation identity:
/// `(I : x_j^∞) = (I : (x1,…,xj)^∞)` for all `j = 1..n`.
pub fn is_borel_type_saturation(ideal: &MonomialIdeal) -> bool {
    (1..=ideal.ambient()).all(|j| ideal.saturate_var(j) == ideal.saturate_prefix(j))
}

/// Borel type via the exchange-with-powers characterization: for every
/// minimal generator `g`, every `i` with `q := ν_i(g) > 0` and every `j < i`,
/// some power `x_j^t · g / x_i^q` lies in `I`. The unbounded `t`-search is a
/// saturation membership: such a `t` exists iff `g / x_i^q ∈ (I : x_j^∞)`.
pub fn is_borel_type_exchange(ideal: &MonomialIdeal) -> bool {
    let n = ideal.ambient();
    // (I : x_j^∞) for each j, computed once.
    let saturations: Vec<MonomialIdeal> = (1..=n).map(|j| ideal.saturate_var(j)).collect();
    ideal.generators().iter().all(|g| {
        (2..=n).all(|i| {
            let q = g.exponent(i);
            if q == 0 {
                return true;
            }
            let stem = g.divide_exact(&Monomial::variable_power(i, q, n));
            (1..i).all(|j| saturations[j - 1].contains(&stem))
        })
    })
}

/// Borel type. Answers with the saturation identity; in debug builds the
/// exchange characterization is recomputed and must agree.
pub fn is_borel_type(ideal: &MonomialIdeal) -> bool {
    let verdict = is_borel_type_saturation(ideal);
    debug_assert_eq!(
        verdict,
        is_borel_type_exchange(ideal),
        "Borel-type characterizations disagree on {ideal}"
    );
    verdict
}

/// Smallest `j` violating the Borel-type saturation identity, if any; feeds
/// error diagnostics for chain construction.
pub fn borel_type_failure(ideal: &MonomialIdeal) -> Option<usize> {
    (1..=ideal.ambient()).find(|&j| ideal.saturate_var(j) != ideal.saturate_prefix(j))
}

/// `Ass(S/I)` by witness enumeration, parallelized over candidate witnesses.
///
/// Every associated prime of `S/I` is `(I : u)` for a monomial `u ∉ I` whose
/// exponents are bounded componentwise by the lcm of `G(I)` (beyond that cap,
/// dropping the excess does not change the colon). The enumeration scans all
/// candidates under the cap and keeps the colon ideals that are generated by
/// single variables.
pub fn ass_primes(ideal: &MonomialIdeal) -> Vec<PrimeSupport> {
    #[cfg(feature = "parallel")]
    {
        let (caps, total) = witness_space(ideal);
        let set: BTreeSet<PrimeSupport> = (0..total)
            .into_par_iter()
            .filter_map(|code| witness_prime(ideal, &decode_witness(code, &caps)))
            .collect();
        set.into_iter().collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ass_primes_seq(ideal)
    }
}

/// Sequential form of [`ass_primes`]; always available, identical output.
pub fn ass_primes_seq(ideal: &MonomialIdeal) -> Vec<PrimeSupport> {
    let (caps, total) = witness_space(ideal);
    let mut set = BTreeSet::new();
    for code in 0..total {
        if let Some(p) = witness_prime(ideal, &decode_witness(code, &caps)) {
            set.insert(p);
        }
    }
    set.into_iter().collect()
}

/// Exponent caps (the lcm of the generators) and the size of the witness
/// search space.
fn witness_space(ideal: &MonomialIdeal) -> (Vec<u32>, u64) {
    assert!(
        ideal.is_proper_nonzero(),
        "associated primes need a proper nonzero ideal"
    );
    let caps = ideal
        .lcm_of_generators()
        .expect("nonzero ideal has generators")
        .exponents()
        .to_vec();
    let total = caps.iter().map(|&c| c as u64 + 1).product();
    (caps, total)
}

/// The `code`-th candidate witness in mixed-radix order over the caps.
fn decode_witness(code: u64, caps: &[u32]) -> Monomial {
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
    Monomial::new(exps)
}

/// The prime `(I : u)` when `u` is a genuine witness: `u ∉ I` and the colon
/// is generated by single variables.
fn witness_prime(ideal: &MonomialIdeal, u: &Monomial) -> Option<PrimeSupport> {
    if ideal.contains(u) {
        return None;
    }
    let colon = ideal.colon_monomial(u);
    if colon.generators().iter().all(|g| g.degree() == 1) && !colon.is_zero() {
        let vars = colon
            .generators()
            .iter()
            .map(|g| g.m_index().expect("degree-1 generator"))
            .collect();
        Some(PrimeSupport::new(vars))
    } else {
        None
    }
}

/// True iff `Ass(S/I)` is totally ordered under inclusion. Sorting by size
/// and checking adjacent inclusions suffices (inclusion is transitive, and
/// two incomparable sets of equal size fail the adjacent check).
pub fn is_ass_chain(ideal: &MonomialIdeal) -> bool {
    let mut primes = ass_primes(ideal);
    primes.sort_by_key(PrimeSupport::len);
    primes
        .windows(2)
        .all(|pair| pair[0].is_subset_of(&pair[1]))
}
