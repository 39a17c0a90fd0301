//! Castelnuovo–Mumford regularity of Borel-type monomial ideals.
//!
//! Three independent routes, which must agree:
//!
//! 1. **Sequential chain** ([`regularity_chain`]): iterate
//!    `I_{ℓ+1} = (I_ℓ : x_{n_ℓ}^∞)` with `n_ℓ = m(I_ℓ)` until the unit
//!    ideal. At each step restrict to `J_ℓ ⊂ K[x1..x_{n_ℓ}]` and measure the
//!    finite-length quotient `J_ℓ^sat/J_ℓ`; then
//!    `reg(I) = max_ℓ s(J_ℓ^sat/J_ℓ) + 1`.
//! 2. **Minimal stable truncation** ([`regularity_truncation`]): the least
//!    `e ≥ deg(I)` with `I_{≥e}` stable.
//! 3. **Betti oracle** ([`crate::betti::regularity_betti`]): the definition,
//!    via multigraded Betti numbers.
//!
//! The [`regularity`] dispatcher runs any of them, or all three with a hard
//! cross-check; on disagreement the oracle is treated as ground truth and the
//! whole comparison is serialized into the error.

use serde::Serialize;

use crate::betti::{self, BettiOracleConfig};
use crate::error::{KernelError, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::monomials_of_degree;
use crate::polynomial::IntPolynomial;
use crate::structure::{borel_type_failure, is_ass_chain, is_stable};

/// One step of the sequential chain.
#[derive(Debug, Clone)]
pub struct ChainStep {
    /// Step index `ℓ`, from 0.
    pub ell: usize,
    /// `I_ℓ`, in the full ambient ring.
    pub ideal: MonomialIdeal,
    /// `n_ℓ = m(I_ℓ)`.
    pub n_ell: usize,
    /// `J_ℓ`: the ideal generated by `G(I_ℓ)` inside `K[x1..x_{n_ℓ}]`.
    pub restricted: MonomialIdeal,
    /// `J_ℓ^sat`, the saturation of `J_ℓ` in its own ring.
    pub saturated: MonomialIdeal,
    /// The Hilbert series of the finite-length module `J_ℓ^sat/J_ℓ` — a
    /// polynomial; `s_ℓ` is its degree.
    pub quotient_hilbert: IntPolynomial,
    /// `s(J_ℓ^sat/J_ℓ)`: top degree of the quotient, `None` when it is zero.
    pub s_ell: Option<u32>,
}

/// The sequential chain `I = I_0 ⊂ I_1 ⊂ ⋯ ⊂ I_r = S` of a Borel-type
/// ideal; the final unit ideal is implicit (not stored as a step).
#[derive(Debug, Clone)]
pub struct SequentialChain {
    pub steps: Vec<ChainStep>,
}

impl SequentialChain {
    /// Chain length `r` (number of proper ideals in the chain).
    pub fn length(&self) -> usize {
        self.steps.len()
    }

    /// The `s_ℓ` values in step order.
    pub fn s_values(&self) -> Vec<Option<u32>> {
        self.steps.iter().map(|s| s.s_ell).collect()
    }

    /// `reg(I) = max_ℓ s_ℓ + 1`. Every genuine chain step has a nonzero
    /// quotient (see [`sequential_chain`]), so the max is over a non-empty
    /// set; the `deg(I)` fallback below is defensive and reported via
    /// [`SequentialChain::fallback_used`].
    pub fn regularity(&self) -> u32 {
        match self.steps.iter().filter_map(|s| s.s_ell).max() {
            Some(s) => s + 1,
            None => self.steps[0]
                .ideal
                .deg()
                .expect("chain steps are proper nonzero ideals"),
        }
    }

    /// True in the degenerate case where every `s_ℓ` was `None` and
    /// [`SequentialChain::regularity`] fell back to `deg(I)`.
    pub fn fallback_used(&self) -> bool {
        self.steps.iter().all(|s| s.s_ell.is_none())
    }
}

/// Constructs the sequential chain of a Borel-type ideal.
///
/// Rejects non-Borel-type inputs naming the smallest `j` where
/// `(I:x_j^∞) ≠ (I:(x1..xj)^∞)`, and the zero/unit ideals. Termination: each
/// saturation step zeroes the top variable of every generator, so `n_ℓ`
/// strictly decreases and `r ≤ n`.
pub fn sequential_chain(ideal: &MonomialIdeal) -> Result<SequentialChain> {
    if !ideal.is_proper_nonzero() {
        return Err(KernelError::NotProper);
    }
    if let Some(failing_var) = borel_type_failure(ideal) {
        return Err(KernelError::NotBorelType { failing_var });
    }
    let n = ideal.ambient();
    let mut steps = Vec::new();
    let mut current = ideal.clone();
    let mut prev_n_ell = n + 1;
    while !current.is_unit() {
        let n_ell = current
            .m_index()
            .expect("a proper nonzero ideal has a top variable");
        assert!(n_ell < prev_n_ell, "n_ℓ must strictly decrease");
        prev_n_ell = n_ell;
        let restricted = current
            .restrict_ring(n_ell)
            .expect("generators live below m(I) by definition");
        let saturated = restricted.saturate();
        let quotient_hilbert = sat_quotient_hilbert(&restricted)?;
        let s_ell = quotient_hilbert.degree().map(|d| d as u32);
        let next = current.saturate_var(n_ell);
        // The same step through the subring: I_{ℓ+1} is the extension of
        // J_ℓ^sat (the two constructions agree for Borel-type ideals).
        debug_assert_eq!(next, saturated.extend_ring(n));
        steps.push(ChainStep {
            ell: steps.len(),
            ideal: current,
            n_ell,
            restricted,
            saturated,
            quotient_hilbert,
            s_ell,
        });
        current = next;
    }
    assert!(steps.len() <= n, "chain length exceeds variable count");
    Ok(SequentialChain { steps })
}

/// Hilbert series of `J^sat/J` for `J` proper in `K[x1..xm]` — a polynomial
/// when the quotient has finite length, which is exactly when the division
/// below is exact.
///
/// `Hilb(J^sat/J) = Hilb(S/J) − Hilb(S/J^sat)
///                = (N_{S/J}(t) − N_{S/J^sat}(t)) / (1−t)^m`.
pub fn sat_quotient_hilbert(j: &MonomialIdeal) -> Result<IntPolynomial> {
    assert!(
        !j.is_unit(),
        "the saturation quotient needs a proper ideal"
    );
    let m = j.ambient();
    let diff = j
        .hilbert_numerator()
        .sub(&j.saturate().hilbert_numerator());
    let quotient = diff.divide_by_one_minus_t(m)?;
    #[cfg(debug_assertions)]
    {
        // Independent cross-check: enumerate the monomials of J^sat \ J
        // degree by degree, one past the Hilbert-determined top degree.
        let top = quotient.degree().map_or(1, |d| d + 2);
        let by_hilbert: Vec<i64> = (0..=top).map(|k| quotient.coefficient(k)).collect();
        debug_assert_eq!(
            quotient_dims_by_enumeration(j, top),
            by_hilbert,
            "Hilbert route and direct enumeration disagree on {j}"
        );
    }
    Ok(quotient)
}

/// `s(J^sat/J)`: the top nonvanishing degree of the quotient, `None` when
/// `J` is already saturated.
pub fn sat_quotient_top_degree(j: &MonomialIdeal) -> Result<Option<u32>> {
    Ok(sat_quotient_hilbert(j)?.degree().map(|d| d as u32))
}

/// Dimension of `(J^sat/J)_k` for `k = 0..=limit` by direct monomial
/// enumeration — the independent cross-check of the Hilbert-series route.
pub fn quotient_dims_by_enumeration(j: &MonomialIdeal, limit: usize) -> Vec<i64> {
    let sat = j.saturate();
    (0..=limit)
        .map(|k| {
            monomials_of_degree(j.ambient(), k as u32)
                .iter()
                .filter(|u| sat.contains(u) && !j.contains(u))
                .count() as i64
        })
        .collect()
}

/// Regularity by the sequential-chain formula
/// `reg(I) = max_ℓ s(J_ℓ^sat/J_ℓ) + 1`.
pub fn regularity_chain(ideal: &MonomialIdeal) -> Result<u32> {
    Ok(sequential_chain(ideal)?.regularity())
}

/// The degree ceiling `n·(deg(I)−1)+1` that bounds the regularity of a
/// Borel-type ideal.
pub fn regularity_ceiling(ideal: &MonomialIdeal) -> u32 {
    let n = ideal.ambient() as u32;
    let deg = ideal.deg().unwrap_or(0);
    n * deg.saturating_sub(1) + 1
}

/// Regularity as the least `e ≥ deg(I)` with `I_{≥e}` stable.
///
/// Applies to Borel-type ideals. An ideal with totally ordered `Ass(S/I)`
/// also satisfies the corollary behind this method, but only after
/// renumbering the variables into Borel position; that case is rejected
/// with a diagnostic saying so, and anything else fails the hypothesis
/// outright. The scan starts at `deg(I)` — the truncation corollary reads
/// the minimum over the degrees where "`I_{≥e}` stable ⇒ reg(I_{≥e}) = e"
/// applies, and `reg ≥ deg(I)` always — and is guaranteed to stop by the
/// ceiling `n·(deg(I)−1)+1`; exceeding it would contradict the bound, so it
/// is a hard error.
pub fn regularity_truncation(ideal: &MonomialIdeal) -> Result<u32> {
    Ok(truncation_scan(ideal)?.0)
}

fn truncation_scan(ideal: &MonomialIdeal) -> Result<(u32, u32, u32)> {
    if !ideal.is_proper_nonzero() {
        return Err(KernelError::NotProper);
    }
    if let Some(failing_var) = borel_type_failure(ideal) {
        // The corollary behind this method assumes the variables are already
        // numbered so that associated primes are initial segments — which is
        // precisely the Borel-type position. With Ass totally ordered a
        // renumbering into that position exists, but searching for it is out
        // of scope; the caller is told which case they are in.
        return Err(if is_ass_chain(ideal) {
            KernelError::RenumberingWouldApply { failing_var }
        } else {
            KernelError::TruncationHypothesisUnmet { failing_var }
        });
    }
    let start = ideal.deg().expect("nonzero ideal has generators");
    let ceiling = regularity_ceiling(ideal);
    for e in start..=ceiling {
        if is_stable(&ideal.truncate(e)) {
            return Ok((e, start, ceiling));
        }
    }
    Err(KernelError::TruncationBoundExceeded { ceiling })
}

/// Which regularity computation to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularityMethod {
    Chain,
    Truncation,
    Oracle,
    /// All three, with a hard agreement check.
    All,
}

/// Per-method evidence for the chain route.
#[derive(Debug, Clone, Serialize)]
pub struct ChainEvidence {
    pub regularity: u32,
    /// `s(J_ℓ^sat/J_ℓ)` per step.
    pub s_values: Vec<Option<u32>>,
    pub steps: Vec<ChainStepEvidence>,
    /// True when every `s_ℓ` was `None` and the value fell back to `deg(I)`.
    pub fallback_used: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainStepEvidence {
    pub ell: usize,
    pub n_ell: usize,
    pub ideal: String,
    pub restricted: String,
    pub saturated: String,
    /// Coefficients of the (polynomial) Hilbert series of `J_ℓ^sat/J_ℓ`.
    pub quotient_hilbert: Vec<i64>,
    pub s: Option<u32>,
}

/// Per-method evidence for the truncation route.
#[derive(Debug, Clone, Serialize)]
pub struct TruncationEvidence {
    pub regularity: u32,
    /// The minimal stable truncation degree (equals `regularity`).
    pub minimal_stable_degree: u32,
    pub scan_start: u32,
    pub ceiling: u32,
}

/// Per-method evidence for the Betti oracle.
#[derive(Debug, Clone, Serialize)]
pub struct OracleEvidence {
    pub regularity: u32,
    /// A Betti-table entry attaining the max: `reg = |a| − i`.
    pub witness_homological_index: usize,
    pub witness_multidegree: Vec<u32>,
    pub witness_total_degree: u32,
}

/// The dispatcher's result: the agreed value plus whatever evidence the
/// requested methods produced.
#[derive(Debug, Clone, Serialize)]
pub struct RegularityReport {
    pub value: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<ChainEvidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation: Option<TruncationEvidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleEvidence>,
}

fn chain_evidence(ideal: &MonomialIdeal) -> Result<ChainEvidence> {
    let chain = sequential_chain(ideal)?;
    Ok(ChainEvidence {
        regularity: chain.regularity(),
        s_values: chain.s_values(),
        fallback_used: chain.fallback_used(),
        steps: chain
            .steps
            .iter()
            .map(|s| ChainStepEvidence {
                ell: s.ell,
                n_ell: s.n_ell,
                ideal: s.ideal.to_string(),
                restricted: s.restricted.to_string(),
                saturated: s.saturated.to_string(),
                quotient_hilbert: s.quotient_hilbert.coefficients().to_vec(),
                s: s.s_ell,
            })
            .collect(),
    })
}

fn truncation_evidence(ideal: &MonomialIdeal) -> Result<TruncationEvidence> {
    let (e, start, ceiling) = truncation_scan(ideal)?;
    Ok(TruncationEvidence {
        regularity: e,
        minimal_stable_degree: e,
        scan_start: start,
        ceiling,
    })
}

fn oracle_evidence(ideal: &MonomialIdeal, config: &BettiOracleConfig) -> Result<OracleEvidence> {
    if !ideal.is_proper_nonzero() {
        return Err(KernelError::NotProper);
    }
    let table = betti::betti_table(ideal, config)?;
    let (i, a) = table
        .regularity_witness()
        .expect("a proper nonzero ideal has Betti entries");
    Ok(OracleEvidence {
        regularity: a.degree() - i as u32,
        witness_homological_index: i,
        witness_total_degree: a.degree(),
        witness_multidegree: a.exponents().to_vec(),
    })
}

/// Computes the regularity by the requested method(s), with per-method
/// evidence. `All` requires exact agreement of the three values; on
/// disagreement the error carries a JSON bundle of the full comparison, with
/// the Betti oracle flagged as ground truth (it is the definition).
pub fn regularity(ideal: &MonomialIdeal, method: RegularityMethod) -> Result<RegularityReport> {
    if !ideal.is_proper_nonzero() {
        return Err(KernelError::NotProper);
    }
    let config = BettiOracleConfig::default();
    match method {
        RegularityMethod::Chain => {
            let ev = chain_evidence(ideal)?;
            Ok(RegularityReport {
                value: ev.regularity,
                chain: Some(ev),
                truncation: None,
                oracle: None,
            })
        }
        RegularityMethod::Truncation => {
            let ev = truncation_evidence(ideal)?;
            Ok(RegularityReport {
                value: ev.regularity,
                chain: None,
                truncation: Some(ev),
                oracle: None,
            })
        }
        RegularityMethod::Oracle => {
            let ev = oracle_evidence(ideal, &config)?;
            Ok(RegularityReport {
                value: ev.regularity,
                chain: None,
                truncation: None,
                oracle: Some(ev),
            })
        }
        RegularityMethod::All => {
            let chain = chain_evidence(ideal)?;
            let truncation = truncation_evidence(ideal)?;
            let oracle = oracle_evidence(ideal, &config)?;
            if chain.regularity != oracle.regularity
                || truncation.regularity != oracle.regularity
            {
                let bundle = serde_json::json!({
                    "ground_truth": "oracle",
                    "oracle": oracle.regularity,
                    "chain": chain.regularity,
                    "truncation": truncation.regularity,
                    "n": ideal.ambient(),
                    "generators": ideal
                        .generators()
                        .iter()
                        .map(|g| g.to_string())
                        .collect::<Vec<_>>(),
                });
                return Err(KernelError::MethodDisagreement {
                    details: bundle.to_string(),
                });
            }
            Ok(RegularityReport {
                value: oracle.regularity,
                chain: Some(chain),
                truncation: Some(truncation),
                oracle: Some(oracle),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|e| Monomial::new(e.to_vec())))
    }

    fn worked_example() -> MonomialIdeal {
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
    fn chain_of_the_worked_example() {
        let chain = sequential_chain(&worked_example()).unwrap();
        assert_eq!(chain.length(), 3);
        let n_ells: Vec<usize> = chain.steps.iter().map(|s| s.n_ell).collect();
        assert_eq!(n_ells, vec![3, 2, 1]);
        assert_eq!(
            chain.steps[1].ideal,
            ideal(4, &[&[5, 0, 0, 0], &[1, 4, 0, 0]])
        );
        assert_eq!(chain.steps[2].ideal, ideal(4, &[&[1, 0, 0, 0]]));
        // s-values: the first two match the worked computation (7, 7); the
        // final step is J_2 = (x1) in K[x1] with J_2^sat = (1), whose
        // quotient K[x1]/(x1) = K lives in degree 0, so s_2 = 0 by the
        // defining formula s(M) = max{t : M_t ≠ 0}. (The same computation
        // via Hilbert series: (1−t)/(1−t) = 1, degree 0.)
        assert_eq!(chain.s_values(), vec![Some(7), Some(7), Some(0)]);
        assert_eq!(chain.regularity(), 8);
        assert!(!chain.fallback_used());
    }

    #[test]
    fn chain_of_an_artinian_ideal_is_one_step() {
        let chain = sequential_chain(&ideal(2, &[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(chain.length(), 1);
        assert_eq!(chain.steps[0].n_ell, 2);
        assert_eq!(chain.steps[0].saturated, MonomialIdeal::unit(2));
        // S/(x1^2, x2^2) has Hilbert function 1, 2, 1: s = 2, reg = 3.
        assert_eq!(
            chain.steps[0].quotient_hilbert,
            IntPolynomial::new(vec![1, 2, 1])
        );
        assert_eq!(chain.regularity(), 3);
    }

    #[test]
    fn chain_of_a_principal_prime() {
        let chain = sequential_chain(&ideal(3, &[&[1, 0, 0]])).unwrap();
        assert_eq!(chain.length(), 1);
        assert_eq!(chain.steps[0].n_ell, 1);
        assert_eq!(chain.steps[0].restricted, ideal(1, &[&[1]]));
        // J_0^sat = (1) in K[x1]; the quotient is K in degree 0.
        assert_eq!(chain.steps[0].saturated, MonomialIdeal::unit(1));
        assert_eq!(chain.s_values(), vec![Some(0)]);
        assert_eq!(chain.regularity(), 1);
    }

    #[test]
    fn chain_rejects_bad_inputs() {
        assert!(matches!(
            sequential_chain(&MonomialIdeal::unit(2)),
            Err(KernelError::NotProper)
        ));
        assert!(matches!(
            sequential_chain(&MonomialIdeal::zero(2)),
            Err(KernelError::NotProper)
        ));
        assert!(matches!(
            sequential_chain(&ideal(2, &[&[1, 1]])),
            Err(KernelError::NotBorelType { failing_var: 2 })
        ));
    }

    #[test]
    fn saturation_quotient_top_degrees() {
        // J_1 of the worked example.
        assert_eq!(
            sat_quotient_top_degree(&ideal(2, &[&[5, 0], &[1, 4]])).unwrap(),
            Some(7)
        );
        // J = (x1) in one variable: quotient is K, concentrated in degree 0.
        assert_eq!(
            sat_quotient_top_degree(&ideal(1, &[&[1]])).unwrap(),
            Some(0)
        );
        // Already saturated: (x1) in two variables.
        assert_eq!(sat_quotient_top_degree(&ideal(2, &[&[1, 0]])).unwrap(), None);
    }

    #[test]
    fn quotient_enumeration_matches_hilbert_route() {
        let j = ideal(2, &[&[5, 0], &[1, 4]]);
        let q = sat_quotient_hilbert(&j).unwrap();
        let dims = quotient_dims_by_enumeration(&j, 8);
        let expected: Vec<i64> = (0..=8).map(|k| q.coefficient(k)).collect();
        assert_eq!(dims, expected);
        assert_eq!(q.degree(), Some(7));
    }

    #[test]
    fn chain_regularity_values() {
        assert_eq!(regularity_chain(&worked_example()).unwrap(), 8);
        assert_eq!(regularity_chain(&ideal(3, &[&[1, 0, 0]])).unwrap(), 1);
        assert_eq!(regularity_chain(&ideal(2, &[&[1, 0]])).unwrap(), 1);
    }

    #[test]
    fn truncation_regularity_values() {
        assert_eq!(regularity_truncation(&worked_example()).unwrap(), 8);
        // A stable ideal: the minimal stable truncation is deg(I) itself.
        assert_eq!(
            regularity_truncation(&ideal(2, &[&[2, 0], &[1, 1], &[0, 3]])).unwrap(),
            3
        );
        assert_eq!(regularity_truncation(&ideal(2, &[&[1, 0]])).unwrap(), 1);
    }

    #[test]
    fn worked_example_truncations_around_the_threshold() {
        let i = worked_example();
        assert!(is_stable(&i.truncate(8)));
        assert!(!is_stable(&i.truncate(7)));
    }

    #[test]
    fn truncation_rejects_when_neither_hypothesis_holds() {
        // (x1*x2): not Borel type, and Ass = {(x1), (x2)} is not a chain.
        assert!(matches!(
            regularity_truncation(&ideal(2, &[&[1, 1]])),
            Err(KernelError::TruncationHypothesisUnmet { failing_var: 2 })
        ));
    }

    #[test]
    fn truncation_flags_renumbering_candidates() {
        // (x2^2) in 2 vars: Ass = {(x2)} is trivially a chain, but the prime
        // is not an initial segment — no truncation is ever stable as given
        // (every monomial of I keeps x2-exponent ≥ 2, while stability wants
        // moves into x1). Renumbering x2 ↔ x1 would fix it; the method says
        // so instead of scanning forever.
        let i = ideal(2, &[&[0, 2]]);
        assert!(borel_type_failure(&i).is_some());
        assert!(is_ass_chain(&i));
        assert!(matches!(
            regularity_truncation(&i),
            Err(KernelError::RenumberingWouldApply { failing_var: 2 })
        ));
    }

    #[test]
    fn ceiling_formula() {
        assert_eq!(regularity_ceiling(&worked_example()), 25);
        assert_eq!(regularity_ceiling(&ideal(2, &[&[1, 0]])), 1);
    }

    #[test]
    fn dispatcher_all_methods_agree_on_the_worked_example() {
        let report = regularity(&worked_example(), RegularityMethod::All).unwrap();
        assert_eq!(report.value, 8);
        let chain = report.chain.unwrap();
        assert_eq!(chain.s_values, vec![Some(7), Some(7), Some(0)]);
        let truncation = report.truncation.unwrap();
        assert_eq!(truncation.minimal_stable_degree, 8);
        let oracle = report.oracle.unwrap();
        assert_eq!(oracle.regularity, 8);
        assert_eq!(
            oracle.witness_total_degree - oracle.witness_homological_index as u32,
            8
        );
    }

    #[test]
    fn dispatcher_single_methods() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        for method in [
            RegularityMethod::Chain,
            RegularityMethod::Truncation,
            RegularityMethod::Oracle,
        ] {
            assert_eq!(regularity(&i, method).unwrap().value, 2, "{method:?}");
        }
        assert!(matches!(
            regularity(&MonomialIdeal::unit(2), RegularityMethod::All),
            Err(KernelError::NotProper)
        ));
    }
}
