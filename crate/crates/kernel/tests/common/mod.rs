//! Deterministic fixture corpus shared by the integration suites.
//!
//! Everything is generated from fixed ChaCha8 seeds, so every run of the
//! suite sees the same ideals. Degree caps are chosen per d-sequence so
//! that fixture regularities stay small enough for the truncation scan and
//! the Betti oracle to be exercised in seconds, not minutes.

#![allow(dead_code)] // each integration target uses a different slice of this

use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use borel_kernel::{DSequence, Monomial, MonomialIdeal, PrincipalSpec};

/// The d-sequences every randomized suite draws from.
pub fn dseq_test_set() -> Vec<DSequence> {
    [vec![1, 2], vec![1, 3], vec![1, 2, 4], vec![1, 3, 9]]
        .into_iter()
        .map(|v| DSequence::new(v).expect("test set sequences are valid"))
        .collect()
}

/// A seeded generator; `salt` separates the streams of different suites.
pub fn corpus_rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x00b0_8e17_0000_0000 ^ salt)
}

/// Degree cap that keeps `reg(⟨u⟩_d)` small enough for exhaustive
/// cross-checking (large top entries amplify the Pardue bound).
fn degree_cap(d: &DSequence) -> u32 {
    if *d.entries().last().unwrap() >= 9 {
        6
    } else {
        8
    }
}

/// A random monomial of exactly `degree` supported on `vars` (1-based).
fn random_monomial_on(rng: &mut ChaCha8Rng, n: usize, vars: &[usize], degree: u32) -> Monomial {
    let mut exps = vec![0u32; n];
    for _ in 0..degree {
        exps[vars.choose(rng).expect("non-empty support") - 1] += 1;
    }
    Monomial::new(exps)
}

/// A random principal d-fixed spec in `n` variables. With `allow_x1` the
/// generator may carry an inert `x1` factor; otherwise `ν_1(u) = 0`.
pub fn random_spec(rng: &mut ChaCha8Rng, n: usize, allow_x1: bool) -> PrincipalSpec {
    let d = dseq_test_set()[rng.gen_range(0..4)].clone();
    let cap = degree_cap(&d);
    let start = if allow_x1 { 1 } else { 2 };
    let vars: Vec<usize> = (start..=n).collect();
    let degree = rng.gen_range(1..=cap);
    let u = random_monomial_on(rng, n, &vars, degree);
    PrincipalSpec::new(u, d)
}

/// `count` specs with `ν_1 = 0` (so the Pardue value is exactly
/// `max_q D_q`), ambient 2–4, degrees within the per-d caps.
pub fn principal_specs(count: usize) -> Vec<PrincipalSpec> {
    let mut rng = corpus_rng(0x51);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=4);
            random_spec(&mut rng, n, false)
        })
        .collect()
}

/// A D-fixed family: 1–3 principal specs sharing one ambient ring.
pub fn random_family(rng: &mut ChaCha8Rng, n: usize) -> Vec<PrincipalSpec> {
    let count = rng.gen_range(1..=3);
    (0..count).map(|_| random_spec(rng, n, true)).collect()
}

/// `count` D-fixed families (the summand lists, not yet summed).
pub fn dfixed_families(count: usize) -> Vec<Vec<PrincipalSpec>> {
    let mut rng = corpus_rng(0xfa);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=4);
            random_family(&mut rng, n)
        })
        .collect()
}

/// `count` Borel-type ideals: sums of principal d-fixed ideals, including
/// strongly stable ones (`d = (1)` summands give strongly-stable closures).
/// Every output is D-fixed by construction, hence of Borel type.
pub fn borel_fixtures(count: usize) -> Vec<MonomialIdeal> {
    let mut rng = corpus_rng(0xb0);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=4);
            let mut summands = random_family(&mut rng, n);
            if rng.gen_bool(0.4) {
                // Mix in a strongly-stable closure summand.
                let vars: Vec<usize> = (1..=n).collect();
                let degree = rng.gen_range(1..=6);
                let u = random_monomial_on(&mut rng, n, &vars, degree);
                summands.push(PrincipalSpec::new(u, DSequence::trivial()));
            }
            borel_kernel::dfixed_sum(&summands)
        })
        .collect()
}

/// A corpus entry with its regularity precomputed by both closed-form
/// methods.
pub struct Fixture {
    pub ideal: MonomialIdeal,
    pub chain_reg: u32,
    pub truncation_reg: u32,
}

/// The shared Borel-type corpus (220 fixtures), with chain and truncation
/// regularities computed once per test binary.
pub fn borel_corpus() -> &'static [Fixture] {
    static CORPUS: OnceLock<Vec<Fixture>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        borel_fixtures(220)
            .into_iter()
            .map(|ideal| {
                let chain_reg = borel_kernel::regularity_chain(&ideal)
                    .unwrap_or_else(|e| panic!("chain failed on {ideal}: {e}"));
                let truncation_reg = borel_kernel::regularity_truncation(&ideal)
                    .unwrap_or_else(|e| panic!("truncation failed on {ideal}: {e}"));
                Fixture {
                    ideal,
                    chain_reg,
                    truncation_reg,
                }
            })
            .collect()
    })
}

/// Oracle-scale filter: small enough for the brute-force Betti oracle.
pub fn oracle_scale(ideal: &MonomialIdeal) -> bool {
    ideal.ambient() <= 4
        && ideal
            .lcm_of_generators()
            .map(|l| l.degree() <= 20)
            .unwrap_or(false)
}

/// A random monomial of degree 1–4 in `n` variables (any support).
pub fn random_colon_monomial(rng: &mut ChaCha8Rng, n: usize) -> Monomial {
    let vars: Vec<usize> = (1..=n).collect();
    let degree = rng.gen_range(1..=4);
    random_monomial_on(rng, n, &vars, degree)
}
