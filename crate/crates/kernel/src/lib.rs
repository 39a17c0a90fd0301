//! Classification and Castelnuovo–Mumford regularity of monomial ideals.
//!
//! The kernel works with monomial ideals through their minimal generator
//! sets and provides:
//!
//! - the ideal algebra: sums, products, intersections, colons, saturations,
//!   truncations, ring extension/restriction ([`ideal`]);
//! - structural classifiers: stable, strongly stable, Borel type, associated
//!   primes ([`structure`]);
//! - three independent regularity computations — the sequential-chain
//!   formula, the minimal stable truncation, and a multigraded Betti oracle —
//!   which cross-check each other ([`regularity`], [`betti`]);
//! - the d-fixed/D-fixed machinery with its closed-form regularity
//!   ([`dfixed`]).
//!
//! Everything is exact integer arithmetic; there is no floating point in the
//! kernel. All types are immutable values, so every operation is safe to use
//! from concurrent contexts, and the heavier searches (Betti tables,
//! associated-prime enumeration) run data-parallel when the `parallel`
//! feature (default) is enabled, with sequential fallbacks always available.

pub mod betti;
pub mod dfixed;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod polynomial;
pub mod regularity;
pub mod structure;

pub use betti::{
    betti_table, betti_table_exhaustive, betti_table_seq, lcm_lattice, regularity_betti,
    upper_koszul, BettiOracleConfig, BettiTable, SimplicialComplex,
};
pub use dfixed::{
    d_decompose, d_leq, dfixed_reg_bound, dfixed_sum, frobenius_power, is_d_fixed,
    pardue_regularity, principal_dfixed, DDecomposition, DSequence, PrincipalSpec, SpecFactor,
};
pub use error::{KernelError, Result};
pub use ideal::MonomialIdeal;
pub use monomial::{monomials_of_degree, Monomial};
pub use polynomial::IntPolynomial;
pub use regularity::{
    regularity, regularity_ceiling, regularity_chain, regularity_truncation, sat_quotient_hilbert,
    sat_quotient_top_degree, sequential_chain, ChainStep, RegularityMethod, RegularityReport,
    SequentialChain,
};
pub use structure::{
    ass_primes, ass_primes_seq, is_ass_chain, is_borel_type, is_borel_type_exchange,
    is_borel_type_saturation, is_stable, is_strongly_stable, PrimeSupport,
};
