//! Error type shared across the kernel.

use thiserror::Error;

/// Errors surfaced by kernel operations.
///
/// Programmer errors (ambient mismatches inside a single computation, division
/// by a non-divisor) are panics, not variants — they indicate misuse of the
/// API, not bad user data.
#[derive(Debug, Error)]
pub enum KernelError {
    /// The chain construction needs a Borel-type input and the check failed.
    #[error("ideal is not of Borel type: saturation by x{failing_var} alone differs from saturation by (x1..x{failing_var})")]
    NotBorelType { failing_var: usize },

    /// An operation that needs a proper nonzero ideal was given `(0)` or `(1)`.
    #[error("ideal must be a proper nonzero monomial ideal")]
    NotProper,

    /// Polynomial division by `(1-t)^m` left a remainder where exactness was
    /// required; indicates a module that is not of finite length.
    #[error("division by (1-t)^{power} is inexact: quotient module has infinite length")]
    InexactDivision { power: usize },

    /// The stable-truncation method applies to Borel-type ideals and to
    /// ideals whose associated primes form a chain; this input is neither.
    #[error("regularity by stable truncation needs a Borel-type ideal (fails at x{failing_var}) or a totally ordered Ass(S/I); this ideal is neither")]
    TruncationHypothesisUnmet { failing_var: usize },

    /// Not Borel type as given, but `Ass(S/I)` is totally ordered, so some
    /// renumbering of the variables would make it Borel type. Automatic
    /// renumbering is out of scope; the user is told instead.
    #[error("ideal is not of Borel type as given (fails at x{failing_var}), but Ass(S/I) is totally ordered by inclusion: renumber the variables into Borel position and retry")]
    RenumberingWouldApply { failing_var: usize },

    /// The stable-truncation scan exceeded its degree ceiling without finding
    /// a stable truncation.
    #[error("no stable truncation found up to degree {ceiling}")]
    TruncationBoundExceeded { ceiling: u32 },

    /// A Betti-oracle instance exceeded its configured scale guard.
    #[error("Betti oracle scale guard exceeded: {what} = {actual} > limit {limit}")]
    ScaleGuardExceeded {
        what: &'static str,
        actual: u64,
        limit: u64,
    },

    /// Two regularity methods disagreed on the same input; the payload is a
    /// JSON bundle with the per-method values and the input generators.
    #[error("regularity methods disagree: {details}")]
    MethodDisagreement { details: String },

    /// A divisibility sequence was rejected (must be 1 = d_0 | d_1 | ... | d_s).
    #[error("invalid divisibility sequence: {reason}")]
    InvalidDSequence { reason: String },

    /// A restriction to the first `m` variables would drop nonzero exponents.
    #[error("cannot restrict to first {m} variables: generator involves x{failing_var}")]
    RestrictOutOfRange { m: usize, failing_var: usize },
}

/// Kernel-wide result alias.
pub type Result<T> = std::result::Result<T, KernelError>;
