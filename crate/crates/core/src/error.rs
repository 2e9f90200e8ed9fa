use crate::Natural;

/// Errors produced by the library's fallible operations.
///
/// Domain facts that are theorems (integrality of [n k], divisibility of
/// C(n, k) by [n k], Ω bounds on diagonals) are asserted, not returned as
/// errors: hitting one would be a bug, not a reachable condition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// `lcm_range(lo, hi)` with `lo = 0`: lcm over a range containing 0 is
    /// undefined here (and would be 0 under the usual convention).
    #[error("lcm over [{lo}, {hi}] is undefined: range contains 0")]
    RangeContainsZero { lo: u64, hi: u64 },

    /// An entry (n, k) outside the triangle, i.e. k > n.
    #[error("k = {k} exceeds n = {n}: entry lies outside the triangle")]
    KExceedsN { n: u64, k: u64 },

    /// A p-adic valuation was requested at a non-prime p.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// An argument that must be nonzero was zero.
    #[error("argument must be nonzero")]
    ZeroInput,

    /// `ratio_via_g` needs k ≥ 1 (it evaluates g at index k − 1).
    #[error("k must be nonzero")]
    ZeroK,

    /// A scan horizon too small to certify the requested period.
    #[error("horizon {horizon} too small for k = {k}: need at least {required}")]
    HorizonTooSmall {
        k: u64,
        horizon: u64,
        required: Natural,
    },

    /// A rational parameter with denominator 0.
    #[error("denominator must be nonzero")]
    ZeroDenominator,
}

pub type Result<T> = std::result::Result<T, Error>;
