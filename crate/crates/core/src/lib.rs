//! The lcm analog of Pascal's triangle, exactly.
//!
//! The central object is
//!
//! ```text
//! [n k] = lcm(n, n−1, …, n−k+1) / lcm(1, 2, …, k)
//! ```
//!
//! a positive integer for all 0 ≤ k ≤ n that divides the binomial
//! coefficient C(n, k). This crate computes the triangle of these numbers
//! alongside Pascal's triangle ([`triangle`]), their prime structure
//! ([`arith`]: valuations by closed formula and by Legendre floor sums,
//! factorization, Ω), the exact periodicity of the ratio C(n, k)/[n k]
//! along columns ([`periods`]), and the structural consequences — diagonal
//! Ω bounds, the equality set, power-sum and lcm growth bounds
//! ([`analysis`]).
//!
//! Everything is exact bignum arithmetic; theorems (integrality,
//! divisibility, Ω bounds) are asserted at runtime rather than surfaced as
//! errors, while genuinely reachable misuse (k > n, zero where nonzero is
//! required, undersized scan horizons) comes back as [`Error`].

pub mod analysis;
pub mod arith;
mod error;
pub mod periods;
pub mod triangle;

/// Arbitrary-precision nonnegative integer used for all computed values.
pub type Natural = num_bigint::BigUint;

pub use error::{Error, Result};

pub use arith::{
    binomial, factorize, gcd, is_prime, lcm, lcm_binomial, lcm_range, omega, vp,
    vp_binomial_legendre, vp_lcm_binomial, Factorization,
};

pub use analysis::{
    check_lcm_upper_bound, check_power_sum_inequality, diagonal, equality_set, lcm_step,
    no_composition_law_witness, omega_diagonal_check, DiagonalEntry, EqualityRecord, LcmBoundCheck,
};

pub use periods::{
    default_horizon, exact_period, farhi_kane_period, g, minimal_period_bruteforce, ratio,
    ratio_via_g, verify_period, PeriodReport, RatioSequence,
};

pub use triangle::{rows, TriangleEntry};
