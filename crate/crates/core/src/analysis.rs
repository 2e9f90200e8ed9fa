//! Structural facts around the triangle: lcm jumps, diagonals and their
//! Ω bound, the set of cells where [n k] = C(n, k), and the growth bounds
//! that fall out of the power-sum inequality.

use num_traits::{One, Zero};

use crate::arith::{self, exact_div};
use crate::error::{Error, Result};
use crate::triangle;
use crate::Natural;

/// lcm(1, …, n+1) / lcm(1, …, n): equal to p when n + 1 = p^m is a prime
/// power, and 1 otherwise.
///
/// Computed from the prime-power test, then asserted against the actual
/// lcm quotient so the two routes check each other on every call.
pub fn lcm_step(n: u64) -> Natural {
    let m = n + 1;
    let step = {
        let f = arith::factorize(&Natural::from(m)).expect("m >= 1");
        match f.factors() {
            [(p, _)] => p.clone(),
            _ => Natural::one(), // m = 1 or m has two or more distinct primes
        }
    };
    let quotient = exact_div(
        &arith::lcm_range(1, m).expect("lo = 1"),
        &arith::lcm_range(1, n).expect("lo = 1"),
    );
    assert_eq!(step, quotient, "lcm step mismatch at n = {n}");
    step
}

/// One entry of the diagonal D_k: position n carries the value
/// [n+k over n] = lcm(k+1, …, k+n) / lcm(1, …, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalEntry {
    pub k: u64,
    pub n: u64,
    pub value: Natural,
    /// Ω(value): prime factors counted with multiplicity. Always ≤ k.
    pub omega: u64,
}

/// The first `count` entries (n = 0..count) of diagonal D_k.
///
/// Every entry's Ω ≤ k bound is asserted; it is a theorem, so a violation
/// is a bug. Entries are built with rolling lcms for both the numerator
/// range and the denominator range.
pub fn diagonal(k: u64, count: u64) -> Vec<DiagonalEntry> {
    let mut out = Vec::with_capacity(count as usize);
    let mut num = Natural::one(); // lcm(k+1, …, k+n)
    let mut den = Natural::one(); // lcm(1, …, n)
    for n in 0..count {
        if n > 0 {
            num = arith::lcm(&num, &Natural::from(k + n));
            den = arith::lcm(&den, &Natural::from(n));
        }
        let value = exact_div(&num, &den);
        let omega = arith::omega(&value).expect("diagonal values are positive");
        assert!(
            omega <= k,
            "omega bound violated on D_{k} at n = {n}: Ω({value}) = {omega}"
        );
        out.push(DiagonalEntry { k, n, value, omega });
    }
    out
}

/// Check Ω(d) ≤ k for the first `count` entries of D_k, without asserting —
/// returns false on the first violation instead, so callers can report.
pub fn omega_diagonal_check(k: u64, count: u64) -> bool {
    let mut num = Natural::one();
    let mut den = Natural::one();
    for n in 0..count {
        if n > 0 {
            num = arith::lcm(&num, &Natural::from(k + n));
            den = arith::lcm(&den, &Natural::from(n));
        }
        let value = exact_div(&num, &den);
        match arith::omega(&value) {
            Ok(omega) if omega <= k => {}
            _ => return false,
        }
    }
    true
}

/// A triangle cell where [n k] = C(n, k).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EqualityRecord {
    pub n: u64,
    pub k: u64,
}

/// All cells with [n k] = C(n, k) for 0 ≤ k ≤ n ≤ max_n, in row-major order.
pub fn equality_set(max_n: u64) -> Vec<EqualityRecord> {
    let mut out = Vec::new();
    for row in triangle::rows(max_n + 1) {
        for e in row {
            if !e.differs {
                out.push(EqualityRecord { n: e.n, k: e.k });
            }
        }
    }
    out
}

/// Row-n power-sum inequality at x = x_num / x_den ≥ 0:
///
/// Σ_k [n k] x^k ≤ (1 + x)^n
///
/// Checked exactly in integers by multiplying through by x_den^n:
/// Σ_k [n k]·x_num^k·x_den^(n−k) ≤ (x_num + x_den)^n.
/// Errors with `ZeroDenominator` when x_den = 0.
pub fn check_power_sum_inequality(n: u64, x_num: u64, x_den: u64) -> Result<bool> {
    if x_den == 0 {
        return Err(Error::ZeroDenominator);
    }
    let p = Natural::from(x_num);
    let q = Natural::from(x_den);

    // q_pows[j] = q^j
    let mut q_pows = Vec::with_capacity(n as usize + 1);
    q_pows.push(Natural::one());
    for _ in 0..n {
        q_pows.push(q_pows.last().unwrap() * &q);
    }

    let mut lhs = Natural::zero();
    let mut p_pow = Natural::one();
    let mut num = Natural::one(); // lcm(n−k+1, …, n)
    let mut den = Natural::one(); // lcm(1, …, k)
    for k in 0..=n {
        if k > 0 {
            num = arith::lcm(&num, &Natural::from(n - k + 1));
            den = arith::lcm(&den, &Natural::from(k));
            p_pow *= &p;
        }
        let lcm_binom = exact_div(&num, &den);
        lhs += lcm_binom * &p_pow * &q_pows[(n - k) as usize];
    }

    let rhs = (p + q).pow(u32::try_from(n).expect("n fits u32"));
    Ok(lhs <= rhs)
}

/// Result of checking lcm(1, …, n) against its growth bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmBoundCheck {
    pub n: u64,
    /// lcm(1, …, n)
    pub lcm: Natural,
    /// n·4^n
    pub bound: Natural,
    /// lcm(1, …, n) ≤ n·4^n
    pub holds: bool,
    /// lcm(1, …, n) ≤ 2^n · lcm(1, …, ⌈n/2⌉) — the halving step the main
    /// bound bootstraps from.
    pub halving_holds: bool,
}

/// Check lcm(1, …, n) ≤ n·4^n and the halving inequality it rests on.
///
/// Errors with `ZeroInput` when n = 0 (the bound is stated for n ≥ 1 and is
/// false at 0).
pub fn check_lcm_upper_bound(n: u64) -> Result<LcmBoundCheck> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let l = arith::lcm_range(1, n)?;
    let bound = Natural::from(n) * Natural::from(4u32).pow(u32::try_from(n).expect("n fits u32"));
    let holds = l <= bound;
    let half = arith::lcm_range(1, n.div_ceil(2))?;
    let halving_holds = l <= (Natural::one() << usize::try_from(n).expect("n fits usize")) * half;
    Ok(LcmBoundCheck {
        n,
        lcm: l,
        bound,
        holds,
        halving_holds,
    })
}

/// A pair of argument triples on which any would-be composition law fails:
/// both map the first two coordinates (2, 1) to different third coordinates.
///
/// ([2 1], [2 2], [3 2]) = (2, 1, 3) and ([4 3], [4 4], [5 4]) = (2, 1, 5),
/// so no function of ([n k], [n k+1]) can produce [n+1 k+1].
pub fn no_composition_law_witness() -> ((Natural, Natural, Natural), (Natural, Natural, Natural)) {
    let entry = |n, k| arith::lcm_binomial(n, k).expect("k <= n");
    (
        (entry(2, 1), entry(2, 2), entry(3, 2)),
        (entry(4, 3), entry(4, 4), entry(5, 4)),
    )
}
