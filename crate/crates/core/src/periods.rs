//! Periodicity of the ratio C(n, k) / [n k] along a column.
//!
//! For fixed k the ratio sequence is periodic in n with an exact period
//! that factors over the primes below k; this module computes that period
//! two independent ways (closed-form prime profile vs. brute-force scan of
//! the actual ratios) so each can certify the other.

use num_traits::{One, ToPrimitive};

use crate::arith::{self, exact_div, is_prime, vp_u64};
use crate::error::{Error, Result};
use crate::Natural;

/// g_k(n) = n(n+1)⋯(n+k) / lcm(n, n+1, …, n+k), an integer for n ≥ 1.
///
/// Errors with `ZeroInput` when n = 0 (the range would contain 0).
pub fn g(k: u64, n: u64) -> Result<Natural> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let hi = n.checked_add(k).expect("range end n + k overflows u64");
    let mut product = Natural::one();
    for v in n..=hi {
        product *= Natural::from(v);
    }
    let l = arith::lcm_range(n, hi)?;
    Ok(exact_div(&product, &l))
}

/// The ratio C(n, k) / [n k], always a positive integer.
///
/// Errors with `KExceedsN` when k > n.
pub fn ratio(n: u64, k: u64) -> Result<Natural> {
    let binom = arith::binomial(n, k)?;
    let lb = arith::lcm_binomial(n, k)?;
    Ok(exact_div(&binom, &lb))
}

/// The same ratio computed through g instead of through the binomials:
///
/// C(n, k) / [n k] = g_{k−1}(n − k + 1) / g_{k−1}(1)
///
/// Independent route used to cross-check `ratio`. Errors with `ZeroK` when
/// k = 0 and `KExceedsN` when k > n.
pub fn ratio_via_g(n: u64, k: u64) -> Result<Natural> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    let num = g(k - 1, n - k + 1)?;
    let den = g(k - 1, 1)?;
    Ok(exact_div(&num, &den))
}

/// Largest e ≥ 0 with p^e ≤ m, i.e. max_{1 ≤ i ≤ m} v_p(i) (0 when m = 0).
fn max_vp_upto(p: u64, m: u64) -> u32 {
    let mut e = 0u32;
    let mut q = p;
    while q <= m {
        e += 1;
        q = match q.checked_mul(p) {
            Some(next) => next,
            None => break,
        };
    }
    e
}

/// The closed-form exact period of a column, plus its certification state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub k: u64,
    /// T_k = ∏_{p prime, p < k} p^{α_p}
    pub exact_period: Natural,
    /// (p, α_p) for every prime p < k, zero exponents included.
    pub prime_exponents: Vec<(u64, u32)>,
    /// Whether a brute-force scan has confirmed T_k as the minimal period.
    pub bruteforce_confirmed: bool,
    /// Horizon of the confirming scan (0 until one has run).
    pub horizon: u64,
}

/// Exact period T_k of the column-k ratio sequence:
///
/// T_k = ∏_{p prime, p < k} p^{α_p},
/// α_p = 0 if v_p(k) ≥ max_{1 ≤ i < k} v_p(i), else that max.
///
/// T_0 = T_1 = T_2 = 1 (empty product). The report starts unconfirmed; call
/// `confirm_bruteforce` to certify against an actual scan.
pub fn exact_period(k: u64) -> PeriodReport {
    let mut prime_exponents = Vec::new();
    let mut t = Natural::one();
    for p in 2..k {
        if !is_prime(p) {
            continue;
        }
        let e = max_vp_upto(p, k - 1);
        let alpha = if vp_u64(k, p) >= u64::from(e) { 0 } else { e };
        prime_exponents.push((p, alpha));
        if alpha > 0 {
            t *= Natural::from(p).pow(alpha);
        }
    }
    PeriodReport {
        k,
        exact_period: t,
        prime_exponents,
        bruteforce_confirmed: false,
        horizon: 0,
    }
}

/// Exact period P_k of the sequence n ↦ g_k(n):
///
/// P_k = ∏_{p prime, p ≤ k} p^{β_p},
/// β_p = 0 if v_p(k + 1) ≥ max_{1 ≤ i ≤ k} v_p(i), else that max.
///
/// Kept deliberately separate from `exact_period` so the linkage
/// T_k = P_{k−1} is a real cross-check, not an identity of one code path.
pub fn farhi_kane_period(k: u64) -> Natural {
    let anchor = k.checked_add(1).expect("k + 1 overflows u64");
    let mut t = Natural::one();
    for p in 2..=k {
        if !is_prime(p) {
            continue;
        }
        let e = max_vp_upto(p, k);
        let beta = if vp_u64(anchor, p) >= u64::from(e) {
            0
        } else {
            e
        };
        if beta > 0 {
            t *= Natural::from(p).pow(beta);
        }
    }
    t
}

/// The scan horizon k + 4·lcm(1, …, max(k−1, 1)) that certifies minimality
/// (four full periods beyond the column start, since T_k divides
/// lcm(1, …, k−1)). `None` when it does not fit in u64.
pub fn default_horizon(k: u64) -> Option<u64> {
    let m = k.saturating_sub(1).max(1);
    let l = arith::lcm_range(1, m).expect("m >= 1").to_u64()?;
    l.checked_mul(4)?.checked_add(k)
}

/// The ratio sequence of column k: values C(n, k) / [n k] for consecutive n
/// starting at n = k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioSequence {
    pub k: u64,
    /// First n covered (always k).
    pub start_n: u64,
    /// values[i] is the ratio at n = start_n + i.
    pub values: Vec<Natural>,
}

impl RatioSequence {
    /// Compute the column for n = k..=horizon.
    ///
    /// Built incrementally: C(n, k) is updated via C(n, k) = C(n−1, k)·n/(n−k)
    /// and each window lcm is folded over k terms, so the whole column costs
    /// O((horizon − k)·k) small-bignum operations. Errors with
    /// `HorizonTooSmall` when horizon < k.
    pub fn compute(k: u64, horizon: u64) -> Result<RatioSequence> {
        if horizon < k {
            return Err(Error::HorizonTooSmall {
                k,
                horizon,
                required: Natural::from(k),
            });
        }
        let den = arith::lcm_range(1, k)?;
        let mut values = Vec::with_capacity((horizon - k + 1) as usize);
        let mut binom = Natural::one();
        for n in k..=horizon {
            if n > k {
                binom = exact_div(&(binom * Natural::from(n)), &Natural::from(n - k));
            }
            let mut num = Natural::one();
            for v in (n - k + 1)..=n {
                num = arith::lcm(&num, &Natural::from(v));
            }
            let lcm_binom = exact_div(&num, &den);
            values.push(exact_div(&binom, &lcm_binom));
        }
        Ok(RatioSequence {
            k,
            start_n: k,
            values,
        })
    }

    /// Whether t is a period of the stored window: values[i] = values[i + t]
    /// for every i where both sides exist. Vacuously true when t ≥ len;
    /// t = 0 is never a period.
    pub fn is_period(&self, t: u64) -> bool {
        if t == 0 {
            return false;
        }
        let t = t as usize;
        if t >= self.values.len() {
            return true;
        }
        (0..self.values.len() - t).all(|i| self.values[i] == self.values[i + t])
    }

    /// Smallest t ≥ 1 that is a period of the stored window.
    pub fn minimal_period(&self) -> u64 {
        (1..=self.values.len() as u64)
            .find(|&t| self.is_period(t))
            .unwrap_or(1)
    }
}

/// Minimal period of column k found by scanning actual ratios, entirely
/// independent of the closed-form period.
///
/// Requires horizon ≥ k + 4·lcm(1, …, max(k−1, 1)) — enough room that the
/// window certifies minimality — and errors with `HorizonTooSmall` below
/// that (the error carries the exact requirement, which can exceed u64).
pub fn minimal_period_bruteforce(k: u64, horizon: u64) -> Result<u64> {
    let m = k.saturating_sub(1).max(1);
    let required = Natural::from(4u32) * arith::lcm_range(1, m).expect("m >= 1") + Natural::from(k);
    if Natural::from(horizon) < required {
        return Err(Error::HorizonTooSmall {
            k,
            horizon,
            required,
        });
    }
    let seq = RatioSequence::compute(k, horizon)?;
    Ok(seq.minimal_period())
}

/// Check whether `candidate` is a period of column k over a scan window.
///
/// Requires candidate ≥ 1 (`ZeroInput` otherwise) and horizon > k + candidate
/// (`HorizonTooSmall` otherwise) so at least one comparison is made.
pub fn verify_period(k: u64, candidate: u64, horizon: u64) -> Result<bool> {
    if candidate == 0 {
        return Err(Error::ZeroInput);
    }
    let required = Natural::from(k) + Natural::from(candidate) + Natural::one();
    if Natural::from(horizon) < required {
        return Err(Error::HorizonTooSmall {
            k,
            horizon,
            required,
        });
    }
    let seq = RatioSequence::compute(k, horizon)?;
    Ok(seq.is_period(candidate))
}

impl PeriodReport {
    /// Run the brute-force scan to the given horizon and record whether its
    /// minimal period equals the closed-form exact period.
    pub fn confirm_bruteforce(&mut self, horizon: u64) -> Result<bool> {
        let t = minimal_period_bruteforce(self.k, horizon)?;
        self.horizon = horizon;
        self.bruteforce_confirmed = Natural::from(t) == self.exact_period;
        Ok(self.bruteforce_confirmed)
    }
}
