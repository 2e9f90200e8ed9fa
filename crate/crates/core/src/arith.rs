//! Exact integer arithmetic: range lcms, binomials, their lcm analog, p-adic
//! valuations, and trial-division factorization.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Natural;

/// Greatest common divisor. `gcd(0, x) = x` and `gcd(0, 0) = 0`.
pub fn gcd(a: &Natural, b: &Natural) -> Natural {
    a.gcd(b)
}

/// Least common multiple. `lcm(0, x) = 0` by convention.
pub fn lcm(a: &Natural, b: &Natural) -> Natural {
    if a.is_zero() || b.is_zero() {
        return Natural::zero();
    }
    a.lcm(b)
}

/// Divide exactly, panicking if the division leaves a remainder.
///
/// Used where divisibility is a theorem, so a nonzero remainder is a bug.
pub(crate) fn exact_div(num: &Natural, den: &Natural) -> Natural {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "exact division failed: {num} / {den}");
    q
}

/// lcm(lo, lo+1, …, hi). Empty ranges (lo > hi) give 1.
///
/// Errors with `RangeContainsZero` when lo = 0.
pub fn lcm_range(lo: u64, hi: u64) -> Result<Natural> {
    if lo == 0 {
        return Err(Error::RangeContainsZero { lo, hi });
    }
    if lo > hi {
        return Ok(Natural::one());
    }
    let mut acc = Natural::from(lo);
    for v in (lo + 1)..=hi {
        acc = lcm(&acc, &Natural::from(v));
    }
    Ok(acc)
}

/// Binomial coefficient C(n, k), exact.
///
/// Errors with `KExceedsN` when k > n.
pub fn binomial(n: u64, k: u64) -> Result<Natural> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    let k = k.min(n - k);
    let mut acc = Natural::one();
    for i in 0..k {
        // Each partial product C(n, i+1) is an integer, so the division by
        // i+1 after multiplying by n-i is exact.
        acc = exact_div(&(acc * Natural::from(n - i)), &Natural::from(i + 1));
    }
    Ok(acc)
}

/// The lcm analog of the binomial coefficient:
///
/// [n k] = lcm(n, n−1, …, n−k+1) / lcm(1, 2, …, k)
///
/// The division is always exact (the quotient is a positive integer for all
/// 0 ≤ k ≤ n); that integrality is asserted on every call. Errors with
/// `KExceedsN` when k > n.
pub fn lcm_binomial(n: u64, k: u64) -> Result<Natural> {
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    if k == 0 {
        return Ok(Natural::one());
    }
    let num = lcm_range(n - k + 1, n)?;
    let den = lcm_range(1, k)?;
    Ok(exact_div(&num, &den))
}

/// Deterministic primality by trial division (6k ± 1 wheel).
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) || p.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d <= p / d {
        if p.is_multiple_of(d) || p.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// p-adic valuation v_p(x): the exponent of the prime p in x.
///
/// Errors with `NotPrime` for composite p and `ZeroInput` for x = 0.
pub fn vp(x: &Natural, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    if p == 2 {
        // Valuation at 2 is the number of trailing zero bits.
        return Ok(x.trailing_zeros().expect("x is nonzero"));
    }
    let pb = Natural::from(p);
    let mut m = x.clone();
    let mut count = 0u64;
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return Ok(count);
        }
        m = q;
        count += 1;
    }
}

/// v_p(x) for machine-word x ≥ 1 (p assumed prime).
pub(crate) fn vp_u64(mut x: u64, p: u64) -> u64 {
    debug_assert!(x >= 1);
    let mut count = 0;
    while x.is_multiple_of(p) {
        x /= p;
        count += 1;
    }
    count
}

/// v_p(C(n, k)) computed purely from floor sums:
///
/// Σ_{α ≥ 1} ( ⌊n/p^α⌋ − ⌊k/p^α⌋ − ⌊(n−k)/p^α⌋ )
///
/// Every term is 0 or 1 (carry count in base p), so the sum is finite and
/// each term is asserted nonnegative. This routine never touches the actual
/// binomial coefficient, so it can cross-check `vp(binomial(n, k), p)`.
pub fn vp_binomial_legendre(n: u64, k: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    let mut sum = 0u64;
    let mut pa = p;
    while pa <= n {
        let term = (n / pa)
            .checked_sub(k / pa + (n - k) / pa)
            .expect("floor-sum term is nonnegative");
        debug_assert!(term <= 1, "each carry term is 0 or 1");
        sum += term;
        pa = match pa.checked_mul(p) {
            Some(next) => next,
            None => break,
        };
    }
    Ok(sum)
}

/// v_p([n k]) computed from the two max-characterizations
///
/// a = max{ α : ⌊n/p^α⌋ − ⌊(n−k)/p^α⌋ ≥ 1 }   (p^a is the largest prime
///     power with a multiple among n−k+1, …, n)
/// b = max{ α : ⌊k/p^α⌋ ≥ 1 }                  (p^b ≤ k < p^{b+1})
///
/// giving v_p([n k]) = a − b, with a ≥ b asserted. Requires 1 ≤ k ≤ n;
/// k = 0 is accepted as a degenerate case and returns 0 (since [n 0] = 1).
/// This routine never computes [n k] itself, so it can cross-check
/// `vp(lcm_binomial(n, k), p)`.
pub fn vp_lcm_binomial(n: u64, k: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k > n {
        return Err(Error::KExceedsN { n, k });
    }
    if k == 0 {
        return Ok(0);
    }
    // a: scan α upward while the window n−k+1..n still contains a multiple
    // of p^α. The multiple count n/p^α − (n−k)/p^α is nonincreasing in α.
    let mut a = 0u64;
    let mut alpha = 0u64;
    let mut pa = 1u64;
    loop {
        if (n / pa) - ((n - k) / pa) == 0 {
            break;
        }
        a = alpha;
        match pa.checked_mul(p) {
            Some(next) if next <= n => {
                pa = next;
                alpha += 1;
            }
            _ => break,
        }
    }
    // b: largest α with p^α ≤ k.
    let mut b = 0u64;
    let mut pb = p;
    while pb <= k {
        b += 1;
        pb = match pb.checked_mul(p) {
            Some(next) => next,
            None => break,
        };
    }
    assert!(
        a >= b,
        "v_p([{n} {k}]) = a - b with a >= b; got a={a}, b={b}"
    );
    Ok(a - b)
}

/// A prime factorization: distinct primes in increasing order, each with its
/// exponent (≥ 1). The empty list is the factorization of 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(Natural, u32)>,
}

impl Factorization {
    /// (prime, exponent) pairs, primes strictly increasing, exponents ≥ 1.
    pub fn factors(&self) -> &[(Natural, u32)] {
        &self.factors
    }

    /// Ω: number of prime factors counted with multiplicity.
    pub fn omega(&self) -> u64 {
        self.factors.iter().map(|(_, e)| u64::from(*e)).sum()
    }

    /// Multiply the factorization back out.
    pub fn product(&self) -> Natural {
        let mut acc = Natural::one();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        acc
    }
}

/// Next trial divisor on the 2, 3, 6k ± 1 wheel.
fn next_candidate(d: u64) -> u64 {
    match d {
        2 => 3,
        3 => 5,
        _ => {
            if d % 6 == 5 {
                d + 2
            } else {
                d + 4
            }
        }
    }
}

/// Trial-divide x starting from candidate divisor `start` (x has no prime
/// factors below `start`).
fn factorize_u64(mut x: u64, start: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = start;
    while d <= x / d {
        let mut e = 0u32;
        while x.is_multiple_of(d) {
            x /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d = next_candidate(d);
    }
    if x > 1 {
        out.push((x, 1));
    }
    out
}

/// Factor x by trial division over the 6k ± 1 wheel, switching to machine
/// words as soon as the remaining cofactor fits in u64. Intended for
/// desk-scale inputs (the values arising in the triangle), not for numbers
/// with large prime factors. Errors with `ZeroInput` for x = 0.
pub fn factorize(x: &Natural) -> Result<Factorization> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut factors: Vec<(Natural, u32)> = Vec::new();
    let mut rem = x.clone();
    let mut d = 2u64;
    loop {
        if rem.is_one() {
            break;
        }
        if let Some(r) = rem.to_u64() {
            for (p, e) in factorize_u64(r, d) {
                factors.push((Natural::from(p), e));
            }
            break;
        }
        let db = Natural::from(d);
        let mut e = 0u32;
        loop {
            let (q, r) = rem.div_rem(&db);
            if !r.is_zero() {
                break;
            }
            rem = q;
            e += 1;
        }
        if e > 0 {
            factors.push((db, e));
        }
        d = next_candidate(d);
    }
    Ok(Factorization { factors })
}

/// Ω(x): number of prime factors of x counted with multiplicity. Ω(1) = 0.
/// Errors with `ZeroInput` for x = 0.
pub fn omega(x: &Natural) -> Result<u64> {
    Ok(factorize(x)?.omega())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(&nat(12), &nat(18)), nat(6));
        assert_eq!(gcd(&nat(0), &nat(5)), nat(5));
        assert_eq!(gcd(&nat(0), &nat(0)), nat(0));
        assert_eq!(gcd(&nat(7), &nat(13)), nat(1));
    }

    #[test]
    fn lcm_basics() {
        assert_eq!(lcm(&nat(4), &nat(6)), nat(12));
        assert_eq!(lcm(&nat(0), &nat(5)), nat(0));
        assert_eq!(lcm(&nat(1), &nat(9)), nat(9));
    }

    #[test]
    fn lcm_range_values() {
        assert_eq!(lcm_range(1, 10).unwrap(), nat(2520));
        assert_eq!(lcm_range(4, 6).unwrap(), nat(60));
        assert_eq!(lcm_range(1, 1).unwrap(), nat(1));
        assert_eq!(lcm_range(7, 7).unwrap(), nat(7));
        // Empty range is the empty lcm, i.e. 1.
        assert_eq!(lcm_range(5, 3).unwrap(), nat(1));
    }

    #[test]
    fn lcm_range_rejects_zero() {
        assert_eq!(
            lcm_range(0, 5),
            Err(Error::RangeContainsZero { lo: 0, hi: 5 })
        );
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(12, 5).unwrap(), nat(792));
        assert_eq!(binomial(0, 0).unwrap(), nat(1));
        assert_eq!(binomial(6, 3).unwrap(), nat(20));
        assert_eq!(binomial(10, 0).unwrap(), nat(1));
        assert_eq!(binomial(10, 10).unwrap(), nat(1));
        // Symmetry.
        assert_eq!(binomial(30, 7).unwrap(), binomial(30, 23).unwrap());
    }

    #[test]
    fn binomial_rejects_k_above_n() {
        assert_eq!(binomial(5, 7), Err(Error::KExceedsN { n: 5, k: 7 }));
    }

    #[test]
    fn lcm_binomial_values() {
        assert_eq!(lcm_binomial(6, 3).unwrap(), nat(10)); // lcm(4,5,6)/lcm(1,2,3) = 60/6
        assert_eq!(lcm_binomial(9, 4).unwrap(), nat(42));
        assert_eq!(lcm_binomial(12, 6).unwrap(), nat(462));
        assert_eq!(lcm_binomial(7, 5).unwrap(), nat(7));
        assert_eq!(lcm_binomial(4, 3).unwrap(), nat(2));
        assert_eq!(lcm_binomial(0, 0).unwrap(), nat(1));
        assert_eq!(lcm_binomial(11, 0).unwrap(), nat(1));
        assert_eq!(lcm_binomial(11, 11).unwrap(), nat(1));
        assert_eq!(lcm_binomial(5, 7), Err(Error::KExceedsN { n: 5, k: 7 }));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&p| is_prime(p)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(is_prime(2));
        assert!(!is_prime(49));
        assert!(is_prime(7919));
        assert!(!is_prime(7917));
    }

    #[test]
    fn vp_values() {
        assert_eq!(vp(&nat(12), 2).unwrap(), 2);
        assert_eq!(vp(&nat(12), 3).unwrap(), 1);
        assert_eq!(vp(&nat(12), 5).unwrap(), 0);
        assert_eq!(vp(&nat(1), 2).unwrap(), 0);
        assert_eq!(vp(&lcm_range(1, 10).unwrap(), 2).unwrap(), 3);
        assert_eq!(vp(&nat(12), 4), Err(Error::NotPrime(4)));
        assert_eq!(vp(&nat(0), 2), Err(Error::ZeroInput));
    }

    #[test]
    fn legendre_floor_sum() {
        // C(12, 6) = 924 = 2^2 * 3 * 7 * 11
        assert_eq!(vp_binomial_legendre(12, 6, 2).unwrap(), 2);
        assert_eq!(vp_binomial_legendre(12, 6, 3).unwrap(), 1);
        assert_eq!(vp_binomial_legendre(12, 6, 5).unwrap(), 0);
        assert_eq!(vp_binomial_legendre(12, 6, 7).unwrap(), 1);
        assert_eq!(vp_binomial_legendre(12, 6, 11).unwrap(), 1);
        assert_eq!(vp_binomial_legendre(12, 6, 13).unwrap(), 0);
        assert_eq!(vp_binomial_legendre(0, 0, 2).unwrap(), 0);
        assert_eq!(
            vp_binomial_legendre(5, 7, 2),
            Err(Error::KExceedsN { n: 5, k: 7 })
        );
        assert_eq!(vp_binomial_legendre(12, 6, 6), Err(Error::NotPrime(6)));
    }

    #[test]
    fn legendre_matches_direct_valuation() {
        for n in 0..=60u64 {
            for k in 0..=n {
                let c = binomial(n, k).unwrap();
                for p in [2u64, 3, 5, 7, 11, 13] {
                    assert_eq!(
                        vp_binomial_legendre(n, k, p).unwrap(),
                        vp(&c, p).unwrap(),
                        "n={n} k={k} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn lcm_binomial_valuation_formula() {
        // [12 6] = 462 = 2 * 3 * 7 * 11
        assert_eq!(vp_lcm_binomial(12, 6, 2).unwrap(), 1);
        assert_eq!(vp_lcm_binomial(12, 6, 3).unwrap(), 1);
        assert_eq!(vp_lcm_binomial(12, 6, 5).unwrap(), 0);
        assert_eq!(vp_lcm_binomial(12, 6, 7).unwrap(), 1);
        assert_eq!(vp_lcm_binomial(12, 6, 11).unwrap(), 1);
        assert_eq!(vp_lcm_binomial(9, 4, 7).unwrap(), 1); // [9 4] = 42
        assert_eq!(vp_lcm_binomial(10, 0, 3).unwrap(), 0);
        assert_eq!(
            vp_lcm_binomial(5, 7, 2),
            Err(Error::KExceedsN { n: 5, k: 7 })
        );
        assert_eq!(vp_lcm_binomial(12, 6, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn valuation_formula_matches_direct_valuation() {
        for n in 0..=60u64 {
            for k in 0..=n {
                let lb = lcm_binomial(n, k).unwrap();
                for p in [2u64, 3, 5, 7, 11, 13] {
                    assert_eq!(
                        vp_lcm_binomial(n, k, p).unwrap(),
                        vp(&lb, p).unwrap(),
                        "n={n} k={k} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn valuation_inequality() {
        // v_p(C(n, k)) >= v_p([n k]) for every prime p.
        for n in 0..=60u64 {
            for k in 0..=n {
                for p in [2u64, 3, 5, 7, 11, 13, 17] {
                    assert!(
                        vp_binomial_legendre(n, k, p).unwrap() >= vp_lcm_binomial(n, k, p).unwrap(),
                        "n={n} k={k} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn factorize_values() {
        let f = factorize(&nat(462)).unwrap();
        assert_eq!(
            f.factors(),
            &[(nat(2), 1), (nat(3), 1), (nat(7), 1), (nat(11), 1)]
        );
        assert_eq!(f.omega(), 4);
        assert_eq!(f.product(), nat(462));

        let f = factorize(&nat(1)).unwrap();
        assert!(f.factors().is_empty());
        assert_eq!(f.omega(), 0);
        assert_eq!(f.product(), nat(1));

        let f = factorize(&nat(2u64.pow(10))).unwrap();
        assert_eq!(f.factors(), &[(nat(2), 10)]);

        let f = factorize(&nat(600851475143)).unwrap();
        assert_eq!(
            f.factors(),
            &[(nat(71), 1), (nat(839), 1), (nat(1471), 1), (nat(6857), 1)]
        );

        assert_eq!(factorize(&nat(0)), Err(Error::ZeroInput));
    }

    #[test]
    fn factorize_large_prime_cofactor() {
        // 2^3 * 10_000_019 (prime cofactor above the divided-out primes)
        let x = nat(8) * nat(10_000_019);
        let f = factorize(&x).unwrap();
        assert_eq!(f.factors(), &[(nat(2), 3), (nat(10_000_019), 1)]);
        assert_eq!(f.product(), x);
    }

    #[test]
    fn factorize_beyond_machine_words() {
        // 2^80 * 3^5 starts wider than u64 and shrinks into the fast path.
        let x = (Natural::one() << 80usize) * nat(243);
        let f = factorize(&x).unwrap();
        assert_eq!(f.factors(), &[(nat(2), 80), (nat(3), 5)]);
        assert_eq!(f.product(), x);
    }

    #[test]
    fn omega_values() {
        assert_eq!(omega(&nat(462)).unwrap(), 4);
        assert_eq!(omega(&nat(1)).unwrap(), 0);
        assert_eq!(omega(&nat(8)).unwrap(), 3);
        assert_eq!(omega(&nat(15)).unwrap(), 2);
        assert_eq!(omega(&nat(0)), Err(Error::ZeroInput));
    }
}
