//! The triangle of lcm-binomials side by side with Pascal's triangle.

use num_traits::One;

use crate::arith::{self, exact_div};
use crate::error::{Error, Result};
use crate::Natural;

/// One cell of the triangle: the lcm-binomial [n k], the ordinary binomial
/// C(n, k), and their exact quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleEntry {
    pub n: u64,
    pub k: u64,
    /// [n k] = lcm(n, …, n−k+1) / lcm(1, …, k)
    pub lcm_binom: Natural,
    /// C(n, k)
    pub binom: Natural,
    /// C(n, k) / [n k], always a positive integer.
    pub ratio: Natural,
    /// Whether [n k] ≠ C(n, k), i.e. ratio > 1.
    pub differs: bool,
}

impl TriangleEntry {
    /// Compute a single cell. Errors with `KExceedsN` when k > n.
    pub fn new(n: u64, k: u64) -> Result<Self> {
        if k > n {
            return Err(Error::KExceedsN { n, k });
        }
        let lcm_binom = arith::lcm_binomial(n, k)?;
        let binom = arith::binomial(n, k)?;
        // [n k] divides C(n, k); the quotient being integral is asserted.
        let ratio = exact_div(&binom, &lcm_binom);
        let differs = !ratio.is_one();
        Ok(TriangleEntry {
            n,
            k,
            lcm_binom,
            binom,
            ratio,
            differs,
        })
    }
}

/// Iterator over full rows of the triangle, row n holding entries k = 0..=n.
///
/// Each row is built incrementally — running-product binomials and rolling
/// range lcms — so scanning r rows costs O(r²) bignum operations rather than
/// recomputing every range lcm from scratch.
pub struct Rows {
    n: u64,
    count: u64,
}

/// The first `count` rows of the triangle (rows 0 through count−1).
pub fn rows(count: u64) -> Rows {
    Rows { n: 0, count }
}

impl Iterator for Rows {
    type Item = Vec<TriangleEntry>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.n >= self.count {
            return None;
        }
        let n = self.n;
        self.n += 1;

        let mut row = Vec::with_capacity(n as usize + 1);
        let mut binom = Natural::one();
        // num = lcm(n−k+1, …, n) grows leftward as k increases; den = lcm(1, …, k).
        let mut num = Natural::one();
        let mut den = Natural::one();
        row.push(TriangleEntry {
            n,
            k: 0,
            lcm_binom: Natural::one(),
            binom: Natural::one(),
            ratio: Natural::one(),
            differs: false,
        });
        for k in 1..=n {
            binom = exact_div(&(binom * Natural::from(n - k + 1)), &Natural::from(k));
            num = arith::lcm(&num, &Natural::from(n - k + 1));
            den = arith::lcm(&den, &Natural::from(k));
            let lcm_binom = exact_div(&num, &den);
            let ratio = exact_div(&binom, &lcm_binom);
            let differs = !ratio.is_one();
            row.push(TriangleEntry {
                n,
                k,
                lcm_binom,
                binom: binom.clone(),
                ratio,
                differs,
            });
        }
        Some(row)
    }
}
