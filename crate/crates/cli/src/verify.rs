//! Verification suites: re-check the core guarantees over configurable
//! ranges, reporting violations instead of panicking so the CLI can print
//! witnesses and exit nonzero.

use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::{One, Zero};

use lcm_binomial::{
    analysis, arith, default_horizon, exact_period, farhi_kane_period, minimal_period_bruteforce,
    Natural,
};

/// Which suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// lcm(n−k+1, …, n) is divisible by lcm(1, …, k) on every cell.
    Integrality,
    /// [n k] divides C(n, k) on every cell.
    Divisibility,
    /// Closed-form column periods match brute-force scans, the two period
    /// formulas are linked, and each period divides lcm(1, …, k−1).
    Period,
    /// Ω ≤ k along each diagonal D_k.
    Omega,
    /// lcm growth bounds and the row power-sum inequality.
    Bounds,
    /// All of the above.
    All,
}

/// Ranges the suites scan over.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Row bound for cell scans; entries-per-diagonal for the omega suite.
    pub max_n: u64,
    /// Largest column for the period suite / largest diagonal for omega.
    pub max_k: u64,
    /// Override the per-k brute-force scan horizon (default: the minimality
    /// horizon k + 4·lcm(1, …, k−1)).
    pub horizon: Option<u64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 120,
            max_k: 12,
            horizon: None,
        }
    }
}

/// Outcome of one suite.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: u64,
    pub violations: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "{}: {} checks, {} violations ({:.2?})\n",
            self.name,
            self.checks,
            self.violations.len(),
            self.elapsed
        );
        for v in &self.violations {
            out.push_str(&format!("  violation: {v}\n"));
        }
        out
    }
}

/// Run a suite (or all of them) and collect reports.
pub fn run(suite: Suite, opts: &VerifyOptions) -> Vec<SuiteReport> {
    match suite {
        Suite::Integrality => vec![integrality(opts)],
        Suite::Divisibility => vec![divisibility(opts)],
        Suite::Period => vec![period(opts)],
        Suite::Omega => vec![omega(opts)],
        Suite::Bounds => vec![bounds(opts)],
        Suite::All => vec![
            integrality(opts),
            divisibility(opts),
            period(opts),
            omega(opts),
            bounds(opts),
        ],
    }
}

/// Scan every cell n ≤ max_n: the defining quotient of [n k] must be exact.
fn integrality(opts: &VerifyOptions) -> SuiteReport {
    let start = Instant::now();
    let mut checks = 0u64;
    let mut violations = Vec::new();
    for n in 0..=opts.max_n {
        let mut num = Natural::one(); // lcm(n−k+1, …, n)
        let mut den = Natural::one(); // lcm(1, …, k)
        for k in 0..=n {
            if k > 0 {
                num = arith::lcm(&num, &Natural::from(n - k + 1));
                den = arith::lcm(&den, &Natural::from(k));
            }
            checks += 1;
            if !(&num % &den).is_zero() {
                violations.push(format!(
                    "lcm({}, …, {n}) not divisible by lcm(1, …, {k})",
                    n - k + 1
                ));
            }
        }
    }
    SuiteReport {
        name: "integrality",
        checks,
        violations,
        elapsed: start.elapsed(),
    }
}

/// Scan every cell n ≤ max_n: [n k] must divide C(n, k).
fn divisibility(opts: &VerifyOptions) -> SuiteReport {
    let start = Instant::now();
    let mut checks = 0u64;
    let mut violations = Vec::new();
    for n in 0..=opts.max_n {
        let mut binom = Natural::one();
        let mut num = Natural::one();
        let mut den = Natural::one();
        for k in 0..=n {
            if k > 0 {
                // Running product: C(n, k) = C(n, k−1)·(n−k+1)/k, exact by
                // the integrality of binomial coefficients.
                let (q, r) = (binom * Natural::from(n - k + 1)).div_rem(&Natural::from(k));
                assert!(r.is_zero(), "binomial recurrence is exact");
                binom = q;
                num = arith::lcm(&num, &Natural::from(n - k + 1));
                den = arith::lcm(&den, &Natural::from(k));
            }
            let (lcm_binom, rem) = num.div_rem(&den);
            if !rem.is_zero() {
                violations.push(format!("[{n} {k}] is not an integer"));
                checks += 1;
                continue;
            }
            checks += 1;
            if !(&binom % &lcm_binom).is_zero() {
                violations.push(format!(
                    "[{n} {k}] = {lcm_binom} does not divide C({n}, {k}) = {binom}"
                ));
            }
        }
    }
    SuiteReport {
        name: "divisibility",
        checks,
        violations,
        elapsed: start.elapsed(),
    }
}

/// For every k ≤ max_k: closed-form period vs. brute-force scan, the
/// period-formula linkage, and divisibility of the period into lcm(1, …, k−1).
fn period(opts: &VerifyOptions) -> SuiteReport {
    let start = Instant::now();
    let mut checks = 0u64;
    let mut violations = Vec::new();
    for k in 0..=opts.max_k {
        let report = exact_period(k);
        let horizon = opts.horizon.or_else(|| default_horizon(k));
        match horizon {
            Some(h) => match minimal_period_bruteforce(k, h) {
                Ok(t) => {
                    checks += 1;
                    if Natural::from(t) != report.exact_period {
                        violations.push(format!(
                            "k={k}: brute-force period {t} != closed-form {} (horizon {h})",
                            report.exact_period
                        ));
                    }
                }
                Err(e) => violations.push(format!("k={k}: brute-force scan failed: {e}")),
            },
            None => violations.push(format!("k={k}: no scan horizon fits u64; pass --horizon")),
        }
        if k >= 1 {
            checks += 1;
            if report.exact_period != farhi_kane_period(k - 1) {
                violations.push(format!("k={k}: period formulas disagree"));
            }
        }
        if k >= 2 {
            checks += 1;
            let l = arith::lcm_range(1, k - 1).expect("lo = 1");
            if !(l % &report.exact_period).is_zero() {
                violations.push(format!(
                    "k={k}: period {} does not divide lcm(1, …, {})",
                    report.exact_period,
                    k - 1
                ));
            }
        }
    }
    SuiteReport {
        name: "period",
        checks,
        violations,
        elapsed: start.elapsed(),
    }
}

/// Ω(value) ≤ k over the first max_n entries of every diagonal D_k, k ≤ max_k.
fn omega(opts: &VerifyOptions) -> SuiteReport {
    let start = Instant::now();
    let mut checks = 0u64;
    let mut violations = Vec::new();
    for k in 0..=opts.max_k {
        let mut num = Natural::one(); // lcm(k+1, …, k+n)
        let mut den = Natural::one(); // lcm(1, …, n)
        for n in 0..opts.max_n {
            if n > 0 {
                num = arith::lcm(&num, &Natural::from(k + n));
                den = arith::lcm(&den, &Natural::from(n));
            }
            let (value, rem) = num.div_rem(&den);
            checks += 1;
            if !rem.is_zero() {
                violations.push(format!("D_{k} entry n={n} is not an integer"));
                continue;
            }
            match arith::omega(&value) {
                Ok(om) if om <= k => {}
                Ok(om) => {
                    violations.push(format!("D_{k} entry n={n}: Ω({value}) = {om} exceeds {k}"))
                }
                Err(e) => violations.push(format!("D_{k} entry n={n}: {e}")),
            }
        }
    }
    SuiteReport {
        name: "omega",
        checks,
        violations,
        elapsed: start.elapsed(),
    }
}

/// lcm(1, …, n) ≤ n·4^n and its halving step for n ≤ max_n, plus the row
/// power-sum inequality at a panel of x values for n ≤ min(max_n, 60).
fn bounds(opts: &VerifyOptions) -> SuiteReport {
    let start = Instant::now();
    let mut checks = 0u64;
    let mut violations = Vec::new();
    for n in 1..=opts.max_n {
        match analysis::check_lcm_upper_bound(n) {
            Ok(c) => {
                checks += 2;
                if !c.holds {
                    violations.push(format!("lcm(1, …, {n}) exceeds n·4^n"));
                }
                if !c.halving_holds {
                    violations.push(format!("lcm(1, …, {n}) exceeds 2^n·lcm(1, …, ⌈n/2⌉)"));
                }
            }
            Err(e) => violations.push(format!("bound check failed at n={n}: {e}")),
        }
    }
    for n in 0..=opts.max_n.min(60) {
        for (num, den) in [(0u64, 1u64), (1, 2), (1, 1), (2, 1), (7, 3)] {
            checks += 1;
            match analysis::check_power_sum_inequality(n, num, den) {
                Ok(true) => {}
                Ok(false) => violations.push(format!(
                    "power-sum inequality fails at n={n}, x={num}/{den}"
                )),
                Err(e) => violations.push(format!("power-sum check failed at n={n}: {e}")),
            }
        }
    }
    SuiteReport {
        name: "bounds",
        checks,
        violations,
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_scale() {
        let opts = VerifyOptions {
            max_n: 40,
            max_k: 6,
            horizon: None,
        };
        let reports = run(Suite::All, &opts);
        assert_eq!(reports.len(), 5);
        for r in &reports {
            assert!(r.ok(), "{}: {:?}", r.name, r.violations);
            assert!(r.checks > 0);
        }
        let names: Vec<&str> = reports.iter().map(|r| r.name).collect();
        assert_eq!(
            names,
            vec!["integrality", "divisibility", "period", "omega", "bounds"]
        );
    }

    #[test]
    fn single_suite_dispatch() {
        let opts = VerifyOptions {
            max_n: 30,
            max_k: 5,
            horizon: None,
        };
        let reports = run(Suite::Period, &opts);
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].name, "period");
        assert!(reports[0].ok());
        // k = 0..=5: 6 brute-force + 5 linkage + 4 divisibility checks.
        assert_eq!(reports[0].checks, 15);
    }

    #[test]
    fn period_suite_respects_horizon_override() {
        let opts = VerifyOptions {
            max_n: 30,
            max_k: 3,
            horizon: Some(10),
        };
        // Horizon 10 is below the k=3 minimality requirement (3 + 4·2 = 11),
        // so the brute-force scan must report a failure rather than pass.
        let reports = run(Suite::Period, &opts);
        assert!(!reports[0].ok());
        assert!(reports[0].violations.iter().any(|v| v.contains("k=3")));
    }

    #[test]
    fn render_mentions_counts() {
        let opts = VerifyOptions {
            max_n: 10,
            max_k: 2,
            horizon: None,
        };
        let r = &run(Suite::Integrality, &opts)[0];
        let text = r.render();
        assert!(text.starts_with("integrality: 66 checks, 0 violations"));
    }
}
