//! `lcmbinom` — explore the lcm analog of the binomial triangle.
//!
//! Exit codes: 0 success, 1 failed check (verify violations, snapshot
//! mismatches, malformed snapshot data), 2 usage errors (bad arguments,
//! invalid format combinations, out-of-domain indices).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};

use lcm_binomial::{analysis, periods, TriangleEntry};
use lcmbinom_cli::render::{self, Format, RenderOptions, What};
use lcmbinom_cli::verify::{self, Suite, VerifyOptions};
use lcmbinom_cli::{bfile, CliError};

#[derive(Parser)]
#[command(
    name = "lcmbinom",
    version,
    about = "Explore the lcm analog of the binomial triangle: [n k] = lcm(n..n-k+1)/lcm(1..k)"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Show one cell: [n k], C(n, k), and their ratio.
    Entry {
        n: u64,
        k: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the triangle (text, csv, json, or b-file lines).
    Triangle {
        /// Number of rows (rows 0 through ROWS-1).
        #[arg(long, default_value_t = 13, value_parser = clap::value_parser!(u64).range(1..))]
        rows: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Mark cells where [n k] differs from C(n, k).
        #[arg(long)]
        highlight: bool,
        /// Highlight with ANSI green instead of *value* markers.
        #[arg(long)]
        ansi: bool,
        /// Which value to show per cell in text output.
        #[arg(long, value_enum, default_value_t = What::LcmBinomial)]
        what: What,
    },
    /// Walk a column: cells (n, K) for n = K, K+1, ….
    Column {
        k: u64,
        /// Number of cells.
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Walk the diagonal D_K: values [n+K over n] with their Ω.
    Diagonal {
        k: u64,
        /// Number of entries.
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Column-K ratio period: closed form, linkage, and brute-force scan.
    Period {
        k: u64,
        /// Scan horizon (default: the minimality horizon k + 4·lcm(1..k-1)).
        #[arg(long)]
        horizon: Option<u64>,
    },
    /// Print the column-K ratio sequence C(n, K) / [n K].
    Ratios {
        k: u64,
        /// Number of values (starting at n = K).
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// List the cells where [n k] = C(n, k).
    Equality {
        #[arg(long, default_value_t = 12)]
        max_n: u64,
    },
    /// Check lcm(1..n) against its n·4^n bound.
    Bound {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Re-verify the library's guarantees over a range.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 120)]
        max_n: u64,
        #[arg(long, default_value_t = 12)]
        max_k: u64,
        /// Override the period suite's brute-force scan horizon.
        #[arg(long)]
        horizon: Option<u64>,
    },
    /// Verify an OEIS b-file snapshot against the computed triangle.
    OeisCheck { file: PathBuf },
}

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// Errors reaching main are bad inputs (usage) except data-level failures
/// in snapshot files, which count as failed checks.
fn exit_code_for(e: &CliError) -> u8 {
    match e {
        CliError::MalformedBfile { .. } => EXIT_CHECK_FAILED,
        CliError::InvalidFormat(_) | CliError::Core(_) | CliError::Io(_) => EXIT_USAGE,
    }
}

fn dispatch(cmd: Cmd) -> Result<u8, CliError> {
    match cmd {
        Cmd::Entry { n, k, format } => entry(n, k, format),
        Cmd::Triangle {
            rows,
            format,
            highlight,
            ansi,
            what,
        } => {
            let opts = RenderOptions {
                rows,
                format,
                what,
                highlight,
                ansi,
            };
            print!("{}", render::render_triangle(&opts)?);
            Ok(EXIT_OK)
        }
        Cmd::Column { k, count, format } => column(k, count, format),
        Cmd::Diagonal { k, count, format } => diagonal_cmd(k, count, format),
        Cmd::Period { k, horizon } => period_cmd(k, horizon),
        Cmd::Ratios { k, count } => ratios_cmd(k, count),
        Cmd::Equality { max_n } => {
            let set = analysis::equality_set(max_n);
            println!("n k");
            for r in &set {
                println!("{} {}", r.n, r.k);
            }
            println!("total: {}", set.len());
            Ok(EXIT_OK)
        }
        Cmd::Bound { n } => {
            let c = analysis::check_lcm_upper_bound(n)?;
            println!("n: {n}");
            println!("lcm(1..n): {}", c.lcm);
            println!("bound n*4^n: {}", c.bound);
            println!("holds: {}", c.holds);
            println!("halving_holds: {}", c.halving_holds);
            Ok(if c.holds && c.halving_holds {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Cmd::Verify {
            suite,
            max_n,
            max_k,
            horizon,
        } => {
            let opts = VerifyOptions {
                max_n,
                max_k,
                horizon,
            };
            let reports = verify::run(suite, &opts);
            let mut ok = true;
            for r in &reports {
                print!("{}", r.render());
                ok &= r.ok();
            }
            Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Cmd::OeisCheck { file } => {
            let text = std::fs::read_to_string(&file)?;
            let snapshot = bfile::parse_bfile(&text)?;
            let report = bfile::oeis_check(&snapshot);
            print!("{}", report.render());
            Ok(if report.ok() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
    }
}

fn entry(n: u64, k: u64, format: Format) -> Result<u8, CliError> {
    let e = TriangleEntry::new(n, k).map_err(CliError::from)?;
    match format {
        Format::Text => {
            println!("n: {}", e.n);
            println!("k: {}", e.k);
            println!("lcm_binom: {}", e.lcm_binom);
            println!("binom: {}", e.binom);
            println!("ratio: {}", e.ratio);
            println!("differs: {}", e.differs);
        }
        Format::Csv => print!("{}", render::entries_to_csv(std::slice::from_ref(&e))),
        Format::Json => print!("{}", render::entries_to_json(std::slice::from_ref(&e))?),
        Format::Bfile => {
            return Err(CliError::InvalidFormat(
                "b-file output applies to the whole triangle; use `triangle --format bfile`".into(),
            ))
        }
    }
    Ok(EXIT_OK)
}

fn column(k: u64, count: u64, format: Format) -> Result<u8, CliError> {
    let mut entries = Vec::with_capacity(count as usize);
    for n in k..k + count {
        entries.push(TriangleEntry::new(n, k).map_err(CliError::from)?);
    }
    match format {
        Format::Text => {
            println!("n k lcm_binom binom ratio differs");
            for e in &entries {
                println!(
                    "{} {} {} {} {} {}",
                    e.n, e.k, e.lcm_binom, e.binom, e.ratio, e.differs
                );
            }
        }
        Format::Csv => print!("{}", render::entries_to_csv(&entries)),
        Format::Json => print!("{}", render::entries_to_json(&entries)?),
        Format::Bfile => {
            return Err(CliError::InvalidFormat(
                "b-file output applies to the whole triangle; use `triangle --format bfile`".into(),
            ))
        }
    }
    Ok(EXIT_OK)
}

fn diagonal_cmd(k: u64, count: u64, format: Format) -> Result<u8, CliError> {
    let entries = analysis::diagonal(k, count);
    match format {
        Format::Text => {
            println!("n value omega");
            for e in &entries {
                println!("{} {} {}", e.n, e.value, e.omega);
            }
        }
        Format::Csv => {
            println!("k,n,value,omega");
            for e in &entries {
                println!("{},{},{},{}", e.k, e.n, e.value, e.omega);
            }
        }
        Format::Json => {
            #[derive(serde::Serialize)]
            struct JsonDiag {
                k: u64,
                n: u64,
                value: String,
                omega: u64,
            }
            let rows: Vec<JsonDiag> = entries
                .iter()
                .map(|e| JsonDiag {
                    k: e.k,
                    n: e.n,
                    value: e.value.to_string(),
                    omega: e.omega,
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&rows).expect("serialization cannot fail")
            );
        }
        Format::Bfile => {
            return Err(CliError::InvalidFormat(
                "b-file output applies to the whole triangle; use `triangle --format bfile`".into(),
            ))
        }
    }
    Ok(EXIT_OK)
}

fn period_cmd(k: u64, horizon: Option<u64>) -> Result<u8, CliError> {
    let report = periods::exact_period(k);
    println!("k: {k}");
    println!("exact_period: {}", report.exact_period);
    let exponents = if report.prime_exponents.is_empty() {
        "(none)".to_string()
    } else {
        report
            .prime_exponents
            .iter()
            .map(|(p, a)| format!("{p}^{a}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("prime_exponents: {exponents}");
    if k >= 1 {
        println!(
            "farhi_kane_period({}): {}",
            k - 1,
            periods::farhi_kane_period(k - 1)
        );
    }
    let horizon = match horizon.or_else(|| periods::default_horizon(k)) {
        Some(h) => h,
        None => {
            // Treat as a usage problem: the caller must supply a horizon
            // explicitly once the default no longer fits in u64.
            let mut cmd = Cli::command();
            let _ = cmd.print_help();
            eprintln!("\nerror: no default scan horizon fits u64 for k = {k}; pass --horizon");
            return Ok(EXIT_USAGE);
        }
    };
    let t = periods::minimal_period_bruteforce(k, horizon).map_err(CliError::from)?;
    let confirmed = lcm_binomial::Natural::from(t) == report.exact_period;
    println!("bruteforce_minimal_period: {t} (horizon {horizon})");
    println!("confirmed: {confirmed}");
    Ok(if confirmed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn ratios_cmd(k: u64, count: u64) -> Result<u8, CliError> {
    let horizon = k
        .checked_add(count - 1)
        .ok_or_else(|| CliError::InvalidFormat("count overflows the scan range".into()))?;
    let seq = periods::RatioSequence::compute(k, horizon).map_err(CliError::from)?;
    println!("k: {}", seq.k);
    println!("start_n: {}", seq.start_n);
    let values: Vec<String> = seq.values.iter().map(|v| v.to_string()).collect();
    println!("values: {}", values.join(" "));
    Ok(EXIT_OK)
}
