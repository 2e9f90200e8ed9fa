//! Rendering of triangle data as text, CSV, JSON, or OEIS b-file lines.

use lcm_binomial::{triangle, Natural, TriangleEntry};

use crate::bfile;
use crate::error::CliError;

/// Output format for rendered data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Triangle-shaped plain text, one row per line.
    Text,
    /// One record per cell with header `n,k,lcm_binom,binom,ratio,differs`.
    Csv,
    /// Array of objects with the same keys; big values as decimal strings.
    Json,
    /// OEIS b-file lines (`index value`), row-major, indices from 1.
    Bfile,
}

/// Which value a text rendering shows per cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum What {
    /// [n k]
    LcmBinomial,
    /// C(n, k)
    Binomial,
    /// C(n, k) / [n k]
    Ratio,
}

/// Options for [`render_triangle`].
#[derive(Debug, Clone)]
pub struct RenderOptions {
    /// Number of rows (rows 0 through rows−1). Must be ≥ 1.
    pub rows: u64,
    pub format: Format,
    pub what: What,
    /// Mark cells where [n k] ≠ C(n, k) in text output.
    pub highlight: bool,
    /// Use ANSI green for highlighting instead of `*…*` markers.
    pub ansi: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            rows: 13,
            format: Format::Text,
            what: What::LcmBinomial,
            highlight: false,
            ansi: false,
        }
    }
}

fn cell_value(e: &TriangleEntry, what: What) -> &Natural {
    match what {
        What::LcmBinomial => &e.lcm_binom,
        What::Binomial => &e.binom,
        What::Ratio => &e.ratio,
    }
}

/// Render the first `rows` rows of the triangle.
///
/// Text shows one value per cell (chosen by `what`), optionally highlighting
/// cells where [n k] ≠ C(n, k) — `*v*` markers by default, ANSI green with
/// `ansi`. CSV and JSON emit full records per cell. B-file output is defined
/// only for `what = lcm-binomial` and errors with `InvalidFormat` otherwise.
pub fn render_triangle(opts: &RenderOptions) -> Result<String, CliError> {
    debug_assert!(opts.rows >= 1);
    match opts.format {
        Format::Text => {
            let mut out = String::new();
            for row in triangle::rows(opts.rows) {
                let mut cells = Vec::with_capacity(row.len());
                for e in &row {
                    let v = cell_value(e, opts.what);
                    if opts.highlight && e.differs {
                        if opts.ansi {
                            cells.push(format!("\x1b[32m{v}\x1b[0m"));
                        } else {
                            cells.push(format!("*{v}*"));
                        }
                    } else {
                        cells.push(v.to_string());
                    }
                }
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
            Ok(out)
        }
        Format::Csv => {
            let entries: Vec<TriangleEntry> = triangle::rows(opts.rows).flatten().collect();
            Ok(entries_to_csv(&entries))
        }
        Format::Json => {
            let entries: Vec<TriangleEntry> = triangle::rows(opts.rows).flatten().collect();
            entries_to_json(&entries)
        }
        Format::Bfile => {
            if opts.what != What::LcmBinomial {
                return Err(CliError::InvalidFormat(
                    "b-file output is defined only for the lcm-binomial values".into(),
                ));
            }
            Ok(bfile::export_bfile(opts.rows))
        }
    }
}

/// CSV with header `n,k,lcm_binom,binom,ratio,differs`, one line per entry.
pub fn entries_to_csv(entries: &[TriangleEntry]) -> String {
    let mut out = String::from("n,k,lcm_binom,binom,ratio,differs\n");
    for e in entries {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            e.n, e.k, e.lcm_binom, e.binom, e.ratio, e.differs
        ));
    }
    out
}

#[derive(serde::Serialize)]
struct JsonEntry {
    n: u64,
    k: u64,
    lcm_binom: String,
    binom: String,
    ratio: String,
    differs: bool,
}

/// JSON array of entry objects; bignum fields as decimal strings.
pub fn entries_to_json(entries: &[TriangleEntry]) -> Result<String, CliError> {
    let rows: Vec<JsonEntry> = entries
        .iter()
        .map(|e| JsonEntry {
            n: e.n,
            k: e.k,
            lcm_binom: e.lcm_binom.to_string(),
            binom: e.binom.to_string(),
            ratio: e.ratio.to_string(),
            differs: e.differs,
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("serialization cannot fail");
    s.push('\n');
    Ok(s)
}
