//! OEIS b-file export and snapshot verification for the triangle read by
//! rows (OEIS A093430).

use num_bigint::BigInt;

use lcm_binomial::{triangle, Natural};

use crate::error::CliError;

/// Index of the first exported term. A093430 lists its data with offset 1.
pub const EXPORT_FIRST_INDEX: i64 = 1;

/// The triangle's lcm-binomial values read by rows: rows 0..rows flattened
/// into a single sequence.
pub fn flattened(rows: u64) -> Vec<Natural> {
    triangle::rows(rows)
        .flatten()
        .map(|e| e.lcm_binom)
        .collect()
}

/// Render the first `rows` rows as b-file lines: `index value`, one term per
/// line, indices counting up from [`EXPORT_FIRST_INDEX`].
pub fn export_bfile(rows: u64) -> String {
    let mut out = String::new();
    for (i, v) in flattened(rows).iter().enumerate() {
        out.push_str(&format!("{} {}\n", EXPORT_FIRST_INDEX + i as i64, v));
    }
    out
}

/// A parsed b-file: consecutive (index, value) terms, plus the sequence id
/// if a comment line mentioned one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisSnapshot {
    pub sequence_id: Option<String>,
    pub terms: Vec<(i64, BigInt)>,
}

/// Extract an OEIS id (`A` followed by digits) from a comment line.
fn sniff_sequence_id(comment: &str) -> Option<String> {
    let bytes = comment.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if b == b'A' {
            let digits: &str = comment[i + 1..]
                .split(|c: char| !c.is_ascii_digit())
                .next()
                .unwrap_or("");
            if digits.len() >= 6 {
                return Some(format!("A{digits}"));
            }
        }
    }
    None
}

/// Parse b-file text: `#` comment lines and blank lines are skipped, every
/// other line must be `index value` with integer fields and consecutive
/// indices. Errors with `MalformedBfile` (carrying the 1-based line number)
/// on any violation.
pub fn parse_bfile(text: &str) -> Result<OeisSnapshot, CliError> {
    let mut sequence_id = None;
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if sequence_id.is_none() {
                sequence_id = sniff_sequence_id(line);
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(CliError::MalformedBfile {
                line: lineno + 1,
                reason: format!("expected `index value`, got {line:?}"),
            });
        };
        let idx: i64 = idx.parse().map_err(|_| CliError::MalformedBfile {
            line: lineno + 1,
            reason: format!("index {idx:?} is not an integer"),
        })?;
        let val: BigInt = val.parse().map_err(|_| CliError::MalformedBfile {
            line: lineno + 1,
            reason: format!("value {val:?} is not an integer"),
        })?;
        if let Some((prev, _)) = terms.last() {
            if idx != prev + 1 {
                return Err(CliError::MalformedBfile {
                    line: lineno + 1,
                    reason: format!("index {idx} does not follow {prev}"),
                });
            }
        }
        terms.push((idx, val));
    }
    Ok(OeisSnapshot { sequence_id, terms })
}

/// One disagreement between a snapshot and the computed triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisMismatch {
    /// The snapshot's own index for the term.
    pub index: i64,
    /// Triangle coordinates of the term (row-major position).
    pub n: u64,
    pub k: u64,
    pub snapshot: BigInt,
    pub computed: Natural,
}

/// Outcome of checking a snapshot against the computed triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisReport {
    pub sequence_id: Option<String>,
    /// Terms present in the snapshot.
    pub total: u64,
    /// Terms that matched the computed value.
    pub verified: u64,
    pub mismatches: Vec<OeisMismatch>,
}

impl OeisReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "sequence: {}\n",
            self.sequence_id.as_deref().unwrap_or("(unknown)")
        ));
        out.push_str(&format!("terms: {}\n", self.total));
        out.push_str(&format!("verified: {}\n", self.verified));
        out.push_str(&format!("mismatches: {}\n", self.mismatches.len()));
        for m in &self.mismatches {
            out.push_str(&format!(
                "mismatch at index {} (n={}, k={}): snapshot {}, computed {}\n",
                m.index, m.n, m.k, m.snapshot, m.computed
            ));
        }
        out
    }
}

/// Compare a snapshot, term by term, against the triangle read by rows.
///
/// Alignment is positional: the snapshot's first term corresponds to cell
/// (0, 0) regardless of what index it carries, so offset-0 and offset-1
/// snapshots both verify.
pub fn oeis_check(snapshot: &OeisSnapshot) -> OeisReport {
    let total = snapshot.terms.len();
    let mut verified = 0u64;
    let mut mismatches = Vec::new();
    let mut pos = 0usize;
    'rows: for row in triangle::rows(u64::MAX) {
        for e in row {
            if pos >= total {
                break 'rows;
            }
            let (index, ref value) = snapshot.terms[pos];
            if BigInt::from(e.lcm_binom.clone()) == *value {
                verified += 1;
            } else {
                mismatches.push(OeisMismatch {
                    index,
                    n: e.n,
                    k: e.k,
                    snapshot: value.clone(),
                    computed: e.lcm_binom,
                });
            }
            pos += 1;
        }
    }
    OeisReport {
        sequence_id: snapshot.sequence_id.clone(),
        total: total as u64,
        verified,
        mismatches,
    }
}
