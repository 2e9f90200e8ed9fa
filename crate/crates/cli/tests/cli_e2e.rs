//! End-to-end tests driving the compiled `lcmbinom` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

const GOLDEN_13_HIGHLIGHT: &str = include_str!("golden/triangle_rows13_highlight.txt");

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lcmbinom"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn fixture_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/b093430.txt")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn triangle_highlight_matches_golden() {
    let out = run(&["triangle", "--rows", "13", "--highlight"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), GOLDEN_13_HIGHLIGHT);
    assert!(stderr(&out).is_empty());
}

#[test]
fn triangle_ansi_highlighting() {
    let out = run(&["triangle", "--rows", "5", "--highlight", "--ansi"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("\x1b[32m2\x1b[0m"));
}

#[test]
fn entry_text_output() {
    let out = run(&["entry", "6", "3"]);
    assert_eq!(exit_code(&out), 0);
    let s = stdout(&out);
    for line in [
        "n: 6",
        "k: 3",
        "lcm_binom: 10",
        "binom: 20",
        "ratio: 2",
        "differs: true",
    ] {
        assert!(s.contains(line), "missing {line:?} in {s}");
    }
}

#[test]
fn entry_outside_triangle_is_usage_error() {
    let out = run(&["entry", "3", "5"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("exceeds"));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = run(&["triangle", "--bogus"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn zero_rows_is_usage_error() {
    let out = run(&["triangle", "--rows", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("triangle"));
}

#[test]
fn bfile_of_non_lcm_values_is_usage_error() {
    let out = run(&["triangle", "--format", "bfile", "--what", "ratio"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("invalid format"));
}

#[test]
fn column_csv() {
    let out = run(&["column", "3", "--count", "4", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let s = stdout(&out);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "n,k,lcm_binom,binom,ratio,differs");
    assert_eq!(lines[1], "3,3,1,1,1,false");
    assert_eq!(lines[2], "4,3,2,4,2,true");
    assert_eq!(lines[3], "5,3,10,10,1,false");
    assert_eq!(lines[4], "6,3,10,20,2,true");
}

#[test]
fn diagonal_text_matches_known_values() {
    let out = run(&["diagonal", "2", "--count", "10"]);
    assert_eq!(exit_code(&out), 0);
    let s = stdout(&out);
    let values: Vec<&str> = s
        .lines()
        .skip(1)
        .map(|l| l.split(' ').nth(1).unwrap())
        .collect();
    assert_eq!(
        values,
        vec!["1", "3", "6", "10", "5", "7", "14", "6", "3", "11"]
    );
}

#[test]
fn period_five_is_confirmed() {
    let out = run(&["period", "5"]);
    assert_eq!(exit_code(&out), 0);
    let s = stdout(&out);
    assert!(s.contains("exact_period: 12"));
    assert!(s.contains("prime_exponents: 2^2 3^1"));
    assert!(s.contains("farhi_kane_period(4): 12"));
    assert!(s.contains("bruteforce_minimal_period: 12 (horizon 53)"));
    assert!(s.contains("confirmed: true"));
}

#[test]
fn period_with_small_horizon_is_usage_error() {
    let out = run(&["period", "5", "--horizon", "10"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("too small"));
}

#[test]
fn ratios_line_matches_known_column() {
    let out = run(&["ratios", "6", "--count", "20"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("values: 1 1 2 2 5 1 2 2 1 5 2 2 1 1 10 2 1 1 2 10"));
}

#[test]
fn equality_counts_59_cells() {
    let out = run(&["equality", "--max-n", "12"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).ends_with("total: 59\n"));
}

#[test]
fn bound_six_holds() {
    let out = run(&["bound", "6"]);
    assert_eq!(exit_code(&out), 0);
    let s = stdout(&out);
    assert!(s.contains("lcm(1..n): 60"));
    assert!(s.contains("bound n*4^n: 24576"));
    assert!(s.contains("holds: true"));
}

#[test]
fn verify_all_passes_at_small_scale() {
    let out = run(&["verify", "all", "--max-n", "60", "--max-k", "6"]);
    assert_eq!(exit_code(&out), 0);
    let s = stdout(&out);
    for suite in ["integrality", "divisibility", "period", "omega", "bounds"] {
        assert!(s.contains(&format!("{suite}: ")), "missing suite {suite}");
        assert!(
            s.contains("0 violations"),
            "suite {suite} reported violations"
        );
    }
    assert!(!s.contains("violation:"));
}

#[test]
fn verify_with_undersized_horizon_fails() {
    let out = run(&["verify", "period", "--max-k", "3", "--horizon", "10"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).contains("violation: k=3"));
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = run(&["verify", "everything"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn oeis_check_fixture_passes() {
    let out = run(&["oeis-check", fixture_path().to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let s = stdout(&out);
    assert!(s.contains("sequence: A093430"));
    assert!(s.contains("verified: 91"));
    assert!(s.contains("mismatches: 0"));
}

#[test]
fn oeis_check_corrupted_fails_with_one_mismatch() {
    let fixture = std::fs::read_to_string(fixture_path()).unwrap();
    let corrupted = fixture.replace("\n14 2\n", "\n14 7\n");
    assert_ne!(corrupted, fixture);
    let path = std::env::temp_dir().join("lcmbinom_corrupted_b093430.txt");
    std::fs::write(&path, corrupted).unwrap();
    let out = run(&["oeis-check", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(exit_code(&out), 1);
    let s = stdout(&out);
    assert!(s.contains("mismatches: 1"));
    assert!(s.contains("mismatch at index 14 (n=4, k=3): snapshot 7, computed 2"));
}

#[test]
fn oeis_check_malformed_fails() {
    let path = std::env::temp_dir().join("lcmbinom_malformed_bfile.txt");
    std::fs::write(&path, "1 1\nnot a term\n").unwrap();
    let out = run(&["oeis-check", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("malformed b-file"));
}

#[test]
fn oeis_check_missing_file_is_usage_error() {
    let out = run(&["oeis-check", "/nonexistent/path/b.txt"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn triangle_bfile_export_matches_fixture_terms() {
    let out = run(&["triangle", "--rows", "13", "--format", "bfile"]);
    assert_eq!(exit_code(&out), 0);
    let fixture = std::fs::read_to_string(fixture_path()).unwrap();
    let data: Vec<&str> = fixture
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .collect();
    let exported: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(exported, data);
}

#[test]
fn json_entry_schema() {
    let out = run(&["entry", "9", "4", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.len(), 1);
    assert_eq!(v[0]["lcm_binom"], "42");
    assert_eq!(v[0]["binom"], "126");
    assert_eq!(v[0]["ratio"], "3");
    assert_eq!(v[0]["differs"], true);
}
