//! End-to-end tests of the `spinshift` binary: subcommand output, exit
//! codes, and CSV byte determinism against the committed golden file.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn spinshift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinshift"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn verify_passes_with_default_tolerances() {
    let output = spinshift(&["verify"]);
    assert!(output.status.success(), "{}", stdout(&output));
    let text = stdout(&output);
    for suite in [
        "clifford-algebra",
        "spinor-contracts",
        "bilinear-identities",
        "oracle-equivalence",
        "halving-and-differences",
    ] {
        assert!(text.contains(suite), "missing suite line for {suite}");
    }
    assert!(text.contains("0 failures"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_reports_floating_point_floor_under_tight_tolerance() {
    let output = spinshift(&["verify", "--tolerance", "1e-18"]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("FAIL"));
    assert!(text.contains("tolerance 1.000e-18"));
}

#[test]
fn verify_rejects_nonpositive_tolerance() {
    let output = spinshift(&["verify", "--tolerance", "-1"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn shift_full_at_rest() {
    let output = spinshift(&[
        "shift",
        "--k",
        "0",
        "--lambda-plus",
        "1,0",
        "--lambda-minus",
        "0,0",
        "--a0",
        "1",
        "--a3",
        "1",
        "--mode",
        "full",
        "--coupling",
        "unit",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("mode full"));
    assert!(
        text.lines()
            .any(|l| l.starts_with("total") && l.contains("2.00000000e0")),
        "{text}"
    );
}

#[test]
fn shift_transverse_potential_gives_zero_in_full_mode() {
    let output = spinshift(&[
        "shift",
        "--k",
        "1.3",
        "--lambda-plus",
        "0.6,0.2",
        "--lambda-minus",
        "0.3,-0.7",
        "--a1",
        "1",
        "--mode",
        "full",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(
        text.lines()
            .any(|l| l.starts_with("total") && l.contains("0.00000000e0")),
        "{text}"
    );
}

#[test]
fn printed_closed_form_agrees_with_printed_oracle() {
    let output = spinshift(&[
        "shift",
        "--k",
        "2.4",
        "--lambda-plus",
        "0.36,-0.48",
        "--lambda-minus",
        "0.6,0.53",
        "--a0",
        "0.7",
        "--a1",
        "-0.4",
        "--a2",
        "0.9",
        "--a3",
        "0.2",
        "--mode",
        "nrl",
        "--coupling",
        "natural",
    ]);
    assert!(output.status.success());
    // every deviation cell in the table stays at floating-point noise level
    for line in stdout(&output).lines().skip(2) {
        let deviation: f64 = line
            .split_whitespace()
            .last()
            .unwrap()
            .parse()
            .expect("deviation column should be numeric");
        assert!(deviation < 1e-12, "{line}");
    }
}

#[test]
fn shift_rejects_zero_state() {
    let output = spinshift(&[
        "shift",
        "--lambda-plus",
        "0,0",
        "--lambda-minus",
        "0,0",
        "--a0",
        "1",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn shift_rejects_malformed_complex() {
    let output = spinshift(&["shift", "--lambda-plus", "banana"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn sweep_matches_committed_golden_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("sweep.csv");
    let output = spinshift(&["sweep", "--out", out.to_str().unwrap()]);
    assert!(output.status.success());
    let written = std::fs::read_to_string(&out).unwrap();
    let golden = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/sweep_default.csv"),
    )
    .unwrap();
    assert_eq!(written, golden, "sweep output drifted from the golden file");
}

#[test]
fn sweep_row_count_honors_steps() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("two.csv");
    let output = spinshift(&[
        "sweep",
        "--k-min",
        "0",
        "--k-max",
        "1",
        "--steps",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    let written = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = written.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "k_mev,full,nrl_achiral,nrl_pol_r,nrl_pol_l");
    assert!(lines[1].starts_with("0.00000000e0,"));
    assert!(lines[2].starts_with("1.00000000e0,"));
}

#[test]
fn sweep_usage_and_io_errors() {
    let output = spinshift(&["sweep", "--steps", "1", "--out", "/tmp/unused.csv"]);
    assert_eq!(output.status.code(), Some(2), "invalid config is a usage error");

    let output = spinshift(&["sweep", "--out", "/nonexistent_dir/sweep.csv"]);
    assert_eq!(output.status.code(), Some(1), "unwritable path is a runtime error");
}

#[test]
fn scenario_defaults_report() {
    let output = spinshift(&["scenario"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("ratio ultra/slow          : 2.23774468e1"), "{text}");
    assert!(text.contains("reference estimate        : 1.60000000e-1 MeV"));
    assert!(text.contains("Zeeman comparison         : -1.73651454e-8 eV"));
}

#[test]
fn scenario_stationary_sentinel() {
    let output = spinshift(&["scenario", "--gamma", "1"]);
    assert!(output.status.success());
    assert!(stdout(&output).contains("infinite"));
}

#[test]
fn scenario_rejects_bad_gamma() {
    let output = spinshift(&["scenario", "--gamma", "0.5"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let output = spinshift(&["frobnicate"]);
    assert_eq!(output.status.code(), Some(2));
}
