//! End-to-end checks of the binary: output text, exit codes, and report
//! files on disk.

use std::process::{Command, Output};

fn zv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn dual_prints_index_text() {
    let out = zv(&["dual", "2,1,3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1,3,1,1\n");
}

#[test]
fn mhs_and_zvalue_print_residues() {
    assert_eq!(stdout(&zv(&["mhs", "2,1", "-p", "7"])), "3\n");
    assert_eq!(stdout(&zv(&["mhs", "1,2", "-p", "7", "--star"])), "4\n");
    assert_eq!(stdout(&zv(&["zvalue", "5", "-p", "7"])), "4\n");
    assert_eq!(stdout(&zv(&["zvalue", "4", "-p", "11"])), "0\n");
}

#[test]
fn coeff_prints_n_and_half() {
    assert_eq!(
        stdout(&zv(&["coeff", "5", "2", "1", "1"])),
        "N = -10\nN/2 = -5\n"
    );
    assert_eq!(
        stdout(&zv(&["coeff", "5", "3", "1", "1"])),
        "N = 5\nN/2 = 5/2\n"
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(zv(&["dual", "2,,3"]).status.code(), Some(2));
    assert_eq!(zv(&["zvalue", "5", "-p", "5"]).status.code(), Some(2));
    assert_eq!(zv(&["mhs", "1", "-p", "6"]).status.code(), Some(2));
    assert_eq!(zv(&["verify", "--kinds", "bogus"]).status.code(), Some(2));
    assert_eq!(zv(&["verify", "--primes", "10..5"]).status.code(), Some(2));
    assert_eq!(zv(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn small_verify_passes_and_writes_report() {
    let dir = std::env::temp_dir().join("zv-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = zv(&[
        "verify",
        "--kinds",
        "main,duality",
        "--max-weight",
        "5",
        "--primes",
        "5..31",
        "--format",
        "json",
        "--stable",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    assert_eq!(
        report["config"]["kinds"],
        serde_json::json!(["DUALITY", "MAIN"])
    );
    let records = report["records"].as_array().unwrap();
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| r["elapsed_us"] == 0));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn skipped_only_range_exits_zero() {
    let out = zv(&[
        "verify",
        "--kinds",
        "duality",
        "--max-weight",
        "5",
        "--primes",
        "3..4",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("checks: 0"), "unexpected output: {text}");
}

#[test]
fn csv_output_has_contract_columns() {
    let out = zv(&[
        "verify",
        "--kinds",
        "hook",
        "--max-weight",
        "5",
        "--primes",
        "5..13",
        "--format",
        "csv",
        "--stable",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "kind,params,prime,lhs,rhs,pass,elapsed_us"
    );
    assert!(lines.next().unwrap().starts_with("HOOK,"));
}
