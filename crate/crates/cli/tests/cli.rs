//! End-to-end tests against the built binary: exit codes, output
//! formats, report files, and config precedence.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn dpjordan(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dpjordan"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn jordan_s5_prints_120() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["jordan", "s5"], dir.path());
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("jordan constant: 120"), "{text}");
    assert!(text.contains("fast-path"), "{text}");
}

#[test]
fn jordan_dp6_example_prints_4_as_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["--json", "jordan", "ex-dp6:n=5"], dir.path());
    assert_eq!(exit_code(&out), 0);
    let value: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["jordan"], Value::from(4));
    assert_eq!(value["group_order"], Value::from(100));
    assert_eq!(value["nu"], Value::from(4));
}

#[test]
fn jordan_abelian_group_prints_1() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["--json", "jordan", "cyclic:12"], dir.path());
    assert_eq!(exit_code(&out), 0);
    let value: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["jordan"], Value::from(1));
    assert_eq!(value["witness_subgroup"]["order"], Value::from(12));
}

#[test]
fn jordan_bad_spec_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["jordan", "frobnicate:9"], dir.path());
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn jordan_lower_bound_with_tight_cap_still_exits_0() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(
        &["--subgroup-cap", "16", "--json", "jordan", "ex-dp6:n=5"],
        dir.path(),
    );
    assert_eq!(exit_code(&out), 0);
    let value: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["jordan"], Value::from("lower-bound-only"));
    assert_eq!(value["method"], Value::from("lower-bound-only"));
}

#[test]
fn lines_degree_4_has_16_lines_and_order_1920() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["--json", "lines", "--degree", "4"], dir.path());
    assert_eq!(exit_code(&out), 0);
    let value: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["line_count"], Value::from(16));
    assert_eq!(value["aut_order"], Value::from(1920));
    assert_eq!(value["lines"][15], Value::from("Q"));
}

#[test]
fn lines_degree_6_is_the_hexagon() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["lines", "--degree", "6"], dir.path());
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("lines: 6"), "{text}");
    assert!(text.contains("automorphism group order: 12"), "{text}");
}

#[test]
fn lines_degree_9_has_no_lines() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["--json", "lines", "--degree", "9"], dir.path());
    assert_eq!(exit_code(&out), 0);
    let value: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["line_count"], Value::from(0));
}

#[test]
fn lines_degree_out_of_range_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["lines", "--degree", "2"], dir.path());
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn weyl_five_cycle_fixes_q() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["weyl", "(1 2 3 4 5)"], dir.path());
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("fixed lines: Q"));
}

#[test]
fn weyl_iota12_swaps_e1_e2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["weyl", "i12"], dir.path());
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("(E1 E2)"));
}

#[test]
fn weyl_odd_weight_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["weyl", "i1"], dir.path());
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("odd"));
}

#[test]
fn verify_single_check_writes_report_and_exits_0() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["verify", "--only", "lemma-iota12"], dir.path());
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("pass  lemma-iota12"), "{text}");
    assert!(text.contains("1 passed, 0 failed"), "{text}");
    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap())
            .unwrap();
    assert_eq!(report["version"], Value::from("1"));
    assert_eq!(report["checks"][0]["check_id"], Value::from("lemma-iota12"));
    assert_eq!(report["summary"]["pass_count"], Value::from(1));
}

#[test]
fn verify_unknown_only_id_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["verify", "--only", "no-such-check"], dir.path());
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("matches no check"));
}

#[test]
fn verify_unwritable_out_path_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(
        &[
            "verify",
            "--only",
            "cross-line-counts",
            "--out",
            "/nonexistent-dir/x.json",
        ],
        dir.path(),
    );
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn deterministic_reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "verify",
        "--only",
        "hexagon",
        "--deterministic",
        "--out",
        "a.json",
    ];
    assert_eq!(exit_code(&dpjordan(&args, dir.path())), 0);
    let mut args2 = args;
    args2[5] = "b.json";
    assert_eq!(exit_code(&dpjordan(&args2, dir.path())), 0);
    let a = std::fs::read_to_string(dir.path().join("a.json")).unwrap();
    let b = std::fs::read_to_string(dir.path().join("b.json")).unwrap();
    // out path is part of the resolved config; normalize it before comparing
    assert_eq!(a.replace("a.json", "x.json"), b.replace("b.json", "x.json"));
}

#[test]
fn config_file_is_honored_and_flags_override_it() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("caps.cfg"),
        "# tight caps\nsubgroup_cap = 16\n",
    )
    .unwrap();
    // config alone: lower bound
    let out = dpjordan(
        &["--config", "caps.cfg", "--json", "jordan", "ex-dp6:n=5"],
        dir.path(),
    );
    assert_eq!(exit_code(&out), 0);
    let value: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["jordan"], Value::from("lower-bound-only"));
    // flag overrides config: exact again
    let out = dpjordan(
        &[
            "--config",
            "caps.cfg",
            "--subgroup-cap",
            "512",
            "--json",
            "jordan",
            "ex-dp6:n=5",
        ],
        dir.path(),
    );
    let value: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["jordan"], Value::from(4));
}

#[test]
fn missing_config_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(&["--config", "nope.cfg", "jordan", "s3"], dir.path());
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn perm_spec_and_combinators_build() {
    let dir = tempfile::tempdir().unwrap();
    let out = dpjordan(
        &["--json", "jordan", "perm:5:(1 2);(1 2 3 4 5)"],
        dir.path(),
    );
    assert_eq!(exit_code(&out), 0);
    let value: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["group_order"], Value::from(120));
    assert_eq!(value["jordan"], Value::from(120));

    let out = dpjordan(&["--json", "jordan", "swapwreath(s3)"], dir.path());
    let value: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["group_order"], Value::from(72));
}
