//! End-to-end tests that drive the compiled `qsym` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn qsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsym"))
        .args(args)
        // Keep stderr deterministic regardless of the invoking shell.
        .env_remove("RUST_BACKTRACE")
        .output()
        .expect("failed to spawn qsym binary")
}

fn stdout_of(args: &[&str]) -> String {
    let out = qsym(args);
    assert!(
        out.status.success(),
        "qsym {:?} failed.\nstdout: {}\nstderr: {}",
        args,
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("stdout not utf-8")
}

fn failure_of(args: &[&str]) -> (Output, String) {
    let out = qsym(args);
    assert!(
        !out.status.success(),
        "qsym {:?} unexpectedly succeeded: {}",
        args,
        String::from_utf8_lossy(&out.stdout)
    );
    let stderr = String::from_utf8_lossy(&out.stderr).into_owned();
    (out, stderr)
}

#[test]
fn descent_type_a_example() {
    assert_eq!(stdout_of(&["descent", "-f", "A", "3,4,5,2,6,1"]), "3,2,1\n");
}

#[test]
fn descent_signed_example() {
    assert_eq!(
        stdout_of(&["descent", "-f", "S", "-3,4,5,-6,-2,-7,1"]),
        "-1,2,-2,-1,1\n"
    );
}

#[test]
fn descent_type_b_example() {
    assert_eq!(stdout_of(&["descent", "-f", "B", "-3,2,-1"]), "0,2,1\n");
}

#[test]
fn descent_json_output() {
    let raw = stdout_of(&["descent", "-f", "A", "--format", "json", "3,4,5,2,6,1"]);
    let value: serde_json::Value = serde_json::from_str(&raw).expect("invalid json");
    assert_eq!(value["flavor"], "A");
    assert_eq!(value["window"], "3,4,5,2,6,1");
    assert_eq!(value["index"], "3,2,1");
}

#[test]
fn count_signed_example() {
    assert_eq!(stdout_of(&["count", "-f", "S", "-n", "4"]), "54\n");
}

#[test]
fn count_matches_closed_forms() {
    assert_eq!(stdout_of(&["count", "-f", "A", "-n", "10"]), "512\n");
    assert_eq!(stdout_of(&["count", "-f", "B", "-n", "10"]), "1024\n");
    assert_eq!(stdout_of(&["count", "-f", "S", "-n", "1"]), "2\n");
}

#[test]
fn multiply_type_a_example() {
    assert_eq!(
        stdout_of(&["multiply", "-f", "A", "-n", "2", "1,1", "1,1"]),
        "1*(2)\n"
    );
}

#[test]
fn multiply_infers_degree_and_reports_all_terms() {
    // Degree comes from the indices when -n is omitted.
    let line = stdout_of(&["multiply", "-f", "A", "2,1", "2,1"]);
    assert!(line.contains("*("), "unexpected product line: {line}");
    // Every one of the |class|^2 = 4 composed pairs lands in exactly one
    // class, and each member of a class receives the same count, so the
    // counts weighted by class size must sum to 4.
    let weighted: i64 = line
        .trim()
        .split(" + ")
        .map(|term| {
            let count: i64 = term.split('*').next().unwrap().parse().unwrap();
            let gamma = term
                .split_once("*(")
                .unwrap()
                .1
                .trim_end_matches(')')
                .to_string();
            let size = match gamma.as_str() {
                "3" | "1,1,1" => 1,
                "2,1" | "1,2" => 2,
                other => panic!("unexpected composition {other}"),
            };
            count * size
        })
        .sum();
    assert_eq!(weighted, 4, "product must account for every composed pair");
}

#[test]
fn multiply_rejects_mismatched_degrees() {
    let (_, stderr) = failure_of(&["multiply", "-f", "A", "2,1", "1,1"]);
    assert!(
        stderr.contains("degree"),
        "stderr should mention the degree mismatch: {stderr}"
    );
}

#[test]
fn expand_fundamental_and_monomial() {
    assert_eq!(
        stdout_of(&["expand", "-f", "A", "-N", "3", "2,1"]),
        "x1*x2*x3 + x1^2*x2 + x1^2*x3 + x2^2*x3\n"
    );
    assert_eq!(
        stdout_of(&["expand", "-f", "A", "-N", "3", "--basis", "monomial", "2,1"]),
        "x1^2*x2 + x1^2*x3 + x2^2*x3\n"
    );
    // Colored signed expansion over the interleaved alphabet.
    assert_eq!(
        stdout_of(&["expand", "-f", "S", "-N", "3", "--basis", "M", "-1,1,-1"]),
        "u1*u2*v1 + u1*u3*v1 + u1*u3*v2 + u2*u3*v2\n"
    );
}

#[test]
fn gamma_window_matches_expand_of_descent_index() {
    // The generating function of a window depends only on its descent index.
    let via_gamma = stdout_of(&["gamma", "-f", "B", "-N", "4", "--", "-3,2,-1"]);
    let via_expand = stdout_of(&["expand", "-f", "B", "-N", "4", "0,2,1"]);
    assert_eq!(via_gamma, via_expand);
}

#[test]
fn gamma_reads_poset_files() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chain.poset");
    std::fs::write(&path, "3\n1 < 2\n2 < 3\n").unwrap();
    let out = stdout_of(&["gamma", "-f", "A", "-N", "2", "--poset", path.to_str().unwrap()]);
    // Weak chain of length 3 on two variables: all monomials of degree 3.
    assert_eq!(out, "x1*x2^2 + x1^2*x2 + x1^3 + x2^3\n");
}

#[test]
fn gamma_requires_exactly_one_input() {
    let (_, stderr) = failure_of(&["gamma", "-f", "A", "-N", "2"]);
    assert!(
        stderr.contains("window") || stderr.contains("poset"),
        "stderr should explain the missing input: {stderr}"
    );
    // window and --poset together are rejected by argument parsing.
    let out = qsym(&["gamma", "-f", "A", "-N", "2", "1,2", "--poset", "x.poset"]);
    assert!(!out.status.success());
}

#[test]
fn table_csv_header_and_shape() {
    let csv = stdout_of(&["table", "-f", "A", "-n", "2", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("flavor,n,alpha,beta,gamma,count"));
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.len(), 4, "degree-2 type A table has four entries");
    assert!(body.contains(&"A,2,2,2,2,1"));
    assert!(body.contains(&"A,2,\"1,1\",\"1,1\",2,1"));
}

#[test]
fn table_text_lists_products() {
    let text = stdout_of(&["table", "-f", "S", "-n", "1"]);
    // Degree-1 signed table: classes (1) and (-1) with multiplication rule
    // matching the two-element group of signs.
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.contains(&"u(1) * u(1) = 1*(1)"));
    assert!(lines.contains(&"u(1) * u(-1) = 1*(-1)"));
    assert!(lines.contains(&"u(-1) * u(1) = 1*(-1)"));
    assert!(lines.contains(&"u(-1) * u(-1) = 1*(1)"));
}

#[test]
fn table_json_mirrors_csv() {
    let raw = stdout_of(&["table", "-f", "A", "-n", "2", "--format", "json"]);
    let records: serde_json::Value = serde_json::from_str(&raw).expect("invalid json");
    let records = records.as_array().expect("expected a json array");
    assert_eq!(records.len(), 4);
    for record in records {
        assert_eq!(record["flavor"], "A");
        assert_eq!(record["n"], 2);
        assert_eq!(record["count"], 1);
    }
    assert_eq!(records[0]["alpha"], "2");
    assert_eq!(records[0]["gamma"], "2");
}

#[test]
fn cap_violation_mentions_override_flag() {
    let (_, stderr) = failure_of(&["table", "-f", "B", "-n", "5"]);
    assert!(
        stderr.contains("--cap-override"),
        "cap errors must point at --cap-override: {stderr}"
    );
    // The override lifts the cap for a degree we can still afford.
    let csv = stdout_of(&["multiply", "-f", "A", "-n", "7", "--cap-override", "7", "7", "7"]);
    assert_eq!(csv, "1*(7)\n");
}

#[test]
fn parse_errors_exit_nonzero() {
    let (_, stderr) = failure_of(&["descent", "-f", "A", "3,5"]);
    assert!(stderr.contains("out of range"), "stderr: {stderr}");
    failure_of(&["descent", "-f", "A", "not-a-window"]);
    failure_of(&["expand", "-f", "A", "-N", "3", "2,0,1"]);
    failure_of(&["count", "-f", "A", "-n", "0"]);
}

#[test]
fn csv_is_rejected_for_non_table_output() {
    let (_, stderr) = failure_of(&["descent", "-f", "A", "--format", "csv", "2,1"]);
    assert!(stderr.contains("csv"), "stderr: {stderr}");
}

#[test]
#[ignore = "larger tier; run with --include-ignored"]
fn verify_exits_zero_and_reports_every_check() {
    let out = qsym(&["verify"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(
        out.status.success(),
        "verify must exit 0 when all checks pass.\nstdout: {stdout}\nstderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let pass_lines = stdout.lines().filter(|l| l.starts_with("PASS")).count();
    assert!(pass_lines >= 10, "expected at least ten PASS lines:\n{stdout}");
    assert!(!stdout.contains("FAIL"), "no check may fail:\n{stdout}");
    assert!(stdout.contains("all"), "missing summary line:\n{stdout}");
}
