use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn drinfeld(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drinfeld"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_reports_frobenius_invariants() {
    let input = data("tau_squared.json");
    let out = drinfeld(&[
        "analyze",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["m"], "x^2+2*T^3");
    assert_eq!(v["height"], 2);
    assert_eq!(v["nk"], 3);
    assert_eq!(v["verdict"]["lhs"], 2);
    assert_eq!(v["verdict"]["rhs"], 3);
    assert_eq!(v["verdict"]["locally_maximal"], false);
}

#[test]
fn endring_emits_basis_and_gorenstein_data() {
    let input = data("nonkernel.json");
    let out = drinfeld(&[
        "endring",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rank"], 3);
    assert_eq!(v["index_over_a_pi"], "T+1");
    assert_eq!(v["gorenstein"], false);
    assert_eq!(v["gorenstein_at"][0]["prime"], "T+1");
    assert_eq!(v["gorenstein_at"][0]["gorenstein"], false);
    assert_eq!(v["basis"][1]["skew"], "tau^4");
    assert_eq!(v["mult_table"].as_array().unwrap().len(), 3);
}

#[test]
fn ideal_act_and_kernel_test() {
    let input = data("nonkernel.json");
    let ideal = data("nonkernel_ideal.json");
    let args = [
        "--input",
        input.to_str().unwrap(),
        "--ideal",
        ideal.to_str().unwrap(),
        "--format",
        "json",
    ];
    let out = drinfeld(&[&["ideal-act"], &args[..]].concat());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["u"], "(t^3+t+1)+(t^3+t^2)*tau+(t+1)*tau^2+tau^3");
    assert_eq!(v["norm"], "T^3+T^2+T+1");
    assert_eq!(v["kernel_ideal"], false);
    assert_eq!(v["witness"], "(T^2+1)");
    assert_eq!(v["multiplicator_ring_in_end_psi"], true);

    let out = drinfeld(&[&["kernel-test"], &args[..]].concat());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kernel_ideal"], false);
    assert_eq!(v["annihilator_norm"], "T^2+1");
}

#[test]
fn text_output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.txt");
    let input = data("nonkernel.json");
    let out = drinfeld(&[
        "analyze",
        "--input",
        input.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(out_path).unwrap();
    assert!(text.contains("m(x) = x^3+T*x^2+x+(T^4+T+1)"));
    assert!(text.contains("locally maximal at pi: true"));
}

#[test]
fn census_writes_deterministic_jsonl() {
    let dir = tempfile::tempdir().unwrap();
    let input = data("census_f4_rank2.json");
    let mut runs = Vec::new();
    for (i, jobs) in ["1", "4"].iter().enumerate() {
        let path = dir.path().join(format!("census{i}.jsonl"));
        let out = drinfeld(&[
            "census",
            "--input",
            input.to_str().unwrap(),
            "--out",
            path.to_str().unwrap(),
            "--jobs",
            jobs,
        ]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(String::from_utf8_lossy(&out.stdout).contains("0 violations"));
        runs.push(std::fs::read_to_string(path).unwrap());
    }
    assert_eq!(runs[0], runs[1]);
    let lines: Vec<Value> = runs[0]
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines[0]["kind"], "header");
    assert_eq!(lines[0]["schema_version"], 1);
    assert_eq!(lines[0]["modules"], 36);
    assert_eq!(lines.len(), 1 + 18);
    let sizes: u64 = lines[1..]
        .iter()
        .map(|l| l["class_size"].as_u64().unwrap())
        .sum();
    assert_eq!(sizes, 36);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"field": {"p": 4, "n": 2}, "phi_T": [[1], [1]]}"#).unwrap();
    assert_eq!(
        drinfeld(&["analyze", "--input", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(
        drinfeld(&["analyze", "--input", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(drinfeld(&["analyze"]).status.code(), Some(2));
    let input = data("nonkernel.json");
    assert_eq!(
        drinfeld(&["kernel-test", "--input", input.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    std::fs::write(
        &bad,
        r#"{"field": {"p": 2, "n": 2}, "phi_T": [[], [], [1]]}"#,
    )
    .unwrap();
    let out = drinfeld(&["endring", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not commutative"));
}

#[test]
fn paper_examples_report() {
    let out = drinfeld(&["paper-examples", "--format", "json"]);
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    let failed = checks.iter().filter(|c| c["status"] == "FAIL").count();
    assert_eq!(out.status.code(), Some(if failed == 0 { 0 } else { 1 }));
    let discrepancies: Vec<&str> = checks
        .iter()
        .filter(|c| c["status"] == "DISCREPANCY")
        .map(|c| c["example"].as_str().unwrap())
        .collect();
    assert_eq!(discrepancies, ["sextic-tau4", "octic", "height-three"]);
}
