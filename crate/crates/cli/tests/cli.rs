//! End-to-end runs of the `dgs` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn dgs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dgs"))
        .args(args)
        .env("DGS_WORKERS", "2")
        .output()
        .expect("binary runs")
}

fn dgs_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dgs"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

#[test]
fn analyze_example1_json_matches_golden() {
    let o = dgs(&["analyze", "fixture:example1", "--mode", "main-only", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("example1_main_only.json"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["theta"], 27);
}

#[test]
fn analyze_example3_is_inconclusive_on_three() {
    let o = dgs(&["analyze", "fixture:example3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(10));
    assert_eq!(stdout(&o), golden("example3_combined.csv"));
    let o = dgs(&["analyze", "fixture:example3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["unresolved_primes"], serde_json::json!([3]));
}

#[test]
fn example2_exit_codes_by_mode() {
    assert_eq!(dgs(&["analyze", "fixture:example2", "--mode", "main-only"]).status.code(), Some(0));
    assert_eq!(dgs(&["analyze", "fixture:example2", "--mode", "old-ec-ic"]).status.code(), Some(10));
    assert_eq!(dgs(&["analyze", "fixture:example2", "--mode", "old-only"]).status.code(), Some(10));
}

#[test]
fn invariants_example2_matches_golden() {
    let o = dgs(&["invariants", "fixture:example2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text, golden("example2_invariants.txt"));
    assert!(text.contains("1,1,1,1,1,2,2,6,6,798"));
}

#[test]
fn invariants_example3_lists_phi3() {
    let text = stdout(&dgs(&["invariants", "fixture:example3"]));
    assert!(text.contains("(x+1)^2 (x+2)^3"), "{text}");
    assert!(text.contains("(x+2)^2"), "{text}");
}

#[test]
fn uncontrollable_graph_from_stdin() {
    let o = dgs_stdin(&["invariants"], "0 1\n1 0\n");
    assert!(stdout(&o).contains("not controllable: det W = 0"));
    let o = dgs_stdin(&["analyze", "-"], "A_\n");
    assert_eq!(o.status.code(), Some(20));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "").unwrap();
    let o = dgs(&["analyze", empty.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());

    let bad = dir.path().join("bad.g6");
    std::fs::write(&bad, "0 1\n0 0\n").unwrap();
    assert_eq!(dgs(&["analyze", bad.to_str().unwrap()]).status.code(), Some(2));

    let truncated = dgs_stdin(&["analyze"], "K@nn\n");
    assert_eq!(truncated.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&truncated.stderr).to_string();
    assert!(msg.contains("offset") || msg.contains("byte"), "{msg}");

    assert_eq!(dgs(&["analyze", "/nonexistent/graph"]).status.code(), Some(2));
}

#[test]
fn verify_q_certificate_and_rejections() {
    let o = dgs(&["verify-q", "fixture:example3", "--q", "fixture:example3_q", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("example3_verify_q.json"));

    let o = dgs(&["verify-q", "fixture:example3", "--q", "fixture:example3_q_misordered"]);
    assert_eq!(o.status.code(), Some(30));

    let dir = tempfile::tempdir().unwrap();
    let id = dir.path().join("id.txt");
    let rows: String = (0..14)
        .map(|i| (0..14).map(|j| if i == j { "1" } else { "0" }).collect::<Vec<_>>().join(" ") + "\n")
        .collect();
    std::fs::write(&id, rows).unwrap();
    let o = dgs(&["verify-q", "fixture:example3", "--q", id.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["level"], 1);
    assert_eq!(v["mate_graph6"], v["graph6"]);

    let o = dgs(&["verify-q", "fixture:example1", "--q", "fixture:example3_q"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn experiment_output_is_worker_independent() {
    let args = |w: &'static str| ["experiment", "--n", "8", "--samples", "300", "--seed", "5", "--workers", w, "--format", "json", "--verbose"];
    let one = dgs(&args("1"));
    let many = dgs(&args("8"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    let csv = stdout(&dgs(&["experiment", "--n", "8", "--samples", "50", "--modes", "old-only,main-only"]));
    assert!(csv.starts_with("n,samples,seed,theta_odd,OLD_ONLY,MAIN_ONLY\n8,50,0,"), "{csv}");
}

#[test]
fn fixtures_listing() {
    let list = stdout(&dgs(&["fixtures", "list"]));
    for name in ["example1", "example2", "example3", "example3_q"] {
        assert!(list.contains(&format!("fixture:{name} ")), "{list}");
    }
    let g6 = stdout(&dgs(&["fixtures", "cat", "example2.g6"]));
    assert_eq!(g6.trim(), "IYtVAnvK?");
    assert_eq!(dgs(&["fixtures", "cat", "nope"]).status.code(), Some(2));
}
