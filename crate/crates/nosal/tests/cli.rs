//! End-to-end tests of the `nosal` binary surface.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use nosal::codec::graph6_decode;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nosal"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn nosal");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("wait")
}

#[test]
fn gen_emits_graph6_and_predictions() {
    let out = bin()
        .args(["gen", "book-core", "--m", "101", "--encoding", "g6"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let g6 = String::from_utf8(out.stdout).unwrap();
    let g = graph6_decode(g6.trim()).unwrap();
    assert_eq!(g.m(), 101);
    let pred = String::from_utf8(out.stderr).unwrap();
    assert!(pred.contains("\"predictions\""), "prediction block missing");
}

#[test]
fn gen_emits_edge_list() {
    let out = bin()
        .args(["gen", "prism-blowup", "--k", "2", "--encoding", "edges"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed = nosal::from_edge_list(&text).unwrap();
    assert_eq!(parsed.graph.n(), 12);
    assert_eq!(parsed.graph.m(), 39);
}

#[test]
fn gen_turan_and_multipartite() {
    let out = bin().args(["gen", "turan", "--n", "9", "--r", "3"]).output().unwrap();
    assert!(out.status.success());
    let parsed = nosal::from_edge_list(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(parsed.graph.m(), 27);
    let out = bin()
        .args(["gen", "complete-multipartite", "--parts", "2,2,2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let parsed = nosal::from_edge_list(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(parsed.graph.m(), 12);
}

#[test]
fn analyze_reads_edge_list_on_stdin() {
    let out = run_with_stdin(&["analyze", "-"], "0 1\n1 2\n0 2\n");
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("analyze emits JSON");
    assert_eq!(doc["counts"]["m"], 3);
    assert_eq!(doc["counts"]["triangles"], 1);
    let lambda = doc["lambda"].as_f64().unwrap();
    assert!((lambda - 2.0).abs() < 1e-8);
    assert!(doc["nosal"].as_str().unwrap().contains("CertifiedYes"));
}

#[test]
fn analyze_reads_graph6_on_stdin() {
    let out = run_with_stdin(&["analyze", "-"], "Bw\n");
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["counts"]["n"], 3);
    assert_eq!(doc["counts"]["m"], 3);
}

#[test]
fn verify_exits_zero_without_failures() {
    let out = bin()
        .args([
            "verify",
            "--families",
            "book-core,prism-blowup",
            "--m-min",
            "100",
            "--m-max",
            "400",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "verify exited nonzero");
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.starts_with("claim,"));
    assert!(csv.contains("Thm1.2"));
    assert!(!csv.contains(",fail,"));
}

#[test]
fn dichotomy_reports_branch() {
    let out = run_with_stdin(&["dichotomy", "-", "--eps", "0.1"], "0 1\n1 2\n2 3\n3 0\n");
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["branch"].get("Bipartite").is_some(), "{doc}");
}

#[test]
fn search_emits_record() {
    let out = bin()
        .args([
            "search",
            "--objective",
            "min-bk-ratio",
            "--m",
            "84",
            "--steps",
            "200",
            "--seed",
            "5",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["m"], 84);
    assert_eq!(doc["certified"], true);
    let g = graph6_decode(doc["best_graph_g6"].as_str().unwrap()).unwrap();
    assert_eq!(g.m(), 84);
}

#[test]
fn blowup_reads_weighted_json() {
    let weighted = serde_json::json!({
        "w": [0.25, 0.25, 0.25, 0.25],
        "p": { "0-1": 1.0, "1-2": 1.0, "2-3": 1.0, "0-3": 1.0 }
    })
    .to_string();
    let out = run_with_stdin(&["blowup", "-", "--N", "40", "--seed", "3"], &weighted);
    assert!(out.status.success());
    let g6 = String::from_utf8(out.stdout).unwrap();
    let g = graph6_decode(g6.trim()).unwrap();
    assert_eq!(g.n(), 40);
    // p = 1 blowup of C4 with parts of 10: 4 * 100 edges
    assert_eq!(g.m(), 400);
}

#[test]
fn table1_renders_text() {
    let out = bin()
        .args(["table1", "--m", "300", "--format", "text"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("book_size"));
    assert!(text.contains("kites"));
}

#[test]
fn verify_output_is_identical_across_processes() {
    let args = [
        "verify",
        "--families",
        "book-core",
        "--m-min",
        "100",
        "--m-max",
        "300",
        "--seed",
        "17",
    ];
    let a = bin().args(args).output().unwrap();
    let b = bin().args(args).output().unwrap();
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_input_exits_with_error() {
    let out = run_with_stdin(&["analyze", "-"], "0 0\n");
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("self-loop"));
    let out = bin().args(["gen", "no-such-family"]).output().unwrap();
    assert!(!out.status.success());
}
