use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sw-forge")).args(args).output().expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter(|l| l.starts_with('{'))
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn temp_with(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn compute_from_edge_list() {
    let f = temp_with("5 4\n0 1\n1 2\n2 3\n3 4\n");
    let out = run(&["compute", "--input", f.path().to_str().unwrap(), "--k", "3"]);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    // triples on a path: sum of max - min = 30
    assert_eq!(v["sw"], 30);
    assert_eq!(v["k"], 3);
}

#[test]
fn compute_from_graph6_lines() {
    let f = temp_with(">>graph6<<A_\nC~\nBg\n");
    let out = run(&["compute", "--graph6", f.path().to_str().unwrap(), "--k", "2", "--fast"]);
    let sws: Vec<u64> = json_lines(&out).iter().map(|v| v["sw"].as_u64().unwrap()).collect();
    assert_eq!(sws, [1, 6, 4]);
}

#[test]
fn invert_unresolved_is_success() {
    let out = run(&["invert", "--k", "2", "--target", "2", "--n-max", "30"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["status"], "unresolved");
}

#[test]
fn invert_certificate_matches_library() {
    let out = run(&["invert", "--k", "3", "--target", "700"]);
    let v = &json_lines(&out)[0];
    let cert = sw_forge::invert(3, 700, 40).unwrap().unwrap();
    assert_eq!(v["status"], "certified");
    assert_eq!(v["verified"], true);
    assert_eq!(v["n"], cert.n);
    assert_eq!(v["hubs"], serde_json::json!(cert.spec.hubs()));
    let g = sw_forge::Graph::parse_graph6(v["graph6"].as_str().unwrap()).unwrap();
    assert_eq!(sw_forge::steiner_wiener(&g, 3).unwrap().value, 700);
}

#[test]
fn invert_batch_keeps_input_order() {
    let f = temp_with("900\n2 5\n# comment\n3 605\n");
    let out = run(&["invert", "--k", "3", "--batch", f.path().to_str().unwrap()]);
    let rows = json_lines(&out);
    let targets: Vec<u64> = rows.iter().map(|v| v["target"].as_u64().unwrap()).collect();
    assert_eq!(targets, [900, 5, 605]);
    assert_eq!(rows[1]["status"], "unresolved");
    assert_eq!(rows[2]["n"], 12);
}

#[test]
fn construct_hub_3_8_dot() {
    let out = run(&["construct", "--n", "12", "--hubs", "3,8", "--k", "2", "--format", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.starts_with("graph {"));
    assert_eq!(text.matches("--").count(), 11 + 3 + 8);
    let v = &json_lines(&out)[0];
    assert_eq!(v["predicted"], 110);
    assert_eq!(v["verified"], 110);
}

#[test]
fn represent_found_and_not_found() {
    let out = run(&["represent", "--m", "31", "--d", "2", "--max-x", "10"]);
    let v = &json_lines(&out)[0];
    assert_eq!(v["terms"], serde_json::json!([3, 8]));
    let out = run(&["represent", "--m", "2", "--d", "3", "--max-x", "10"]);
    assert!(out.status.success());
    assert_eq!(json_lines(&out)[0]["status"], "not_found");
}

#[test]
fn scan_report_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("w.csv");
    let out = run(&["scan", "--k", "2", "--limit", "27", "--csv", csv.to_str().unwrap()]);
    let v = &json_lines(&out)[0];
    assert_eq!(v["exceptions"], serde_json::json!([2, 5]));
    assert_eq!(v["status"], "complete");
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("value,graph6\n1,A_\n"));
    assert_eq!(text.lines().count(), 26);
}

#[test]
fn scan_partial_without_corpus() {
    let out = run(&["scan", "--k", "2", "--limit", "36"]);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!(v["status"], "partial");
    assert_eq!(v["missing"], serde_json::json!([9]));
}

#[test]
fn count_and_probe() {
    let out = run(&["count", "--d", "2", "--s", "2", "--m", "6", "--B", "4"]);
    let v = &json_lines(&out)[0];
    assert_eq!((v["N"].as_u64(), v["Nstar"].as_u64()), (Some(3), Some(2)));
    let out = run(&["count", "--d", "2", "--s", "4", "--probe", "1000", "--B", "floor"]);
    let v = &json_lines(&out)[0];
    assert_eq!((v["N"].as_u64(), v["Nstar"].as_u64()), (Some(612), Some(528)));
    let out = run(&["count", "--d", "1", "--lambdas", "1,1", "--m", "10", "--B", "10", "--distinct"]);
    let v = &json_lines(&out)[0];
    assert!(v.get("N").is_none());
    assert_eq!(v["Nstar"], 8);
}

#[test]
fn local_counts_every_residue() {
    let out = run(&["local", "--p", "2", "--k-exp", "2", "--d", "3", "--s", "18"]);
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|v| v["t"] == 1 && v["M"].as_u64().unwrap() > 0));
    let out = run(&["local", "--p", "2", "--k-exp", "1", "--d", "2", "--s", "1", "--m", "1"]);
    assert_eq!(json_lines(&out)[0]["M"], 2);
}

#[test]
fn steiner_distance_of_terminals() {
    let f = temp_with("5 4\n0 1\n1 2\n2 3\n3 4\n");
    let out = run(&["steiner", "--input", f.path().to_str().unwrap(), "--terminals", "4,0,2"]);
    let v = &json_lines(&out)[0];
    assert_eq!(v["distance"], 4);
    assert_eq!(v["terminals"], serde_json::json!([0, 2, 4]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["compute", "--k", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "--n", "3", "--hubs", "5", "--k", "2"]).status.code(), Some(1));
    assert_eq!(run(&["compute", "--input", "/nonexistent/g.edges", "--k", "2"]).status.code(), Some(1));
    assert_eq!(run(&["local", "--p", "4", "--k-exp", "1", "--d", "2", "--s", "2"]).status.code(), Some(1));
    let bad = temp_with("3 1\n0 0\n");
    assert_eq!(run(&["compute", "--input", bad.path().to_str().unwrap(), "--k", "2"]).status.code(), Some(1));
}

#[test]
fn thread_cap_and_determinism() {
    let a = Command::new(env!("CARGO_BIN_EXE_sw-forge"))
        .args(["scan", "--k", "3", "--limit", "60"])
        .env("SW_FORGE_THREADS", "1")
        .output()
        .unwrap();
    let b = run(&["scan", "--k", "3", "--limit", "60"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_sw-forge"))
        .args(["scan", "--k", "2", "--limit", "5"])
        .env("SW_FORGE_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
