use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const SINGLE_EDGE: &str = "p sp 2 1\ne 1 2 5\n";
const TRIANGLE: &str = "p sp 3 3\ne 1 2 10\ne 1 3 1\ne 3 2 2\n";
const DISCONNECTED: &str = "p sp 3 1\ne 1 2 4\n";
// heavy edge 1-3 scanned one level before the light chain 1-4-5-3 reaches 3
const RED_GADGET: &str = "p sp 6 6\ne 1 3 100\ne 1 4 1\ne 4 5 1\ne 5 3 1\ne 3 6 1\ne 6 2 1\n";
// grid instance where the search returns 22 without noticing; Dijkstra finds 21
const SILENT_MISS: &str = "p sp 6 7\ne 1 2 7\ne 1 3 12\ne 2 4 3\ne 3 4 1\ne 3 5 6\ne 4 6 16\ne 5 6 4\n";

fn bimeet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bimeet")).args(args).output().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn query(cmd: &str, graph: &str, s: &str, t: &str) -> Output {
    bimeet(&[cmd, "--json", "--graph", graph, "--source", s, "--target", t])
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn solve_prints_one_based_result() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.gr", SINGLE_EDGE);
    let out = query("solve", &g, "1", "2");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "OK");
    assert_eq!(v["cost"], 5);
    assert_eq!(v["path"], serde_json::json!([1, 2]));
    assert!(v["counters"]["edge_scans"].is_u64());
    // compact output is a single line
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim_end().lines().count(), 1);
}

#[test]
fn solve_same_endpoint() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.gr", TRIANGLE);
    let out = query("solve", &g, "3", "3");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["cost"], 0);
    assert_eq!(json(&out)["path"], serde_json::json!([3]));

    let out = query("verify", &g, "3", "3");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["bimeet_cost"], 0);
    assert_eq!(json(&out)["dijkstra_cost"], 0);
}

#[test]
fn solve_with_other_algorithms() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.gr", TRIANGLE);
    for (algo, cost) in [("dijkstra", 3), ("bfs", 1), ("unweighted", 1), ("bimeet", 3)] {
        let out = bimeet(&["solve", "--json", "--graph", &g, "--source", "1", "--target", "2", "--algo", algo]);
        assert_eq!(out.status.code(), Some(0), "{algo}");
        assert_eq!(json(&out)["cost"], cost, "{algo}");
    }
}

#[test]
fn unreachable_exits_2() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.gr", DISCONNECTED);
    let out = query("solve", &g, "1", "3");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["status"], "UNREACHABLE");
}

#[test]
fn wrong_graph_exits_3_and_verify_accepts_it() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.gr", RED_GADGET);
    let out = query("solve", &g, "1", "2");
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["status"], "WRONG_GRAPH");
    assert!(json(&out)["path"].is_null());

    let out = query("verify", &g, "1", "2");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["diff"], "wrong_graph_detected");
    assert_eq!(json(&out)["dijkstra_cost"], 5);
}

#[test]
fn verify_mismatch_exits_4() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.gr", SILENT_MISS);
    let out = query("verify", &g, "1", "6");
    assert_eq!(out.status.code(), Some(4));
    let v = json(&out);
    assert_eq!(v["diff"], "mismatch");
    assert_eq!(v["bimeet_cost"], 22);
    assert_eq!(v["dijkstra_cost"], 21);
    assert_eq!(v["constraint"]["verdict"], "VIOLATED");
}

#[test]
fn verify_layered_instance_matches() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("l.gr");
    let out = bimeet(&["gen", "--json", "--kind", "layered", "--n", "300", "--seed", "9", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let side = json(&out);
    assert_eq!(side["expected_verdict"], "SATISFIED");
    let (s, t) = (side["query"]["s"].to_string(), side["query"]["t"].to_string());
    let out = query("verify", out_path.to_str().unwrap(), &s, &t);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["diff"], "match");
}

#[test]
fn check_reports_verdicts() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "tri.gr", TRIANGLE);
    let out = query("check", &tri, "1", "2");
    assert_eq!(out.status.code(), Some(5));
    assert_eq!(
        json(&out),
        serde_json::json!({"verdict": "VIOLATED", "witness": {"w": 2, "cheap_cost": 3, "kmin": 1, "k": 2}})
    );

    let uniform = write(&dir, "u.gr", "p sp 4 4\ne 1 2 3\ne 2 3 3\ne 3 4 3\ne 4 1 3\n");
    let out = query("check", &uniform, "1", "3");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "SATISFIED");
    assert!(json(&out)["witness"].is_null());
}

#[test]
fn usage_errors_exit_1() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.gr", SINGLE_EDGE);
    assert_eq!(bimeet(&["solve", "--graph", &g, "--source", "1"]).status.code(), Some(1));
    assert_eq!(bimeet(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(query("solve", &g, "1", "3").status.code(), Some(1));
    assert_eq!(query("solve", &g, "0", "2").status.code(), Some(1));
    assert_eq!(bimeet(&["solve", "--graph", &g, "--source", "1", "--target", "2", "--algo", "astar"]).status.code(), Some(1));
    assert_eq!(bimeet(&["--help"]).status.code(), Some(0));
}

#[test]
fn missing_file_exits_6() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("nope.gr");
    let out = query("solve", missing.to_str().unwrap(), "1", "2");
    assert_eq!(out.status.code(), Some(6));
    assert!(out.stdout.is_empty());
}

#[test]
fn parse_errors_exit_1_with_line_number() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.gr", "p sp 2 1\ne 1 2 -3\n");
    let out = query("solve", &bad, "1", "2");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2: negative weight -3"));
}

fn gen_into(dir: &Path, name: &str, kind: &str, seed: &str) -> (Vec<u8>, Vec<u8>) {
    let path = dir.join(name);
    let out = bimeet(&["gen", "--kind", kind, "--n", "200", "--seed", seed, "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let sidecar = dir.join(format!("{name}.json"));
    (fs::read(&path).unwrap(), fs::read(sidecar).unwrap())
}

#[test]
fn gen_is_byte_identical_per_seed() {
    let dir = TempDir::new().unwrap();
    for kind in ["layered", "adversarial", "random", "grid"] {
        let a = gen_into(dir.path(), &format!("{kind}-a.gr"), kind, "17");
        let b = gen_into(dir.path(), &format!("{kind}-b.gr"), kind, "17");
        let c = gen_into(dir.path(), &format!("{kind}-c.gr"), kind, "18");
        assert_eq!(a, b, "{kind}");
        assert_ne!(a.0, c.0, "{kind}");
    }
}

#[test]
fn bench_writes_csv_and_report() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("b.csv");
    let out = bimeet(&[
        "bench", "--json", "--kind", "all", "--n", "60", "--count", "3", "--reps", "1", "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(bimeet::bench::CSV_HEADER));
    // 4 families x 3 seeds x 4 algorithms
    assert_eq!(lines.count(), 48);
    let v = json(&out);
    assert_eq!(v["edge_scan_limit_ok"], true);
}
