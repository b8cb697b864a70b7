use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn nythard(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nythard"))
        .args(args)
        .current_dir(dir)
        .env_remove("NYTHARD_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const NAE: &str = r#"{"kind": "nae3sat", "variables": ["a", "b", "c", "d"],
  "clauses": [["a", "b", "c"], ["b", "c", "d"]]}"#;

const PIPS: &str = r#"{"cells": [[0, 0], [1, 0], [0, 1], [1, 1]], "dominoes": [[1, 2], [3, 3]],
  "constraints": [{"region": [[0, 0], [1, 0]], "kind": "sum", "n": 3}]}"#;

const PIPS_SOLUTION: &str = r#"{"pieces": [
  {"domino": 0, "cellA": [0, 0], "cellB": [1, 0], "valueA": 1, "valueB": 2},
  {"domino": 1, "cellA": [0, 1], "cellB": [1, 1], "valueA": 3, "valueB": 3}]}"#;

#[test]
fn odd_tiles_instance_is_unsolvable() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("t.json"), r#"{"features": ["a", "b"], "tiles": [["a", "b"], ["a"]]}"#).unwrap();
    let o = nythard(&["solve", "tiles", "t.json"], dir.path());
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).is_empty());
}

#[test]
fn even_tiles_instance_solves_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("t.json"), r#"{"features": ["a", "b"], "tiles": [["a", "b"], ["a"], ["b"]]}"#).unwrap();
    let o = nythard(&["solve", "tiles", "t.json", "--out", "m.json"], dir.path());
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read_to_string(dir.path().join("m.json")).unwrap().split_whitespace().collect::<String>(), "[0,1,0,2]");
    assert_eq!(code(&nythard(&["verify", "tiles", "t.json", "m.json"], dir.path())), 0);
    let o = nythard(&["verify", "tiles", "t.json", "m.json", "--no-teleport"], dir.path());
    assert_eq!(code(&o), 1);
}

#[test]
fn pips_verify_accepts_valid_and_rejects_swapped() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p.json"), PIPS).unwrap();
    fs::write(dir.path().join("s.json"), PIPS_SOLUTION).unwrap();
    let o = nythard(&["verify", "pips", "p.json", "s.json"], dir.path());
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(stdout(&o), "valid\n");
    fs::write(dir.path().join("bad.json"), PIPS_SOLUTION.replace("[0, 0], \"cellB\": [1, 0]", "[0, 1], \"cellB\": [1, 1]").replace("\"cellA\": [0, 1], \"cellB\": [1, 1], \"valueA\": 3", "\"cellA\": [0, 0], \"cellB\": [1, 0], \"valueA\": 3")).unwrap();
    assert_eq!(code(&nythard(&["verify", "pips", "p.json", "bad.json"], dir.path())), 1);
}

#[test]
fn nae_roundtrip_passes() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("n.json"), NAE).unwrap();
    let o = nythard(&["roundtrip", "nae3sat-to-letterboxed", "n.json"], dir.path());
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["sourceAnswer"], true);
    assert_eq!(report["pullbackVerified"], true);
}

#[test]
fn reduce_solve_pullback_through_files() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("n.json"), NAE).unwrap();
    assert_eq!(code(&nythard(&["reduce", "nae3sat-to-letterboxed", "n.json", "lb.json"], dir.path())), 0);
    let layout: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("lb.layout.json")).unwrap()).unwrap();
    let k = layout["k"].as_u64().unwrap().to_string();
    let o = nythard(&["solve", "letterboxed", "lb.json", "--k", &k, "--out", "sol.json"], dir.path());
    assert_eq!(code(&o), 0);
    let o = nythard(&["pullback", "nae3sat-to-letterboxed", "lb.json", "lb.layout.json", "sol.json", "-o", "a.json"], dir.path());
    assert_eq!(code(&o), 0);
    assert_eq!(code(&nythard(&["verify", "nae3sat", "n.json", "a.json"], dir.path())), 0);
}

#[test]
fn exhausted_budget_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p.json"), PIPS).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_nythard"))
        .args(["solve", "pips", "p.json"])
        .current_dir(dir.path())
        .env("NYTHARD_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn usage_and_io_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&nythard(&["solve", "pips", "missing.json"], dir.path())), 2);
    assert_eq!(code(&nythard(&["solve", "chess", "x.json"], dir.path())), 2);
    fs::write(dir.path().join("n.json"), NAE).unwrap();
    assert_eq!(code(&nythard(&["solve", "3dm", "n.json"], dir.path())), 2);
}

#[test]
fn gen_is_seeded_and_loadable() {
    let dir = tempfile::tempdir().unwrap();
    let a = stdout(&nythard(&["gen", "1in3", "--size", "5", "--count", "2", "--seed", "9"], dir.path()));
    let b = stdout(&nythard(&["gen", "1in3", "--size", "5", "--count", "2", "--seed", "9"], dir.path()));
    assert_eq!(a, b);
    fs::write(dir.path().join("i.json"), &a).unwrap();
    let o = nythard(&["roundtrip", "1in3-to-pips", "i.json", "--connected"], dir.path());
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn render_pips_ascii_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p.json"), PIPS).unwrap();
    fs::write(dir.path().join("s.json"), PIPS_SOLUTION).unwrap();
    let o = nythard(&["render", "pips", "p.json", "s.json", "--svg", "p.svg"], dir.path());
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("12\n33\n"));
    assert!(fs::read_to_string(dir.path().join("p.svg")).unwrap().starts_with("<svg"));
}

#[test]
fn flowfree_roundtrip_and_bench_csv() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("f.json"),
        r#"{"width": 3, "height": 2, "pairs": [{"color": "R", "a": [0, 0], "b": [0, 2]}, {"color": "G", "a": [1, 0], "b": [1, 2]}]}"#,
    )
    .unwrap();
    let o = nythard(&["roundtrip", "flowfree-to-strands", "f.json"], dir.path());
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = nythard(&["bench", "tiles", "--max-size", "2", "--count", "2"], dir.path());
    let csv = stdout(&o);
    assert_eq!(csv.lines().next(), Some("family,size,seed,outcome,micros"));
    assert_eq!(csv.lines().count(), 5);
}
