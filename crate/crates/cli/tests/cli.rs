use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cayley-forge"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn petersen_json() -> String {
    let out = run(&["export", "odd", "--n", "2", "--graph-json", "/dev/stdout"]);
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn reproduce_odd_prints_exact_ratio() {
    let out = run(&["reproduce", "odd", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["family"], "odd");
    assert_eq!(v["certificate"]["ratio"], serde_json::json!([3, 5]));
    assert_eq!(v["certificate"]["subset_size"], 6);
    assert_eq!(v["certificate"]["is_pt_counterexample"], false);
}

#[test]
fn reproduce_dihedral_cover_size() {
    let out = run(&["reproduce", "dihedral", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["certificate"]["n"], 54);
    assert_eq!(v["certificate"]["subset_size"], 30);
    assert_eq!(v["certificate"]["is_pt_counterexample"], true);
}

#[test]
fn reproduce_wreath_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let out = run(&[
        "reproduce",
        "wreath",
        "--levels",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["certificate"]["n"], 2048);
    assert_eq!(v["certificate"]["subset_size"], 1025);
    assert_eq!(v["certificate"]["induced_max_degree"], 1);
}

#[test]
fn reproduce_rejects_zero_parameter() {
    assert_eq!(
        run(&["reproduce", "odd", "--n", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["reproduce", "dihedral", "--m", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn reproduce_respects_vertex_cap() {
    let out = bin()
        .args(["reproduce", "odd", "--n", "6"])
        .env("CAYLEY_FORGE_MAX_VERTICES", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_accepts_gamma18_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    let s = dir.path().join("s.json");
    let out = run(&[
        "export",
        "dihedral",
        "--graph-json",
        g.to_str().unwrap(),
        "--subset-json",
        s.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&["verify", g.to_str().unwrap(), s.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["family"], "custom");
    assert_eq!(v["certificate"]["x"], 3);
    assert_eq!(v["certificate"]["x_prime"], 0);
}

#[test]
fn verify_full_set_of_petersen_is_not_a_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", &petersen_json());
    let all: Vec<usize> = (0..10).collect();
    let s = write(dir.path(), "s.json", &serde_json::to_string(&all).unwrap());
    let out = run(&["verify", &g, &s]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["certificate"]["induced_max_degree"], 3);
}

#[test]
fn verify_malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"n\": 3, \"edges\": [[0, 1]");
    let s = write(dir.path(), "s.json", "[0]");
    let out = run(&["verify", &bad, &s]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    let g = write(dir.path(), "g.json", "{\"n\": 2, \"edges\": [[0, 1]]}");
    let out_of_range = write(dir.path(), "s2.json", "[5]");
    assert_eq!(run(&["verify", &g, &out_of_range]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "/nonexistent.json", &s]).status.code(),
        Some(2)
    );
}

#[test]
fn search_known_optima() {
    let dir = tempfile::tempdir().unwrap();
    let petersen = write(dir.path(), "p.json", &petersen_json());
    let out = run(&["search", &petersen, "-k", "1", "--exact"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["best_size"], 6);
    assert_eq!(v["proven_optimal"], true);

    let gamma = dir.path().join("gamma.json");
    run(&[
        "export",
        "dihedral",
        "--graph-json",
        gamma.to_str().unwrap(),
    ]);
    let v = json(&run(&[
        "search",
        gamma.to_str().unwrap(),
        "-k",
        "1",
        "--threads",
        "2",
    ]));
    assert_eq!(v["best_size"], 10);
    assert_eq!(v["witness"].as_array().unwrap().len(), 10);

    let k2 = write(dir.path(), "k2.json", "{\"n\": 2, \"edges\": [[0, 1]]}");
    let v = json(&run(&["search", &k2, "-k", "1"]));
    assert_eq!(v["best_size"], 2);
    let v = json(&run(&["search", &k2, "-k", "0"]));
    assert_eq!(v["best_size"], 1);
}

#[test]
fn search_progress_goes_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let petersen = write(dir.path(), "p.json", &petersen_json());
    let out = run(&["search", &petersen, "-k", "0", "--progress"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("incumbent"));
    assert_eq!(json(&out)["best_size"], 4);
}

#[test]
fn census_finds_the_eighteen_vertex_example() {
    let out = run(&["census", "--max-half-order", "9", "--connection-size", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let hits = v.as_array().unwrap();
    assert_eq!(hits.len(), 1);
    assert_eq!(hits[0]["n"], 9);
    assert_eq!(hits[0]["connection_set"], serde_json::json!([9, 10, 12]));
}

#[test]
fn export_dot_shades_subset() {
    let out = run(&["export", "dihedral"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph "));
    assert_eq!(dot.matches("fillcolor=").count(), 18);
    assert_eq!(dot.matches("fillcolor=gray").count(), 10);
    assert_eq!(dot.matches(" -- ").count(), 27);

    let dot = String::from_utf8(run(&["export", "odd", "--n", "2"]).stdout).unwrap();
    assert_eq!(dot.matches("fillcolor=").count(), 10);
    assert_eq!(dot.matches("fillcolor=gray").count(), 6);
}

#[test]
fn export_is_deterministic() {
    let a = run(&["export", "wreath", "--levels", "1"]).stdout;
    let b = run(&["export", "wreath", "--levels", "1"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn export_files_without_subset_is_all_white() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", &petersen_json());
    let out = run(&["export", "files", "--graph", &g]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches("fillcolor=white").count(), 10);
    assert_eq!(dot.matches("fillcolor=gray").count(), 0);
}
