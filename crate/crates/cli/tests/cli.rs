use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linminmax"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", stdout(o)))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("linminmax-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn emitted(demo: &str) -> PathBuf {
    let o = run(&["demo", demo, "--emit-instance"]);
    assert_eq!(code(&o), 0);
    scratch(&format!("{demo}.json"), &stdout(&o))
}

const DIAGONAL: &str = r#"{"n": 3, "m": 3, "pairs": [
    [["1","0","0"], ["1","0","0"]],
    [["0","1","0"], ["0","1","0"]],
    [["0","0","1"], ["0","0","1"]]]}"#;

#[test]
fn konig_on_diagonal() {
    let path = scratch("diag.json", DIAGONAL);
    let o = run(&["--output", "json", "check", "konig", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["value"], 3);
    assert_eq!(v["status"], "proved");
    assert_eq!(v["certificate"]["cover"]["size"], 3);
    assert_eq!(v["config"]["seed"], 1);
}

#[test]
fn menger_on_f7_demo_instance() {
    let path = emitted("menger-f7");
    let o = run(&["--output", "json", "check", "menger", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(json(&o)["value"], 1);
    let o = run(&["--output", "json", "check", "matrix-menger", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(json(&o)["value"], 1);
}

#[test]
fn ncrank_on_skew3() {
    let path = emitted("skew3");
    let o = run(&["--output", "json", "check", "ncrank", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["value"], 3);
    assert_eq!(v["certificate"]["shrunk"]["defect"], 0);
}

#[test]
fn demos_report_and_pass() {
    for (name, needle) in [
        ("linorder-f4", "max antichain dimension: 3"),
        ("menger-f7", "separator size: 1"),
        ("skew3", "noncommutative rank: 3"),
    ] {
        let o = run(&["demo", name]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        assert!(stdout(&o).contains(needle), "{}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = run(&["demo", "nope"]);
    assert_ne!(code(&o), 0);
}

#[test]
fn gen_shapes_and_determinism() {
    let a = run(&["gen", "relation", "n=3", "m=3", "r=5", "--seed", "1"]);
    let b = run(&["gen", "relation", "n=3", "m=3", "r=5", "--seed", "1"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 5);
    let c = run(&["gen", "relation", "n=3", "m=3", "r=5", "--seed", "2"]);
    assert_ne!(a.stdout, c.stdout);

    let p = run(&["gen", "poset", "size=5", "--seed", "3"]);
    assert_eq!(code(&p), 0);
    let path = scratch("poset.json", &stdout(&p));
    let o = run(&["check", "dilworth", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let bad = run(&["gen", "relation", "q=1"]);
    assert_eq!(code(&bad), 3);
}

#[test]
fn gen_then_check_every_kind() {
    let cases: &[(&[&str], &[&str])] = &[
        (&["relation", "n=3", "m=3", "r=6"], &["konig", "hall", "ncrank", "matrix-konig"]),
        (&["relation", "n=4", "m=4", "r=5", "e=1", "f=1"], &["menger"]),
        (&["linorder", "size=4"], &["dilworth", "coherent", "matrix-dilworth"]),
        (&["digraph", "size=6"], &["menger"]),
        (&["digraph", "size=6", "weighted=1"], &["lgv"]),
        (&["lgv", "n=3", "r=3", "k=2"], &["lgv"]),
        (&["matrixspace", "m=3", "n=3", "d=2", "e=1", "f=1"], &["ncrank", "matrix-konig", "matrix-menger"]),
    ];
    for (i, (gen, theorems)) in cases.iter().enumerate() {
        let mut args = vec!["gen"];
        args.extend_from_slice(gen);
        let g = run(&args);
        assert_eq!(code(&g), 0, "{gen:?}");
        let path = scratch(&format!("case{i}.json"), &stdout(&g));
        for t in *theorems {
            let o = run(&["check", t, path.to_str().unwrap()]);
            assert!(matches!(code(&o), 0 | 2), "{t} on {gen:?}: {}", stdout(&o));
            assert!(!stdout(&o).contains("FAIL"), "{t} on {gen:?}: {}", stdout(&o));
        }
    }
}

#[test]
fn parse_errors_exit_3() {
    let broken = scratch("broken.json", r#"{"pairs": "#);
    assert_eq!(code(&run(&["check", "konig", broken.to_str().unwrap()])), 3);
    let unknown = scratch("unknown.json", r#"{"what": 1}"#);
    assert_eq!(code(&run(&["check", "konig", unknown.to_str().unwrap()])), 3);
    let missing = std::env::temp_dir().join("linminmax-does-not-exist.json");
    assert_eq!(code(&run(&["check", "konig", missing.to_str().unwrap()])), 3);
    // theorem does not apply to the instance kind
    let diag = scratch("diag2.json", DIAGONAL);
    assert_eq!(code(&run(&["check", "lgv", diag.to_str().unwrap()])), 3);
    // not a linorder
    assert_eq!(code(&run(&["check", "dilworth", diag.to_str().unwrap()])), 3);
}

#[test]
fn hall_failure_is_still_proved() {
    let path = scratch(
        "star.json",
        r#"{"n": 2, "m": 2, "pairs": [[["1","0"], ["1","0"]], [["0","1"], ["1","0"]]]}"#,
    );
    let o = run(&["--output", "json", "check", "hall", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["facts"]["saturated"], false);
    assert_eq!(v["facts"]["dim N(S)"], 1);
}

#[test]
fn rado_instance() {
    let path = scratch(
        "rado.json",
        r#"{"m": 2, "sets": [[["1","0"]], [["1","0"], ["1","1"]]]}"#,
    );
    let o = run(&["--output", "json", "check", "rado", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(json(&o)["facts"]["transversal"], true);
}

#[test]
fn budget_exhaustion_is_bounds_only() {
    let path = scratch("diag3.json", DIAGONAL);
    let o = run(&["--budget", "1", "check", "konig", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}
