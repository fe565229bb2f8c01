use std::path::PathBuf;
use std::process::Command;

use ay_coxeter::cli::{run_with, Outcome};
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    run_with(std::iter::once("ayc").chain(args.iter().copied()))
}

fn json(out: &Outcome) -> Value {
    assert_eq!(out.code, 0, "{out:?}");
    serde_json::from_str(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ayc-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn group_info_reports_order_and_reflections() {
    let v = json(&run(&["group", "info", "--type", "A3"]));
    assert_eq!(v["order"], 24);
    assert_eq!(v["reflections"], 6);
    assert_eq!(v["schema"], "ay-coxeter/1");
}

#[test]
fn matrix_file_input() {
    let path = scratch("h2.json");
    std::fs::write(&path, r#"{"m": [[1, 5], [5, 1]]}"#).unwrap();
    let v = json(&run(&["group", "info", "--matrix", path.to_str().unwrap()]));
    assert_eq!(v["order"], 10);
    assert_eq!(v["crystallographic"], false);
}

#[test]
fn specht_character_of_21() {
    let v = json(&run(&["specht", "rep", "--n", "3", "--shape", "2,1", "--char"]));
    assert_eq!(v["character"]["values"], serde_json::json!(["2", "0", "-1"]));
}

#[test]
fn bindep_is_equal_on_specht_and_descent_cells() {
    for args in [
        &["rep", "bindep", "--type", "A3", "--tableau", "1,3|2,4"][..],
        &["rep", "bindep", "--type", "D4", "--descent-of", "s2"][..],
    ] {
        assert_eq!(json(&run(args))["equal"], true, "{args:?}");
    }
}

#[test]
fn table_round_trip() {
    let first = run(&["rep", "build", "--type", "A3", "--tableau", "1,2|3,4", "--emit-table"]);
    let path = scratch("table.json");
    std::fs::write(&path, &first.stdout).unwrap();
    let second = run(&["rep", "build", "--type", "A3", "--from-table", path.to_str().unwrap(), "--emit-table"]);
    let (a, b) = (json(&first), json(&second));
    for key in ["table", "matrices", "cell", "mode"] {
        assert_eq!(a[key], b[key], "{key}");
    }
}

#[test]
fn cayley_dot_has_every_vertex_and_edge() {
    let out = run(&["export", "cayley-dot", "--type", "B3"]);
    assert_eq!(out.code, 0);
    let nodes = out.stdout.lines().filter(|l| l.contains("[label=\"") && !l.contains(" -- ")).count();
    let edges = out.stdout.lines().filter(|l| l.contains(" -- ")).count();
    assert_eq!(nodes, 48);
    assert_eq!(edges, 48 * 3 / 2);
}

#[test]
fn induce_and_restrict_agree_with_oracles() {
    let v = json(&run(&["induce", "--type", "A3", "--j", "1,2"]));
    assert_eq!(v["equal"], true);
    assert_eq!(v["dimension"], 4);
    let v = json(&run(&["restrict", "--type", "A3", "--tableau", "1,2|3,4", "--j", "1,3"]));
    assert_eq!(v["equal"], true);
}

#[test]
fn output_is_deterministic() {
    let args = ["rep", "build", "--type", "D4", "--descent-of", "s1s2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn binary_honours_the_order_guard() {
    let bin = env!("CARGO_BIN_EXE_ayc");
    let out = Command::new(bin).args(["group", "info", "--type", "A3"]).env("AY_MAX_ORDER", "10").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).args(["group", "info", "--type", "A3"]).env_remove("AY_MAX_ORDER").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn binary_writes_to_out_file() {
    let path = scratch("info.json");
    let status = Command::new(env!("CARGO_BIN_EXE_ayc"))
        .args(["--out", path.to_str().unwrap(), "group", "info", "--type", "A2"])
        .status()
        .unwrap();
    assert!(status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["order"], 6);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["group", "info", "--type", "Q7"]).code, 2);
    assert_eq!(run(&["rep", "build", "--type", "A2", "--elements", "e,s2", "--f", "1,0"]).code, 1);
    assert_eq!(run(&["specht", "rep", "--n", "3", "--shape", "2,2"]).code, 2);
}
