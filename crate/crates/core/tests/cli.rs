use std::fs;
use std::process::{Command, Output};

use kgraph_cohn::graph::{parse_kg, print_kg};
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_kgraph");
const EX: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/examples");

fn kgraph(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env("KGRAPH_SUITE_SEED", "7").output().expect("binary runs")
}

fn ex(name: &str) -> String {
    format!("{EX}/{name}")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn bundled_examples_round_trip() {
    for name in ["lambda1.kg", "lambda2.kg", "omega-1-2.kg"] {
        let p = parse_kg(&fs::read_to_string(ex(name)).unwrap()).unwrap();
        assert_eq!(parse_kg(&print_kg(&p)).unwrap(), p, "{name}");
        assert_eq!(kgraph(&["validate", &ex(name)]).status.code(), Some(0));
    }
}

#[test]
fn broken_skeleton_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.kg");
    fs::write(&path, "kgraph rank=2\nvertex v\nedge e : v <- v color 1\nedge f : v <- v color 2\n").unwrap();
    let out = kgraph(&["validate", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let j = json(&out);
    assert_eq!(j["violations"][0]["code"], "INCOMPLETE_SQUARES");
}

#[test]
fn parse_errors_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.kg");
    fs::write(&path, "kgraph rank=2\nvertex v\nedge e v v\n").unwrap();
    let out = kgraph(&["paths", path.to_str().unwrap(), "--vertex", "v", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"], "PARSE");
    let out = kgraph(&["fproj", &ex("lambda2.kg"), "--vertex", "v", "--ring", "R"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dot_of_omega() {
    let out = kgraph(&["dot", &ex("omega-1-2.kg")]);
    let text = stdout(&out);
    let nodes = text.lines().filter(|l| l.trim_end().ends_with("\";")).count();
    assert_eq!(nodes, 6);
    assert!(text.contains("style=solid") && text.contains("style=dashed"));
    assert!(!text.contains("style=dotted"));
}

#[test]
fn suite_on_lambda2_passes() {
    let out = kgraph(&["suite", &ex("lambda2.kg"), "--ring", "Z", "--bound", "2,2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let j = json(&out);
    assert_eq!(j["pass"], true);
    assert_eq!(j["seed"], 7);
}

#[test]
fn tgraph_build_writes_a_valid_graph() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("t.kg");
    let out = kgraph(&["tgraph", "build", &ex("lambda2.kg"), "-o", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(kgraph(&["validate", out_path.to_str().unwrap()]).status.code(), Some(0));
    let out = kgraph(&["tgraph", "build", &ex("lambda1.kg")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mult_and_grade() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    fs::write(&a, r#"{"ring":"Z","terms":[{"lambda":[],"mu":["e"],"coeff":"1"}]}"#).unwrap();
    fs::write(&b, r#"{"ring":"Z","terms":[{"lambda":["f"],"mu":[],"coeff":"1"}]}"#).unwrap();
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    let j = json(&kgraph(&["mult", &ex("lambda2.kg"), a, b, "--format", "json"]));
    assert_eq!(j["terms"][0]["lambda"][0], "f");
    assert_eq!(j["terms"][0]["mu"][0], "e");
    let j = json(&kgraph(&["grade", &ex("lambda2.kg"), a, "--format", "json"]));
    assert_eq!(j["support"][0], "(-1,0)");
    let j = json(&kgraph(&["steinberg", "mult", &ex("lambda2.kg"), a, b, "--format", "json"]));
    assert_eq!(j["terms"].as_array().unwrap().len(), 1);
}

#[test]
fn omega_generator_flag() {
    let out = kgraph(&["fproj", "omega:2:1,2", "--vertex", "v1_2", "--format", "json"]);
    assert_eq!(json(&out)["terms"].as_array().unwrap().len(), 0);
    let out = kgraph(&["exhaustive", "omega:2:1,2", "--vertex", "v0_0", "c1_0_0", "c2_0_0"]);
    assert!(stdout(&out).starts_with("EXHAUSTIVE"), "{}", stdout(&out));
}

#[test]
fn checks_report_pass() {
    for cmd in ["iso-check", "rep-check"] {
        let out = kgraph(&[cmd, &ex("lambda2.kg"), "--bound", "1,1", "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}");
        assert_eq!(json(&out)["pass"], true);
    }
    let out = kgraph(&["rep-check", &ex("lambda2.kg"), "--bound", "2,2", "--cap", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}
