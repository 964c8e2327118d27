use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hypsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypsym")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = hypsym(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn example(dir: &Path, name: &str) -> String {
    let out = hypsym(&["examples", name]);
    assert!(out.status.success());
    write(dir, &format!("{name}.tri"), &stdout(&out))
}

#[test]
fn group_summary() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write(dir.path(), "s3.json", r#"{"permutations": ["(1 2)", "(1 2 3)"]}"#);
    let v = json(&["group", &s3]);
    assert_eq!(v["order"], 6);
    assert_eq!(v["abelian"], false);
    assert_eq!(v["cayley_automorphisms"], 6);
}

#[test]
fn build_z2_has_64_simplices() {
    let dir = tempfile::tempdir().unwrap();
    let z2 = write(dir.path(), "z2.json", r#"{"permutations": [[2, 1]]}"#);
    let v = json(&["build", &z2, "-o", dir.path().join("z2.tri").to_str().unwrap()]);
    assert_eq!(v["analysis"]["simplices"], 64);
    assert_eq!(v["analysis"]["automorphisms"], 2);
    assert_eq!(v["automorphisms_match_group"], true);
}

#[test]
fn build_then_analyze_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let z3 = write(dir.path(), "z3.json", r#"{"table": [[0,1,2],[1,2,0],[2,0,1]], "generators": [1]}"#);
    let tri = dir.path().join("z3.tri");
    let built = json(&["build", &z3, "--output", tri.to_str().unwrap()]);
    let a = &built["analysis"];
    assert_eq!(a["automorphisms"], 3);
    assert_eq!(a["orientable"], true);
    assert_eq!(a["free_action"], true);
    // each simplex contributes 4π²/3
    let simplices = a["simplices"].as_u64().unwrap();
    assert_eq!(simplices, 96);
    assert_eq!(a["volume"], "128·π²");
    let expected = simplices as f64 * 4.0 * std::f64::consts::PI.powi(2) / 3.0;
    assert!((a["volume_approx"].as_f64().unwrap() - expected).abs() < 1e-9);
    let again = json(&["analyze", tri.to_str().unwrap()]);
    assert_eq!(&again, a);
}

#[test]
fn graph_mode_uses_cubic_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let z2 = write(dir.path(), "z2.json", r#"{"permutations": ["(1 2)"]}"#);
    let v = json(&["build", &z2, "--mode", "graph", "--k", "6", "-o", dir.path().join("t.tri").to_str().unwrap()]);
    // 2nm vertex gadgets and 5nm wires of 8k − 2 simplices
    assert_eq!(v["analysis"]["simplices"], 4 + 10 * 46);
    assert_eq!(v["automorphisms_match_group"], true);
}

#[test]
fn analyze_examples() {
    let dir = tempfile::tempdir().unwrap();
    let text = stdout(&hypsym(&["analyze", &example(dir.path(), "one-cusped")]));
    assert!(text.contains("1 cusp\n"), "{text}");
    assert!(text.contains("h=20 r_c=(345)→(345) monodromy=(P^0, id) maxvol=30·√3"), "{text}");
    assert!(text.contains("volume 8/3·π²"), "{text}");
    let text = stdout(&hypsym(&["analyze", &example(dir.path(), "double")]));
    assert!(text.contains("10 cusps"), "{text}");
    let text = stdout(&hypsym(&["analyze", &example(dir.path(), "edge-complex")]));
    assert!(text.contains("2 free facets (boundary complex)"), "{text}");
    let chain = hypsym(&["examples", "edge-chain", "--n", "3"]);
    assert!(stdout(&chain).starts_with("simplices 6"));
}

#[test]
fn example_graphs() {
    let k6 = stdout(&hypsym(&["examples", "k6"]));
    assert_eq!(k6.lines().count(), 3 + 15);
    let prism = stdout(&hypsym(&["examples", "prism", "--dot"]));
    assert_eq!(prism.matches(" -- ").count(), 9);
}

#[test]
fn latcheck_cases_are_standard() {
    for case in ["1,even", "1,odd", "2,even", "2,odd"] {
        let v = json(&["latcheck", "--case", case]);
        assert!(v.as_array().unwrap().iter().all(|r| r["standard"] == true), "{case}");
    }
    let v = json(&["latcheck", "--n", "0"]);
    assert_eq!(v[0]["radius"], 4);
    assert_eq!(v[0]["filtered"].as_array().unwrap().len(), 4);
}

#[test]
fn census_counts() {
    let v = json(&["census", "--k", "6", "--count", "0"]);
    assert_eq!(v["g"], 85);
    assert_eq!(v["f"], 5);
    assert!(v["f"].as_u64() <= v["g"].as_u64());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(hypsym(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(hypsym(&["analyze", "/nonexistent/file"]).status.code(), Some(1));
    let bad = write(dir.path(), "bad.tri", "simplices 2\n0 1 1 1 : 2 3 4 5\n0 1 1 2 : 1 3 4 5\n");
    let out = hypsym(&["analyze", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let garbled = write(dir.path(), "g.json", "{\"permutations\": [");
    assert_eq!(hypsym(&["group", &garbled]).status.code(), Some(2));
    assert_eq!(hypsym(&["census", "--k", "8", "--count", "0"]).status.code(), Some(3));
    let z2 = write(dir.path(), "z2.json", r#"{"permutations": ["(1 2)"]}"#);
    let out = hypsym(&["census", "--k", "5", "--group", &z2]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not enough asymmetric graphs"));
}
