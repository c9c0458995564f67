use std::process::{Command, Output};

use mcg_symplectic::linalg::Matrix;
use mcg_symplectic::normalize::{certifies, conjugator_ambiguity, RepresentationTuple};
use serde_json::Value;

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");

fn mcgsp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcgsp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    format!("{FIXTURES}/{name}")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn load(name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

#[test]
fn classify_lists_symplectic_branch() {
    let o = mcgsp(&["classify", "3", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let kinds: Vec<String> = stdout_json(&o)["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["kind"].as_str().unwrap().to_string())
        .collect();
    assert!(kinds.contains(&"TrivialOrSymplectic".to_string()));
    assert!(kinds.contains(&"BelowFaithfulness".to_string()));
}

#[test]
fn normalize_fixture_recovers_standard() {
    let o = mcgsp(&["normalize", &fixture("conjugated-standard.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let doc = stdout_json(&o);
    let p = Matrix::from_json(&doc["P"], "P").unwrap();
    let t = RepresentationTuple::from_json(&load("conjugated-standard.json")).unwrap();
    assert!(certifies(&t, &p).unwrap());
    let known = Matrix::from_json(&load("conjugator.json"), "$").unwrap();
    assert!(conjugator_ambiguity(&p, &known, 2, 5).unwrap());
    let normalized = RepresentationTuple::from_json(&doc["normalized"]).unwrap();
    assert_eq!(normalized, RepresentationTuple::standard(2, 5).unwrap());
}

#[test]
fn broken_tuple_fails_verification() {
    let o = mcgsp(&["verify-relations", &fixture("broken.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout_json(&o)["ok"], false);
    let o = mcgsp(&["verify-relations", &fixture("conjugated-standard.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(mcgsp(&["normalize", &fixture("broken.json")]).status.code(), Some(1));
}

#[test]
fn charpoly_of_fixture() {
    let o = mcgsp(&["charpoly", &fixture("matrix.json")]);
    assert_eq!(o.status.code(), Some(0));
    let doc = stdout_json(&o);
    assert_eq!(doc["coefficients"], serde_json::json!(["4/3", "8/3", "-11/3", "1"]));
    assert_eq!(doc["rational_eigenvalues"].as_array().unwrap().len(), 2);
}

#[test]
fn malformed_inputs_exit_2_with_field_path() {
    let dir = std::env::temp_dir().join(format!("mcgsp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    let mut doc = load("conjugated-standard.json");
    doc["matrices"][3]["entries"][1][2] = Value::from(7);
    std::fs::write(&bad, doc.to_string()).unwrap();
    let o = mcgsp(&["normalize", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("matrices[3].entries[1][2]"));

    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(
        mcgsp(&["verify-relations", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(mcgsp(&["charpoly", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(mcgsp(&["eval", "2", "t(a1"]).status.code(), Some(2));
    assert_eq!(mcgsp(&["frobnicate"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn gen_eval_lemma_lantern() {
    let o = mcgsp(&["gen", "2", "2", "b", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["entries"][3][2], "-1");

    let o = mcgsp(&["eval", "3", "t(a1) t(b1) t(a2) t(b2) t(a3) t(b3)"]);
    assert_eq!(stdout_json(&o)["symplectic"], true);

    let o = mcgsp(&["solve-lemma", "X=A", "1", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = stdout_json(&o);
    assert_eq!(doc["linear_dimension"], 4);
    assert_eq!(doc["certificate"]["singleton"], true);

    let o = mcgsp(&["lantern", "3", "a1", "a2", "a3", "a1+a2+a3", "a1+a2", "a2+a3", "a1+a3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = mcgsp(&[
        "lantern", "3", "a1", "a2", "a3", "a1+a2+a3", "a1+a2", "a2+a3", "a1-a3+b2",
    ]);
    assert_eq!(o.status.code(), Some(1));
}
