use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn skewcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn envelope(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!("stdout is not json ({e}): {}", String::from_utf8_lossy(&o.stdout))
    })
}

/// Writes fixture `name` into `dir` and returns its path.
fn fixture(dir: &Path, name: &str) -> PathBuf {
    let o = skewcat(&["fixture", name]);
    assert_eq!(code(&o), 0, "fixture {name}");
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, &o.stdout).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn fixture_list() -> Vec<(String, String)> {
    let env = envelope(&skewcat(&["fixture"]));
    env["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| (f["name"].as_str().unwrap().to_string(), f["kind"].as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn strict_z2_is_a_skew_monoidal_category() {
    let dir = TempDir::new().unwrap();
    let z2 = fixture(dir.path(), "strict-z2");
    let o = skewcat(&["check", "skew-moncat", s(&z2)]);
    assert_eq!(code(&o), 0);
    let env = envelope(&o);
    assert_eq!(env["command"], "check skew-moncat");
    assert_eq!(env["exit_code"], 0);
    assert_eq!(env["summary"]["fail"], 0);
    assert_eq!(env["result"]["monoidal"], true);
    assert_eq!(env["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    // the human summary goes to stderr in json mode
    assert!(String::from_utf8_lossy(&o.stderr).contains("skew.axiom5"));
}

#[test]
fn ch3_has_four_mw_monads() {
    let dir = TempDir::new().unwrap();
    let ch3 = fixture(dir.path(), "ch3");
    let out = dir.path().join("mw.json");
    let o = skewcat(&["mw", "enumerate", s(&ch3), "--out", s(&out)]);
    assert_eq!(code(&o), 0);
    let env = envelope(&o);
    assert_eq!(env["result"].as_array().unwrap().len(), 4);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(written, env["result"]);

    let o = skewcat(&["mw", "enumerate", s(&ch3), "--bound", "2"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn normalizing_the_ch2_bundle_is_right_normal() {
    let dir = TempDir::new().unwrap();
    let bundle = fixture(dir.path(), "hom-ch2");
    let o = skewcat(&["normalize", s(&bundle), "--bound", "6"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let env = envelope(&o);
    let entries = env["report"]["entries"].as_array().unwrap();
    let diagrams = entries
        .iter()
        .filter(|e| e["name"].as_str().unwrap().starts_with("normalize.") && e["status"] == "pass")
        .count();
    assert!(diagrams >= 11, "{diagrams} normalize entries passed");
    assert!(entries.iter().any(|e| e["name"] == "normalize.right_normal" && e["status"] == "pass"));
}

#[test]
fn theorem2_holds_on_the_ch2_lists() {
    let dir = TempDir::new().unwrap();
    let base = fixture(dir.path(), "ch2");
    let endo = fixture(dir.path(), "hom-ch2-endo");
    let hom = fixture(dir.path(), "hom-ch2-objects");
    let o = skewcat(&["theorem2", "--base", s(&base), "--endo", s(&endo), "--hom", s(&hom), "--format", "text"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("theorem2.monoid_bijection"));
    assert!(o.stderr.is_empty());
}

#[test]
fn malformed_input_reports_file_and_path() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"objects":["a"],"morphisms":[["i","a",7]],"identities":[],"comp":[]}"#).unwrap();
    let o = skewcat(&["check", "category", s(&bad)]);
    assert_eq!(code(&o), 2);
    let env = envelope(&o);
    assert_eq!(env["error"]["path"], "$.morphisms[0][2]");
    assert_eq!(env["error"]["file"], s(&bad));

    let o = skewcat(&["check", "category", s(&dir.path().join("missing.json"))]);
    assert_eq!(code(&o), 2);

    let o = skewcat(&["fixture", "no-such-fixture"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn broken_laws_exit_one_with_witnesses() {
    let dir = TempDir::new().unwrap();
    let path = fixture(dir.path(), "catgroup-2-2");
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    // Replace λ at the unit by a different automorphism of the same object.
    let current = doc["lambda"][0][1].as_str().unwrap().to_string();
    let morphisms = doc["category"]["morphisms"].as_array().unwrap().clone();
    let ends = |m: &Value| (m[1].clone(), m[2].clone());
    let typed = ends(morphisms.iter().find(|m| m[0] == current.as_str()).unwrap());
    let other = morphisms
        .iter()
        .find(|m| m[0] != current.as_str() && ends(m) == typed)
        .unwrap()[0]
        .clone();
    doc["lambda"][0][1] = other;
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = skewcat(&["check", "skew-moncat", s(&path)]);
    assert_eq!(code(&o), 1);
    let env = envelope(&o);
    let failed: Vec<&Value> = env["report"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["status"] == "fail")
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|e| !e["witness"].as_array().unwrap().is_empty()));
}

#[test]
fn precondition_and_bound_failures_exit_three() {
    let dir = TempDir::new().unwrap();
    let w = fixture(dir.path(), "closure-warping-ch3");
    let o = skewcat(&["warping", "redundancy", s(&w), "--seeds", "3", "--max-hom-size", "0"]);
    assert_eq!(code(&o), 3);
    let o = skewcat(&["warping", "redundancy", s(&w), "--seeds", "5"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn every_fixture_passes_its_own_validator() {
    let dir = TempDir::new().unwrap();
    for (name, kind) in fixture_list() {
        let path = fixture(dir.path(), &name);
        let verb: &[&str] = match kind.as_str() {
            "category" => &["check", "category"],
            "skew-moncat" => &["check", "skew-moncat"],
            "skew-bicat" => &["check", "skew-bicat"],
            "mw-monad" => &["mw", "check"],
            "warping" => &["warping", "check"],
            "algebra" => &["algebra", "check"],
            "hom-bundle" => &["prof", "homcat"],
            "prof" => {
                let o = skewcat(&["prof", "compose", s(&path), s(&path)]);
                assert_eq!(code(&o), 0, "{name}");
                continue;
            }
            "prof-list" => continue,
            other => panic!("unknown fixture kind {other}"),
        };
        let mut args = verb.to_vec();
        args.push(s(&path));
        let o = skewcat(&args);
        assert_eq!(code(&o), 0, "{name}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn fixtures_print_canonically() {
    for (name, _) in fixture_list() {
        let a = skewcat(&["fixture", &name]);
        let b = skewcat(&["fixture", &name]);
        assert_eq!(a.stdout, b.stdout, "{name}");
        assert!(a.stdout.ends_with(b"\n"));
    }
}
