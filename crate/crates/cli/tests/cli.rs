use std::process::{Command, Output};

use dgla_core::bch::bch_list;
use dgla_core::cell::{CellModel, ModelDoc};
use dgla_core::{Element, Space};
use serde_json::Value;

fn dgla(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dgla")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let o = dgla(args);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn rows(doc: &Value, table: &str) -> Vec<(String, String)> {
    let t = doc["tables"].as_array().unwrap().iter().find(|t| t["name"] == table).unwrap();
    t["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["monomial"].as_str().unwrap().to_string(), r["coeff"].as_str().unwrap().to_string()))
        .collect()
}

fn differential(doc: &ModelDoc, name: &str) -> Element {
    doc.differentials.iter().find(|d| d.generator == name).unwrap().value.to_element().unwrap()
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["verify", "--bogus"],
        vec!["verify", "--depth", "0"],
        vec!["verify", "--shape", "kgon"],
        vec!["verify", "--shape", "kgon", "--k", "2"],
        vec!["verify", "--corrupt", "zeta"],
        vec!["model", "--depth", "1", "--symmetry", "flip"],
        vec!["coefficients", "--shape", "kgon", "--k", "4", "--universal"],
    ] {
        let o = dgla(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn coefficient_tables() {
    let doc = json_of(&["coefficients", "--depth", "2", "--universal", "--output", "json"]);
    let alpha = rows(&doc, "alpha");
    for (m, c) in [("e0", "-1/3"), ("f0", "-2/3"), ("[e0,f0]", "-1/6"), ("[e0,[e0,f0]]", "-1/54")] {
        assert!(alpha.contains(&(m.into(), c.into())), "alpha missing {m} {c}: {alpha:?}");
    }
    let gamma = rows(&doc, "gamma");
    assert!(gamma.contains(&("e0".into(), "-1/3".into())));
    assert!(gamma.contains(&("f0".into(), "1/3".into())));
    let u = rows(&doc, "gamma as F(alpha, beta)");
    assert_eq!(u, vec![("alpha".to_string(), "-1/1".to_string()), ("beta".to_string(), "-1/1".to_string())]);

    let text = stdout(&dgla(&["coefficients", "--depth", "1"]));
    assert!(text.contains("-1/6"), "{text}");
    assert!(!text.contains("-1/1"));
}

#[test]
fn verify_triangle_passes() {
    let o = dgla(&["verify", "--depth", "4", "--instances", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("universal_word_depth4"));
}

#[test]
fn corrupted_alpha_is_caught() {
    let o = dgla(&["verify", "--depth", "3", "--instances", "2", "--corrupt", "alpha"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("check fixed_point failed"), "{}", stderr(&o));
}

#[test]
fn verify_square() {
    let doc = json_of(&["verify", "--shape", "kgon", "--k", "4", "--depth", "3", "--instances", "3", "--output", "json"]);
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let poly: Vec<&str> =
        doc["spectrum"]["characteristic_polynomial"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(poly, ["0/1", "1/2", "-1/1", "1/1"]);
}

#[test]
fn based_model_matches_path_bch() {
    let out = stdout(&dgla(&["model", "--depth", "3", "--based", "a", "--output", "json"]));
    let doc: ModelDoc = serde_json::from_str(&out).unwrap();
    let dh = differential(&doc, "h");
    let space: &Space = dh.space();
    let gen = |n: &str| Element::generator(space, n).unwrap();
    let expected = &bch_list(space, &[gen("g"), gen("e"), gen("f")]).unwrap() - &gen("a").bracket(&gen("h")).unwrap();
    assert_eq!(dh, expected);
    CellModel::from_doc(&doc).unwrap();
}

#[test]
fn symmetric_model_depth_zero() {
    let out = stdout(&dgla(&["model", "--depth", "1", "--output", "json"]));
    let doc: ModelDoc = serde_json::from_str(&out).unwrap();
    let dh = differential(&doc, "h");
    let space = dh.space();
    let sum = ["e", "f", "g"].iter().fold(Element::zero(space), |acc, n| &acc + &Element::generator(space, n).unwrap());
    assert_eq!(dh.length_component(1), sum);
}

#[test]
fn symmetric_model_is_invariant() {
    let plain = stdout(&dgla(&["model", "--depth", "2", "--output", "json"]));
    for g in ["rotation", "reflection_a"] {
        let moved = stdout(&dgla(&["model", "--depth", "2", "--output", "json", "--symmetry", g]));
        assert_eq!(plain, moved, "{g}");
    }
    let based = stdout(&dgla(&["model", "--depth", "2", "--based", "a", "--output", "json"]));
    let rotated = stdout(&dgla(&["model", "--depth", "2", "--based", "a", "--output", "json", "--symmetry", "rotation"]));
    assert_ne!(based, rotated);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--depth", "2", "--instances", "4", "--seed", "7", "--output", "json"];
    assert_eq!(dgla(&args).stdout, dgla(&args).stdout);
}

#[test]
fn data_document_elements_parse() {
    let doc = json_of(&["model", "--depth", "2", "--with-data"]);
    let elements = doc["elements"].as_array().unwrap();
    assert!(!elements.is_empty());
    for e in elements {
        let parsed = dgla_core::serial::element_from_json(&e["value"].to_string()).unwrap();
        let back: Value = serde_json::from_str(&dgla_core::serial::element_to_json(&parsed)).unwrap();
        assert_eq!(back, e["value"]);
    }
}
