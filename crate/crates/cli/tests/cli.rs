use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn affchar(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_affchar"));
    cmd.args(args);
    match cache {
        Some(dir) => cmd.env("AFFCHAR_CACHE", dir).env_remove("AFFCHAR_NO_CACHE"),
        None => cmd.env("AFFCHAR_NO_CACHE", "1"),
    };
    cmd.output().expect("binary runs")
}

fn document(args: &[&str]) -> Value {
    let out = affchar(args, None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn poly_rows(v: &Value) -> Vec<(i64, i64)> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|t| (t["exponent"].as_i64().unwrap(), t["coefficient"].as_i64().unwrap()))
        .collect()
}

#[test]
fn character_vacuum_entry() {
    let doc = document(&["character", "--rank", "1", "--level", "2", "--weight", "0", "--max-degree", "2", "--method", "fermionic"]);
    assert_eq!(doc["schema_version"], 1);
    let entries = doc["entries"].as_array().unwrap();
    assert!(entries.iter().any(|e| e["degree"] == 2 && e["weight"] == serde_json::json!([0]) && e["multiplicity"] == 3));
    let keys: Vec<(i64, Vec<i64>)> = entries
        .iter()
        .map(|e| (e["degree"].as_i64().unwrap(), serde_json::from_value(e["weight"].clone()).unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn degree_zero_is_the_finite_module() {
    let doc = document(&["character", "--rank", "2", "--level", "3", "--weight", "1,1", "--max-degree", "0"]);
    let entries = doc["entries"].as_array().unwrap();
    // adjoint of su(3): six roots and the zero weight twice
    assert_eq!(entries.len(), 7);
    let total: i64 = entries.iter().map(|e| e["multiplicity"].as_i64().unwrap()).sum();
    assert_eq!(total, 8);
}

#[test]
fn methods_give_identical_entries() {
    let base = ["character", "--rank", "2", "--level", "2", "--weight", "1,0", "--max-degree", "3", "--method"];
    let f = affchar(&[&base[..], &["fermionic"]].concat(), None);
    let g = affchar(&[&base[..], &["freudenthal"]].concat(), None);
    let f: Value = serde_json::from_slice(&f.stdout).unwrap();
    let g: Value = serde_json::from_slice(&g.stdout).unwrap();
    assert_eq!(f["entries"].to_string(), g["entries"].to_string());
}

#[test]
fn kostka_examples() {
    let doc = document(&["kostka", "--rank", "3", "--l", "0,2,0", "--n", "1,2,1"]);
    assert_eq!(poly_rows(&doc["polynomial"]), vec![(1, 1), (2, 1)]);
    let doc = document(&["kostka", "--rank", "3", "--l", "1,2,1", "--n", "1,2,1"]);
    assert_eq!(poly_rows(&doc["polynomial"]), vec![(0, 1)]);
    let doc = document(&["kostka", "--rank", "3", "--l", "1,0,0", "--n", "1,2,1"]);
    assert_eq!(poly_rows(&doc["polynomial"]), vec![]);
}

#[test]
fn kostka_matrix_examples() {
    let doc = document(&["kostka-matrix", "--rank", "3", "--max-threshold", "4", "--class", "0"]);
    let basis: Vec<Vec<i64>> = serde_json::from_value(doc["basis"].clone()).unwrap();
    assert_eq!(
        basis,
        vec![
            vec![0, 0, 0],
            vec![1, 0, 1],
            vec![0, 2, 0],
            vec![2, 1, 0],
            vec![0, 1, 2],
            vec![4, 0, 0],
            vec![2, 0, 2],
            vec![1, 2, 1],
            vec![0, 4, 0],
            vec![0, 0, 4]
        ]
    );
    let inv = document(&["kostka-matrix", "--rank", "3", "--max-threshold", "4", "--class", "0", "--invert"]);
    assert_eq!(inv["inverted"], true);
    let entry = |row: u64, col: u64| {
        inv["entries"].as_array().unwrap().iter().find(|e| e["row"] == row && e["col"] == col).map(|e| poly_rows(&e["polynomial"]))
    };
    assert_eq!(entry(0, 7), Some(vec![(3, -1)]));
    assert_eq!(entry(1, 6), Some(vec![(1, -1)]));
    assert_eq!(entry(2, 7), Some(vec![(1, -1), (2, -1)]));
    assert_eq!(inv["entries"].as_array().unwrap().len(), 10 + 11);

    let id = document(&["kostka-matrix", "--rank", "1", "--max-threshold", "4", "--class", "0"]);
    for e in id["entries"].as_array().unwrap() {
        assert_eq!(e["row"], e["col"]);
        assert_eq!(poly_rows(&e["polynomial"]), vec![(0, 1)]);
    }
}

#[test]
fn decompose_and_verify() {
    let doc = document(&["decompose", "--rank", "3", "--n", "1,1,1"]);
    assert_eq!(doc["terms"].as_array().unwrap().len(), 4);
    assert!(doc.get("verification").is_none());
    let doc = document(&["decompose", "--rank", "3", "--n", "1,1,0", "--level", "4", "--max-degree", "2"]);
    assert_eq!(doc["verification"]["equal"], true);
    assert_eq!(doc["verification"]["mismatch"], Value::Null);

    let doc = document(&["verify", "su2k2-figure"]);
    assert_eq!(doc["passed"], true);
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| affchar(args, None).status.code();
    assert_eq!(code(&["kostka", "--rank", "3", "--l", "0,0", "--n", "1,0,1"]), Some(2));
    assert_eq!(code(&["character", "--rank", "1", "--level", "1", "--weight", "-1", "--max-degree", "1"]), Some(2));
    assert_eq!(code(&["character", "--rank", "1", "--level", "1", "--weight", "3", "--max-degree", "1"]), Some(2));
    assert_eq!(code(&["character", "--rank", "1", "--level", "1", "--weight", "0", "--max-degree", "-1"]), Some(2));
    assert_eq!(code(&["verify", "no-such-suite"]), Some(2));
    assert_eq!(code(&["decompose", "--rank", "1", "--n", "1", "--level", "1"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["verify", "weyl-translation"]), Some(0));
}

#[test]
fn output_file_and_cache_hits_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let out = dir.path().join("doc.json");
    let args = ["character", "--rank", "2", "--level", "2", "--weight", "0,2", "--max-degree", "3"];
    let cold = affchar(&args, None).stdout;
    let miss = affchar(&args, Some(&cache)).stdout;
    let hit = affchar(&args, Some(&cache)).stdout;
    assert_eq!(cold, miss);
    assert_eq!(cold, hit);
    assert_eq!(std::fs::read_dir(&cache).unwrap().count(), 1);

    let lower = ["character", "--rank", "2", "--level", "2", "--weight", "0,2", "--max-degree", "1"];
    let truncated = affchar(&lower, Some(&cache)).stdout;
    assert_eq!(truncated, affchar(&lower, None).stdout);

    let written = affchar(&[&args[..], &["--output", out.to_str().unwrap()]].concat(), None);
    assert!(written.stdout.is_empty());
    assert_eq!(std::fs::read(&out).unwrap(), cold);
}
