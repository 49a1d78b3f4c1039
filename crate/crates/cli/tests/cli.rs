use std::path::Path;
use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn kronecker(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kronecker")).args(args).output().expect("binary runs")
}

fn schema(name: &str) -> JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    JSONSchema::compile(&serde_json::from_str(&text).unwrap()).expect("valid schema")
}

fn assert_valid(name: &str, doc: &Value) {
    if let Err(errors) = schema(name).validate(doc) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{name}: {}", msgs.join("; "));
    }
}

/// Runs a subcommand, expects exit 0 and validates stdout against its schema.
fn json(schema_name: &str, args: &[&str]) -> Value {
    let out = kronecker(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let doc: Value = serde_json::from_slice(&out.stdout).expect("JSON on stdout");
    assert_valid(schema_name, &doc);
    doc
}

#[test]
fn kron_golden_value_has_seven_terms() {
    let d = json("kron", &["kron", "--mu", "9,7", "--nu", "9,7", "--lam", "6,5,4,1"]);
    assert_eq!(d["g"], 2);
    assert_eq!(d["terms"].as_array().unwrap().len(), 7);
    let total: i64 = d["terms"].as_array().unwrap().iter().map(|t| t["value"].as_i64().unwrap()).sum();
    assert_eq!(total, 2);
}

#[test]
fn holes_weight_24() {
    let d = json("holes", &["holes", "--weight", "24"]);
    let g = |i: u64, j: u64, k: u64| {
        d["points"].as_array().unwrap().iter().find(|p| p["i"] == i && p["j"] == j && p["k"] == k).unwrap()["g"].clone()
    };
    assert_eq!(g(12, 12, 12), 1);
    assert_eq!(g(0, 0, 0), 1);
    assert_eq!(g(1, 0, 1), 1);
    assert_eq!(g(1, 0, 2), 0);
    // 0 <= j <= i <= k <= 12
    assert_eq!(d["points"].as_array().unwrap().len(), (0..=12).map(|k| (k + 1) * (k + 2) / 2).sum::<usize>());
}

#[test]
fn matrix_2_3_statistics() {
    let d = json("matrix", &["matrix", "--n", "2", "--m", "3"]);
    assert_eq!(d["stats"], serde_json::json!({"rows": 3, "cols": 11, "max_entry": 3, "rank": 3, "degree_bound": 8}));
    let d = json("matrix", &["matrix", "--n", "3", "--m", "3", "--face", "3"]);
    assert_eq!(d["stats"]["rows"], 3);
}

#[test]
fn atomic_dimensions() {
    let d = json("atomic", &["atomic", "--mu", "9,7", "--nu", "9,7", "--lam", "6,5,4,1"]);
    assert!(d["atomic"].as_i64().unwrap() >= 2);
    let d = json("atomic", &["atomic", "--mu", "3,2", "--nu", "3,1,1", "--lam", "2,1,1,1", "--n", "2", "--m", "3"]);
    assert_eq!(d["shift"]["rows"], serde_json::json!(["s0", "s1", "t1"]));
    json("atomic", &["atomic", "--mu", "2,1,1", "--nu", "2,2", "--lam", "1,1,1,1", "--n", "3", "--m", "3"]);
}

#[test]
fn oracle_methods_agree() {
    let args = ["--mu", "4,2", "--nu", "3,3", "--lam", "3,2,1"];
    let c = json("oracle", &[&["oracle"][..], &args].concat());
    let s = json("oracle", &[&["oracle", "--method", "schur"][..], &args].concat());
    let k = json("kron", &[&["kron"][..], &args].concat());
    assert_eq!(c["g"], s["g"]);
    assert_eq!(c["g"], k["g"]);
}

#[test]
fn bravyi_reduced_stable() {
    let d = json("bravyi", &["bravyi", "--mu", "9,7", "--nu", "9,7", "--lam", "6,5,4,1"]);
    assert_eq!(d["all"], true);
    let d = json("reduced", &["reduced", "--lam", "2", "--mu", "1", "--nu", "1"]);
    assert_eq!(d["value"], d["kron"]);
    let d = json("stable", &["stable", "--u", "3", "--t", "2", "--s", "1", "--k", "4"]);
    assert_eq!((d["kron"].clone(), d["atomic"].clone()), (1.into(), 1.into()));
}

#[test]
fn dilate_fits_quasipolynomial() {
    let d = json("dilate", &["dilate", "--mu", "2,2", "--nu", "2,2", "--lam", "2,1,1", "--kmax", "30", "--fit"]);
    assert_eq!(d["fit"]["period"], 2);
    assert_eq!(d["sequence"][1], 1);
    let d = json("dilate", &["dilate", "--mu", "1,1", "--nu", "1,1", "--lam", "1,1", "--kmax", "24", "--method", "atomic224", "--fit"]);
    assert!(d["fit"]["constituents"][0][0].as_str().unwrap().contains('/'));
    let d = json("dilate", &["dilate", "--mu", "3,2", "--nu", "3,1,1", "--lam", "2,1,1,1", "--kmax", "4", "--method", "atomic-nm", "--n", "2", "--m", "3"]);
    assert!(d.get("fit").is_none());
}

#[test]
fn vpcount_and_matrix_file() {
    let d = json("vpcount", &["vpcount", "--n", "2", "--m", "2", "--b", "4,6"]);
    assert_eq!(d["count"], 13);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.json");
    std::fs::write(&path, r#"{"rows": ["a"], "columns": [[1], [2]]}"#).unwrap();
    let d = json("vpcount", &["vpcount", "--matrix", path.to_str().unwrap(), "--b", "10"]);
    assert_eq!(d["count"], 6);
}

#[test]
fn lr_matrix() {
    let d = json("lr", &["lr", "--n", "2", "--m", "3"]);
    assert_eq!((d["rank"].clone(), d["corank"].clone(), d["totally_unimodular"].clone()), (4.into(), 2.into(), true.into()));
    let d = json("lr", &["lr", "--n", "5", "--m", "5"]);
    assert!(d["totally_unimodular"].is_null());
}

#[test]
fn verify_passes() {
    let d = json("verify", &["verify", "--weight", "8"]);
    assert_eq!(d["passed"], true);
    assert!(d["checks"].as_array().unwrap().len() >= 7);
}

#[test]
fn small_values_are_numbers() {
    let d = json("stable", &["stable", "--u", "3", "--t", "2", "--s", "1", "--k", "1000000000"]);
    assert_eq!(d["kron"], 1);
    let d = json("dilate", &["dilate", "--mu", "1,1", "--nu", "1,1", "--lam", "1,1", "--kmax", "3", "--method", "atomic224"]);
    assert!(d["sequence"].as_array().unwrap().iter().all(Value::is_number));
}

#[test]
fn csv_tables() {
    let out = kronecker(&["holes", "--weight", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,j,k,g"));
    assert_eq!(lines.next(), Some("0,0,0,1"));
    assert_eq!(lines.count(), (0..=2).map(|k| (k + 1) * (k + 2) / 2).sum::<usize>() - 1);

    let out = kronecker(&["dilate", "--mu", "2,2", "--nu", "2,2", "--lam", "2,1,1", "--kmax", "4", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "k,value\n1,0\n2,1\n3,0\n4,1\n");
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("holes.json");
    let out = kronecker(&["holes", "--weight", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_valid("holes", &doc);
    assert_eq!(doc["weight"], 6);
}

#[test]
fn threads_flag() {
    json("holes", &["--threads", "2", "holes", "--weight", "8"]);
}

fn domain_error(args: &[&str]) -> Value {
    let out = kronecker(args);
    assert_eq!(out.status.code(), Some(1), "{args:?}");
    let doc: Value = serde_json::from_slice(&out.stderr).expect("JSON error on stderr");
    assert_valid("error", &doc);
    doc
}

#[test]
fn domain_errors_exit_1() {
    assert_eq!(domain_error(&["kron", "--mu", "9,8", "--nu", "9,7", "--lam", "6,5,4,1"])["error"], "WeightMismatch");
    assert_eq!(domain_error(&["kron", "--mu", "3,x", "--nu", "2,2", "--lam", "4"])["error"], "InvalidToken");
    let e = domain_error(&["kron", "--mu", "2,1,1", "--nu", "2,2", "--lam", "4"]);
    assert_eq!(e["error"], "LengthExceedsBound");
    assert_eq!(domain_error(&["atomic", "--mu", "2,2", "--nu", "2,2", "--lam", "4", "--n", "4", "--m", "4"])["error"], "UnsupportedDimension");
    let e = domain_error(&["oracle", "--mu", "20,20", "--nu", "20,20", "--lam", "40", "--weight-cap", "10"]);
    assert_eq!(e["error"], "WeightCapExceeded");
    assert_eq!(domain_error(&["matrix", "--n", "1", "--m", "3"])["error"], "BoundTooSmall");
    assert_eq!(domain_error(&["vpcount", "--n", "2", "--m", "2", "--b", "1,2,3"])["error"], "DimensionMismatch");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["kron", "--mu", "3,1", "--nu", "2,2"][..],
        &["frobnicate"],
        &["holes"],
        &["holes", "--weight", "-3"],
        &["kron", "--mu", "2,2", "--nu", "2,2", "--lam", "2,2", "--format", "csv"],
        &["dilate", "--mu", "1,1", "--nu", "1,1", "--lam", "1,1", "--kmax", "3", "--method", "atomic-nm"],
        &["matrix", "--n", "3", "--m", "3", "--face", "a"],
    ] {
        let out = kronecker(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
