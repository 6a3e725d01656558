//! End-to-end runs of the `liekit` binary: golden outputs, exit codes, JSON
//! stability and the benchmark tables.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn liekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liekit"))
        .args(args)
        .env_remove("LIEKIT_GRADE_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = liekit(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn golden_outputs() {
    let cases: &[(&str, &[&str])] = &[
        ("rho_b2.txt", &["rho", "B2"]),
        ("cartan_g2.txt", &["cartan", "G2"]),
        ("tensor_b2_power4.txt", &["tensor", "B2", "--power", "4", "--labels", "1,0"]),
        ("tensor_b2_power4.json", &["tensor", "B2", "--power", "4", "--labels", "1,0", "--format", "json"]),
        ("string_functions_a2_112.txt", &["string-functions", "A2^", "--labels", "1,1,2", "--limit", "10"]),
        ("string_functions_g2_110.txt", &["string-functions", "G2^", "--labels", "1,1,0", "--limit", "7"]),
        (
            "branching_functions_b2_a1_111.txt",
            &["branching-functions", "B2^", "--labels", "1,1,1", "--sub-roots", "[[1,1]]", "--limit", "10"],
        ),
        ("mults_a2_11.txt", &["mults", "A2", "--labels", "1,1"]),
        ("branch_b4_b2_1000.txt", &["branch", "B4", "--labels", "1,0,0,0", "--sub-roots", "[[1,-1,0,0],[0,1,0,0]]"]),
    ];
    for (file, args) in cases {
        assert_eq!(stdout(args), golden(file), "output of {args:?} differs from {file}");
    }
}

#[test]
fn rho_prints_rationals() {
    assert_eq!(stdout(&["rho", "B2"]), "3/2, 1/2\n");
    let v = json(&["rho", "B2"]);
    assert_eq!(v["rho"]["coords"], serde_json::json!(["3/2", "1/2"]));
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| liekit(args).status.code().unwrap();
    assert_eq!(code(&["rho", "B2"]), 0);
    assert_eq!(code(&["rho", "B2x"]), 2);
    assert_eq!(code(&["rho", "Q3"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["dim", "B2", "--labels", "1,0,0"]), 2);
    assert_eq!(code(&["mults", "B2", "--labels", "1,0", "--kind", "parabolic"]), 2);
    assert_eq!(code(&["branch", "B3", "--labels", "1,0,0"]), 2);
    assert_eq!(code(&["dim", "B2^", "--labels", "1,0,0"]), 1);
    assert_eq!(code(&["tensor", "A2", "--labels", "-1,0"]), 1);
    assert_eq!(code(&["string-functions", "A2", "--labels", "1,0"]), 1);
    let err = String::from_utf8(liekit(&["rho", "A1+X2"]).stderr).unwrap();
    assert!(err.contains("position 4"), "{err}");
}

#[test]
fn json_round_trips() {
    let cases: &[&[&str]] = &[
        &["roots", "A1^", "--limit", "2"],
        &["cartan", "F4"],
        &["rho", "D4"],
        &["mults", "B2", "--labels", "1,1"],
        &["character", "A1^", "--labels", "1,0", "--limit", "3"],
        &["mults", "A2", "--labels", "1,0", "--kind", "verma", "--limit", "4"],
        &["dim", "E6", "--labels", "1,0,0,0,0,0"],
        &["branch", "B4", "--labels", "0,0,0,1", "--sub-index", "1,2,3"],
        &["tensor", "A2", "--labels", "1,0", "--labels", "0,1"],
        &["string-functions", "A1^", "--labels", "1,0", "--limit", "4"],
        &["bench", "--sizes", "1"],
    ];
    for args in cases {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let text = stdout(&full);
        let parsed: Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
        assert_eq!(parsed["schema_version"], 1, "{args:?}");
    }
}

#[test]
fn deterministic() {
    let args = ["string-functions", "B2^", "--labels", "1,0,0", "--labels", "0,0,1", "--labels", "2,0,0", "--limit", "5"];
    let one = stdout(&args);
    assert_eq!(stdout(&args), one);
    let mut par = args.to_vec();
    par.extend(["--jobs", "3"]);
    assert_eq!(stdout(&par), one);
}

#[test]
fn grade_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_liekit"))
        .args(["string-functions", "A1^", "--labels", "1,0", "--format", "json"])
        .env("LIEKIT_GRADE_LIMIT", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["limit"], 3);
    assert_eq!(v["modules"][0]["series"][0]["coeffs"], serde_json::json!([1, 1, 2, 3]));
    let default = json(&["string-functions", "A1^", "--labels", "1,0"]);
    assert_eq!(default["limit"], 10);
}

#[test]
fn tensor_dimensions_add_up() {
    let v = json(&["tensor", "B2", "--power", "4", "--labels", "1,0"]);
    let mut total = 0i64;
    for entry in v["decomposition"].as_array().unwrap() {
        let labels: Vec<String> = entry["labels"].as_array().unwrap().iter().map(|x| x.to_string()).collect();
        let d = json(&["dim", "B2", "--labels", &labels.join(",")]);
        total += entry["mult"].as_i64().unwrap() * d["dimension"].as_i64().unwrap();
    }
    assert_eq!(total, 625);
}

#[test]
fn bench_tables() {
    for suite in ["finite-mults", "branching"] {
        let v = json(&["bench", "--suite", suite, "--sizes", "0,1,2"]);
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 3);
        let mut last = 0;
        for row in rows {
            let r = row.as_array().unwrap();
            assert_eq!(r.len(), 4);
            assert!(r[2].as_u64().is_some() && r[3].as_u64().is_some());
            let w = r[1].as_u64().unwrap();
            assert!(w >= last, "{suite}: weight counts decrease");
            last = w;
        }
    }
    assert_eq!(stdout(&["bench", "--sizes", ""]), "size\tweights\trecurrence_us\tfreudenthal_us\n");
    assert_eq!(json(&["bench", "--sizes", ""])["rows"], serde_json::json!([]));
}

#[test]
fn explicit_root_lists() {
    let named = stdout(&["cartan", "B2"]);
    assert_eq!(stdout(&["cartan", "[[1,-1],[0,1]]"]), named);
    assert_eq!(stdout(&["cartan", "[[\"1\",\"-1\"],[0,\"2/2\"]]"]), named);
}
