use std::process::{Command, Output};

use serde_json::Value;

fn murphy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_murphy"))
        .args(args)
        .env_remove("MURPHY_PRECISION_BITS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = murphy(&full);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn analyze_six_minus_four() {
    let (code, v) = json(&["analyze", "6", "-4"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["self_related"], true);
    // (x^2 + 2x - 1)^4 expanded by hand
    let expected = ["1", "-8", "20", "-8", "-26", "8", "20", "8", "1"];
    assert_eq!(strings(&v["T"]), expected);
    let f = &v["squarefree_factors"][0];
    assert_eq!(strings(&f["factor"]), ["-1", "2", "1"]);
    assert_eq!(f["multiplicity"], 4);
}

#[test]
fn analyze_one_zero() {
    let (code, v) = json(&["analyze", "1", "0"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["T"]), ["1", "3", "9", "15", "14", "3", "-3", "0", "1"]);
    assert_eq!(v["classification"]["group"], "D8(8)");
    assert_eq!(v["classification"]["signature"], serde_json::json!([0, 4]));
    assert_eq!(v["precision_bits"], 256);
}

#[test]
fn analyze_names_degenerate_case() {
    let (code, v) = json(&["analyze", "2/3", "-4/3"]);
    assert_eq!(code, 0);
    assert!(v["degenerate"].as_str().unwrap().contains("mu=0"));
    let (code, v) = json(&["analyze", "2", "-4"]);
    assert_eq!(code, 0);
    assert!(v["degenerate"].as_str().unwrap().contains("(2,-4)"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(murphy(&["analyze", "1/0", "3"]).status.code(), Some(2));
    assert_eq!(murphy(&["analyze", "x", "3"]).status.code(), Some(2));
    assert_eq!(murphy(&["analyze", "1"]).status.code(), Some(2));
    assert_eq!(murphy(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(murphy(&["twins", "--d", "3"]).status.code(), Some(2));
    assert_eq!(murphy(&["regulator", "--case", "imag_m01", "3", "13"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_murphy"))
        .args(["analyze", "1", "1"])
        .env("MURPHY_PRECISION_BITS", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn precision_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_murphy"))
        .args(["analyze", "1", "1", "--json"])
        .env("MURPHY_PRECISION_BITS", "128")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["precision_bits"], 128);
}

#[test]
fn scan_writes_csv() {
    let dir = std::env::temp_dir().join(format!("murphy-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scan.csv");
    let (code, v) = json(&["scan", "--m-range", "6", "--a-range", "6", "--csv", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["m", "A", "degE", "group", "real_roots", "notes"]);
    let rows = reader.records().count();
    assert_eq!(rows as u64, v["pairs"].as_u64().unwrap());
    let counted = v["counted"].as_u64().unwrap() + v["special"].as_u64().unwrap();
    assert_eq!(counted, rows as u64);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn scan_edge_ranges() {
    let (code, v) = json(&["scan", "--m-range", "5:4", "--a-range", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["pairs"], 0);
    assert!(v["degE8_fraction"].is_null());
    let (_, v) = json(&["scan", "--m-range", "2:2", "--a-range", "3"]);
    assert_eq!(v["counted"], 0);
    assert_eq!(v["special"], v["pairs"]);
    assert!(v["note"].is_string());
    assert_eq!(murphy(&["scan", "--csv", "/nonexistent-dir/x.csv"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for suite in ["core", "families", "shen", "order10"] {
        let (code, v) = json(&["verify", "--suite", suite]);
        assert_eq!(code, 0, "{suite}");
        assert_eq!(v["pass"], true);
    }
    let (_, v) = json(&["verify", "--suite", "order10"]);
    assert_eq!(v["checks"][0]["name"], "M^10 is scalar");
    assert_eq!(v["checks"][0]["pass"], true);
}

#[test]
fn twins_and_families() {
    let (code, v) = json(&["twins", "--d", "5", "--j", "1:3"]);
    assert_eq!(code, 0);
    let items = v["twins"].as_array().unwrap();
    assert_eq!(items.len(), 6);
    assert!(items.iter().all(|t| t["product_is_T"] == true));
    let flagged = items.iter().filter(|t| !t["degenerate"].is_null()).count();
    assert_eq!(flagged, 2);
    let (code, v) = json(&["families", "--kind", "b", "--t", "3"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["families"][0]["P"]), ["1", "3", "-6", "-3", "1"]);
    assert_eq!(v["families"][0]["sigma_order"], 4);
}

#[test]
fn shen_and_regulator() {
    let (code, v) = json(&["shen", "--n", "4", "--a", "1"]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["P"]), ["1", "1", "-6", "-1", "1"]);
    assert_eq!(v["lambda"]["cyclic"], true);
    let (code, v) = json(&["regulator", "--case", "twin_real", "3", "13"]);
    assert_eq!(code, 0);
    assert_eq!(v["matches"], true);
    let r: f64 = v["regulator"].as_str().unwrap().parse().unwrap();
    assert!((r - 4.66182078).abs() < 1e-7);
}

#[test]
fn text_output_is_deterministic() {
    let a = murphy(&["analyze", "3", "13"]);
    let b = murphy(&["analyze", "3", "13"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8(a.stdout).unwrap().contains("schema: 1"));
}
