use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn nichols(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nichols"))
        .args(args)
        .env_remove("NICHOLS_CACHE")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!("stdout is not json ({e}): {}", String::from_utf8_lossy(&o.stdout))
    })
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn dims(v: &Value) -> Vec<u64> {
    v["dims"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect()
}

#[test]
fn vabe_one_minus_one_one() {
    let o = nichols(&["dims", "--family", "Vabe", "--a", "1", "--b", "-1", "--e", "1", "--cap", "3"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = stdout_json(&o);
    assert_eq!(dims(&v), [1, 2, 1, 0]);
    assert_eq!(v["total"], 4);
    assert_eq!(v["classification"]["verdict"], "finite");
    assert_eq!(v["classification"]["total"], 4);
}

#[test]
fn a2_needs_cap_nine() {
    let args = ["dims", "--family", "Vabe", "--a", "z3^2", "--b", "z3", "--e", "1"];
    let at8 = nichols(&[&args[..], &["--cap", "8"]].concat());
    assert_eq!(code(&at8), 0);
    let v8 = stdout_json(&at8);
    assert!(v8["total"].is_null());
    assert_eq!(dims(&v8), [1, 2, 4, 4, 5, 4, 4, 2, 1]);

    let at9 = nichols(&[&args[..], &["--cap", "9"]].concat());
    let v9 = stdout_json(&at9);
    assert_eq!(v9["total"], 27);
    assert_eq!(v9["top_degree"], 8);
}

#[test]
fn flip_from_file_is_symmetric_algebra() {
    let o = nichols(&["dims", "--file", &fixture("custom.json"), "--cap", "3"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(dims(&stdout_json(&o)), [1, 2, 3, 4]);
}

#[test]
fn k64_from_descriptor() {
    let o = nichols(&["classify", "--file", &fixture("k64.json")]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = stdout_json(&o);
    assert_eq!(v["verdict"], "finite");
    assert_eq!(v["total"], 64);
    assert_eq!(v["braiding"]["dim"], 4);
}

#[test]
fn classify_i4_is_infinite() {
    let o = nichols(&["classify", "--family", "I", "--n", "4"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["verdict"], "infinite");
    assert_eq!(v["rule"], "D_{2n} rack, n>2");
    assert_eq!(v["solution"]["size"], 8);
}

#[test]
fn classify_n2_is_open() {
    let o = nichols(&["classify", "--family", "N", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["verdict"], "open");
}

#[test]
fn verify_lemma_tables() {
    let o = nichols(&["verify", "k-lemmas", "--n", "2", "--N", "1"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(v["cases"], 16);

    let o = nichols(&["verify", "n-lemmas", "--n", "1", "--table"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains(", 0 failed"));
}

#[test]
fn verify_dihedral_racks() {
    let o = nichols(&["verify", "l-rack", "--n", "5"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(v["results"][0]["detail"]["f"].as_array().unwrap().len(), 11);

    let o = nichols(&["verify", "i-rack"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["cases"], 5);
}

#[test]
fn corrupted_braiding_names_the_triple() {
    for target in ["braid", "cocycle"] {
        let o = nichols(&["verify", target, "--file", &fixture("corrupted.json")]);
        assert_eq!(code(&o), 1, "{target}: {}", stderr(&o));
        let v = stdout_json(&o);
        assert_eq!(v["pass"], false);
        assert_eq!(v["results"][0]["detail"]["triple"], serde_json::json!([1, 3, 1]));
    }
    let o = nichols(&["verify", "braid", "--file", &fixture("d3.json")]);
    assert_eq!(code(&o), 0);
}

#[test]
fn missing_key_is_a_parse_error() {
    let o = nichols(&["dims", "--file", &fixture("missing_key.json")]);
    assert_eq!(code(&o), 3);
    let err = stderr(&o);
    assert!(err.contains("lambda"), "{err}");
    assert_eq!(err.matches("parse error").count(), 1, "{err}");
}

#[test]
fn unknown_family_is_a_usage_error() {
    let o = nichols(&["classify", "--file", &fixture("unknown_family.json")]);
    assert_eq!(code(&o), 2, "{}", stderr(&o));
    let o = nichols(&["classify", "--family", "Q", "--n", "1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn small_cap_is_a_usage_error() {
    let o = nichols(&["dims", "--file", &fixture("custom.json"), "--cap", "1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn missing_file_is_an_io_error() {
    let o = nichols(&["dims", "--file", "/nonexistent/braiding.json"]);
    assert_eq!(code(&o), 5);
}

#[test]
fn zero_budget_exits_four_with_partial_report() {
    let o = nichols(&["dims", "--file", &fixture("k64.json"), "--cap", "10", "--budget-secs", "0"]);
    assert_eq!(code(&o), 4, "{}", stderr(&o));
    let v = stdout_json(&o);
    assert_eq!(v["budget_exceeded"], true);
    assert!(v["total"].is_null());
}

#[test]
fn cache_hit_is_bit_identical() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_string_lossy().into_owned();
    let args = ["dims", "--family", "Vabe", "--a", "z3", "--b", "-1", "--e", "1", "--cap", "8", "--cache-dir", &d];
    let first = nichols(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = nichols(&args);
    assert_eq!(first.stdout, second.stdout);

    let via_env = Command::new(env!("CARGO_BIN_EXE_nichols"))
        .args(&args[..args.len() - 2])
        .env("NICHOLS_CACHE", &d)
        .output()
        .unwrap();
    assert_eq!(first.stdout, via_env.stdout);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = nichols(&["dims", "--file", &fixture("custom.json"), "--cap", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(dims(&v), [1, 2, 3]);
}

#[test]
fn table_output() {
    let o = nichols(&["dims", "--file", &fixture("custom.json"), "--cap", "2", "--table"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.starts_with("degree"), "{text}");
    assert!(text.contains("undetermined at degree 2"), "{text}");
}

#[test]
fn rack_subcommands() {
    let o = nichols(&["rack", "dihedral", "--m", "5"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["table"][0], serde_json::json!([1, 5, 4, 3, 2]));

    let o = nichols(&["rack", "check", "--file", &fixture("d3_solution.json")]);
    let v = stdout_json(&o);
    assert_eq!(v["ybe"], true);
    assert_eq!(v["rack_shaped"], true);

    let o = nichols(&["rack", "iso", "--file", &fixture("d3_solution.json"), "--other", &fixture("d3.json")]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout_json(&o)["isomorphic"], true);

    let o = nichols(&["rack", "derive", "--file", &fixture("k64.json")]);
    assert_eq!(stdout_json(&o)["size"], 4);

    let o = nichols(&["rack", "conjugate", "--file", &fixture("d3_solution.json"), "--map", "2,3,1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout_json(&o)["size"], 3);

    let o = nichols(&["rack", "conjugate", "--file", &fixture("d3_solution.json"), "--map", "0,1,2"]);
    assert_eq!(code(&o), 2);
}
