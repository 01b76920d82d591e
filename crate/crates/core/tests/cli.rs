//! End-to-end runs of the `nomizu` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn nomizu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nomizu"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    nomizu(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let out = nomizu(args);
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn list_names_entries_and_metadata_rows() {
    let items = json(&["list"]);
    let items = items.as_array().unwrap();
    let kind = |id: &str| {
        items
            .iter()
            .find(|x| x["id"] == id)
            .map(|x| x["kind"].as_str().unwrap().to_string())
    };
    assert_eq!(kind("thm3.1-ii").as_deref(), Some("FULL"));
    assert_eq!(kind("table3-1.3.1:5").as_deref(), Some("UNVERIFIABLE"));
}

#[test]
fn show_and_verify_an_entry() {
    assert_eq!(code(&["show", "thm4.2-[1,(12)]"]), 0);
    let rep = json(&["verify", "thm3.1-ii", "--alpha", "1", "--eps", "1"]);
    assert_eq!(rep["verdict"], "PASS");
    assert_eq!(rep["params"]["alpha"], "1");

    let out = nomizu(&["verify", "thm3.1-ii", "--alpha", "1", "--eps", "1", "--table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("thm3.1-ii"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "thm4.1-(22)", "--k1", "1/2"];
    assert_eq!(nomizu(&args).stdout, nomizu(&args).stdout);
}

#[test]
fn sweep_reports_each_point() {
    let out = nomizu(&["sweep", "thm4.2-[1,(12)]", "--range", "k1=1:3:1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!out.stdout.is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["verify", "thm3.1-i", "--k1", "1"]), 2);
    assert_eq!(code(&["verify", "bogus"]), 3);
    assert_eq!(code(&["run", "/nonexistent/spec.json"]), 4);
    assert_eq!(code(&["verify", "thm3.1-i", "--alpha", "0"]), 5);
    assert_eq!(code(&["verify", "table3-1.3.1:5"]), 6);
}

#[test]
fn errors_go_to_stderr() {
    let out = nomizu(&["verify", "bogus"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().contains("bogus"));
}
