use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verschiebung")).args(args).output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn decompose() {
    let v = ok_json(&["decompose", "6,5,5,1", "--t", "3"]);
    assert_eq!(v["core"], json!([1, 1]));
    assert_eq!(v["quotient"], json!([[1], [], [2, 2]]));
    let v = ok_json(&["decompose", "-", "--t", "2"]);
    assert_eq!(v["core"], json!([]));
}

#[test]
fn factorize_expand_agrees() {
    let v = ok_json(&["factorize", "2", "--t", "2", "--z", "1", "--expand"]);
    assert_eq!(v["expand"]["equal"], json!(true));
    assert_eq!(v["expand"]["direct_text"], json!("s[1] + q*s[]"));
    let v = ok_json(&["factorize", "1", "--t", "2", "--family", "so+", "--expand"]);
    assert_eq!(v["expand"]["factored_text"], json!("s[]"));
}

#[test]
fn chi_and_sxp() {
    assert_eq!(ok_json(&["chi", "--lambda", "2,2", "--mu", "2,2"]), json!(2));
    let v = ok_json(&["sxp", "--lambda", "1", "--t", "2"]);
    let nus: Vec<&Value> = v["terms"].as_array().unwrap().iter().map(|t| &t["nu"]).collect();
    assert_eq!(nus, [&json!([2]), &json!([1, 1])]);
}

#[test]
fn zasym_lists_and_tests() {
    let v = ok_json(&["zasym", "--z", "0", "--max-size", "4"]);
    assert!(!v["partitions"].as_array().unwrap().is_empty());
    let v = ok_json(&["zasym", "1", "--z", "0", "--t", "2"]);
    assert!(v["z_asymmetric"].is_boolean());
}

#[test]
fn quick_verify_passes() {
    let v = ok_json(&["verify", "littlewood", "--quick"]);
    assert_eq!(v["passed"], json!(true));
}

#[test]
fn bad_input_exits_2() {
    for args in [&["decompose", "1,3", "--t", "2"][..], &["decompose", "3", "--t", "1"], &["verify", "nope"]] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
