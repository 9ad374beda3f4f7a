use std::process::Command;

fn gint(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gint")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn script(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("gint-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn corpus_list_names_every_script() {
    let (code, out) = gint(&["corpus", "list"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 8);
    assert!(out.contains("example_6_2"));
}

#[test]
fn exit_codes() {
    let ok = script("ok.gint", "ring R = poly(vars=[x]);\nassert dim(quotient((x,))) == 0;\n");
    assert_eq!(gint(&["run", &ok]).0, 0);
    let bad = script("fail.gint", "ring R = poly(vars=[x]);\nassert dim(quotient((x,))) == 1;\n");
    assert_eq!(gint(&["run", &bad]).0, 1);
    let parse = script("parse.gint", "ring R = poly(vars=[x]) \n");
    assert_eq!(gint(&["run", &parse]).0, 2);
    let cap = script("cap.gint", "ring R = poly(vars=[x, y]);\nassert deg(quotient((x^5 + y^5, x*y^4))) > 0;\n");
    assert_eq!(gint(&["run", &cap, "--degree-cap", "3"]).0, 3);
    assert_eq!(gint(&["corpus", "run", "missing"]).0, 2);
    assert_eq!(gint(&["frobnicate"]).0, 2);
}

#[test]
fn json_report_schema() {
    let (code, out) = gint(&["corpus", "run", "example_4_6", "--json", "-"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["passed"], true);
    assert_eq!(v["sha256"].as_str().unwrap().len(), 64);
    assert!(v.get("timing_ms").is_none());
    let check = v["statements"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["kind"] == "check")
        .unwrap();
    for key in ["check", "inputs", "hypotheses", "conclusion", "evidence", "seed"] {
        assert!(check["report"].get(key).is_some(), "{key}");
    }
}

#[test]
fn invariants_command() {
    let p = script("inv.gint", "ring R = poly(vars=[x0..x3]);\nmodule T = quotient((x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2));\n");
    let (code, out) = gint(&["invariants", &p, "--module", "T", "--json", "-"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["invariants"]["depth"], 2);
    assert_eq!(v["invariants"]["hilbert"]["degree"], 3);
    assert_eq!(v["invariants"]["ext_dims"], serde_json::json!([-1, -1, 2, -1, -1]));
}
