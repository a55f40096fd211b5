//! The command-line front end through `cli::run`.

use hitchin_forge::cli::{run, SCHEMA};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, Value) {
    let argv = std::iter::once("hitchin-forge").chain(args.iter().copied());
    let out = run(argv);
    let doc = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out.code, doc)
}

fn ok(args: &[&str]) -> Value {
    let (code, doc) = call(args);
    assert_eq!(code, 0, "{args:?}: {doc}");
    assert_eq!(doc["schema"], SCHEMA);
    assert_eq!(doc["command"], args[0]);
    doc
}

#[test]
fn arithmetic_commands() {
    assert_eq!(ok(&["pell", "--d", "3"])["unit"], "2+sqrt(3)");
    let q = ok(&["quat-info", "--a", "3", "--b", "3", "--H", "1"]);
    assert_eq!(q["is_division"], true);
    assert_eq!(q["ramified"], serde_json::json!(["2", "3"]));
    let f = ok(&["classify-form", "--matrix", "J3"]);
    assert_eq!(f["hasse"]["2"], -1);
    assert_eq!(f["disc"], "1");
    let f = ok(&["classify-form", "--matrix", "[[\"1/2\",0],[0,\"-3\"]]"]);
    assert_eq!(f["signature"], serde_json::json!([1, 1]));
}

#[test]
fn representation_commands() {
    let s = ok(&["symrep", "--n", "3", "--matrix", "[[2,1],[1,1]]"]);
    assert_eq!(s["trace_polynomial"], "t^2-1");
    assert_eq!(s["det"], "1");
    let so = ok(&["so-form", "--n", "5", "--a", "3", "--b", "5"]);
    assert_eq!(so["case"], "degree-4");
    assert_eq!(so["closed_form_matches"], true);
    assert_eq!(ok(&["g2-check", "--matrix", "G2"])["in_g2"], true);
    assert_eq!(ok(&["lattice-check", "--lattice", "sp", "--matrix", "J4"])["member"], false);
    assert_eq!(ok(&["lattice-check", "--lattice", "sl", "--matrix", "I3"])["member"], true);
}

#[test]
fn containment_exit_codes() {
    let c = ok(&["containment", "--a", "3", "--b", "3", "--n", "3", "--signs", "--", "--H", "2"]);
    assert_eq!(c["total"], c["passed"]);
    let (code, doc) = call(&["containment", "--a", "3", "--b", "3", "--n", "3", "--signs", "--", "--H", "1", "--corrupt"]);
    assert_eq!(code, 1);
    assert_eq!(doc["passed"], 0);
}

#[test]
fn bending_commands() {
    let b = ok(&["bend", "--n", "3", "--B", "SU_split_a", "--mode", "presentation", "--curve", "separating", "--word", "a2"]);
    assert_eq!(b["relator"]["holds"], true);
    let d = ok(&["certify-density", "--n", "7", "--B", "SO_n7", "--target", "SO"]);
    assert_eq!(d["valid"], true);
    assert_eq!(d["assumptions"][0], "Hitchin + Guichard classification");
    let (code, d) = call(&["certify-density", "--n", "4", "--B", "Sp", "--target", "SLn"]);
    assert_eq!(code, 1);
    assert_eq!(d["valid"], false);
}

#[test]
fn modular_commands() {
    assert_eq!(ok(&["reduce-modp", "--p", "5", "--d", "3", "--value", "2+sqrt(3)"])["value"], "2+r");
    let t = ok(&["trace-set", "--family", "SU", "--n", "3", "--p", "3"]);
    assert_eq!(t["size"], "9");
    assert_eq!(t["equals_field"], true);
    let o = ok(&["orbit-separate", "--n", "3", "--p", "5", "--B", "SU_split_a"]);
    assert_eq!(o["image_size"], 3);
    assert_eq!(o["b_order_verified"], true);
    // P_4 = t^3 - 2t permutes F_3, so there is nothing to separate.
    let (code, doc) = call(&["orbit-separate", "--n", "4", "--p", "3", "--B", "SU_even_split"]);
    assert_eq!(code, 1, "{doc}");
    assert!(doc["error"].is_string());
}

#[test]
fn usage_errors_and_determinism() {
    assert_eq!(call(&["no-such-command"]).0, 2);
    assert_eq!(call(&["pell"]).0, 2);
    assert_eq!(call(&["pell", "--d", "4"]).0, 2);
    let a = run(["hitchin-forge", "so-form", "--n", "7", "--a", "2", "--b", "3"]);
    let b = run(["hitchin-forge", "so-form", "--n", "7", "--a", "2", "--b", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("hitchin-forge-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = run(["hitchin-forge", "--output", p, "pell", "--d", "2"]);
    assert_eq!(out.code, 0);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["unit"], "1+sqrt(2)");
    std::fs::remove_file(&path).unwrap();
}
