//! CLI contract details beyond the acceptance gate: report shapes, JSON
//! output, error channels and flag handling.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osp12"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn relations_verb() {
    let out = run(&["relations"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("relations: 13/13 zero residuals"), "{text}");
}

#[test]
fn verify_bi_json_report_shape() {
    let out = run(&["verify-bi", "--n", "3", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 3);
    assert_eq!(v["casimirs"].as_array().unwrap().len(), 7);
    assert_eq!(v["relations"].as_array().unwrap().len(), 28);
    assert!(v["relations"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["status"] == "ok"));
    assert!(v["meta"]["versions"]["osp12"].is_string());
    // timings stay out of the report unless asked for, keeping bytes stable
    assert!(v["meta"].get("timings").is_none());

    let timed = run(&["verify-bi", "--n", "2", "--format", "json", "--timings"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&timed)).unwrap();
    assert!(v["meta"]["timings"].is_object());
}

#[test]
fn json_output_is_byte_stable() {
    let a = run(&["verify-bi", "--n", "3", "--format", "json"]);
    let b = run(&["verify-bi", "--n", "3", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["r-properties", "--n", "3", "--format", "json"]);
    let b = run(&["r-properties", "--n", "3", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn casimir_verb_prints_normal_form() {
    let out = run(&["casimir", "--n", "3", "--subset", "1,3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("C_{1,3} = "), "{text}");
    // a canonical element re-parses through eval
    let expr = text.trim().strip_prefix("C_{1,3} = ").unwrap();
    let reparse = run(&["eval", "--expr", expr]);
    assert!(
        reparse.status.success(),
        "{}",
        String::from_utf8_lossy(&reparse.stderr)
    );
}

#[test]
fn casimir_explicit_requires_equality() {
    let out = run(&["casimir", "--n", "3", "--subset", "1,3", "--explicit"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("constructions equal: true"), "{text}");
    assert!(text.contains("(braided)"));
    assert!(text.contains("(explicit)"));
}

#[test]
fn errors_are_machine_readable_on_stderr() {
    let out = run(&["casimir", "--n", "3", "--subset", "1,5"]);
    assert!(!out.status.success());
    let err: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(err["kind"], "subset");

    let out = run(&["eval", "--expr", "Fp + Qx"]);
    assert!(!out.status.success());
    let err: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(err["kind"], "parse");
    assert!(err["error"].as_str().unwrap().contains("column 6"));

    let out = run(&["eval", "--expr", "H + Fp # P"]);
    assert!(!out.status.success());
    let err: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(err["kind"], "arity");
}

#[test]
fn eval_uses_builtin_rep_by_default() {
    let out = run(&["eval", "--expr", "C"]);
    assert!(out.status.success());
    let text = stdout(&out);
    // rho(C) = 3 * identity
    assert!(text.contains("max |entry| = 3"), "{text}");

    // a symbolically-zero expression evaluates to the zero matrix
    let out = run(&["eval", "--expr", "{Fp,Fm} - 1/2*H"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("max |entry| = 0"));
}

#[test]
fn jobs_flag_keeps_reports_deterministic() {
    let a = run(&["verify-bi", "--n", "3", "--jobs", "1"]);
    let b = run(&["verify-bi", "--n", "3", "--jobs", "4"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn r_properties_rejects_bad_arity() {
    let out = run(&["r-properties", "--n", "7"]);
    assert!(!out.status.success());
    let err: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(err["kind"], "arity");
}
