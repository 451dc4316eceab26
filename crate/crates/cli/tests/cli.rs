use std::process::Command;

use cubic_brauer_cli::{run, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cubic-brauer").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, out, err) = call(&all);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn classify_names_the_symbol_generator() {
    let v = json(&["classify", "--a", "1", "--b", "1", "--c", "2", "--d", "3"]);
    assert_eq!(v["structure"], "Z3");
    assert_eq!(v["tag"], "equals_br_quotient");
    assert_eq!(v["generator"], "{3/2, (x+ζy)/(x+y)}_3");
}

#[test]
fn classify_the_rank_two_case() {
    let v = json(&["classify", "--a", "1", "--b", "1", "--c", "1", "--d", "2"]);
    assert_eq!(v["structure"], "Z3Squared");
    assert!(v["generator"].as_str().unwrap().contains("Manin"));
}

#[test]
fn classify_json_has_exactly_the_documented_keys() {
    for args in [
        vec!["classify", "--a", "1", "--b", "2", "--c", "3", "--d", "48"],
        vec!["classify", "--lambda", "1,0", "--mu", "0,1", "--nu", "1,1", "--dim", "2"],
    ] {
        let v = json(&args);
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        for k in &keys {
            assert!(["structure", "tag", "condition", "generator"].contains(k), "unexpected key {k}");
        }
        for k in ["structure", "tag", "condition"] {
            assert!(keys.contains(&k), "missing {k}");
        }
    }
}

#[test]
fn text_and_json_agree() {
    let args = ["classify", "--a", "1", "--b", "1", "--c", "2", "--d", "3"];
    let (_, text, _) = call(&args);
    let v = json(&args);
    for key in ["tag", "condition", "generator"] {
        assert!(text.contains(v[key].as_str().unwrap()), "{key} missing from text output");
    }
}

#[test]
fn rational_coefficients_are_accepted() {
    let v = json(&["classify", "--a", "1/2", "--b", "4", "--c", "-3", "--d", "5/7"]);
    assert!(v["structure"].is_string());
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec![],
        vec!["classify", "--a", "1"],
        vec!["classify", "--a", "0", "--b", "1", "--c", "1", "--d", "1"],
        vec!["classify", "--a", "x", "--b", "1", "--c", "1", "--d", "1"],
        vec!["classify", "--lambda", "3", "--mu", "0", "--nu", "0"],
        vec!["verify", "--check", "nonsense"],
        vec!["verify", "--inject", "nonsense"],
        vec!["cohomology", "--group", "q"],
        vec!["frobnicate"],
    ] {
        let (code, _, err) = call(&args);
        assert_eq!(code, EXIT_USAGE, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn help_is_not_an_error() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("classify") && out.contains("verify"));
    assert!(!out.contains("inject"));
}

#[test]
fn lines_dump_has_incidence_and_classes() {
    let v = json(&["lines"]);
    assert_eq!(v["incidence"].as_object().unwrap().len(), 27);
    assert!(v["incidence"].as_object().unwrap().values().all(|n| n.as_array().unwrap().len() == 10));
    assert_eq!(v["pic_classes"]["Lp0"], serde_json::json!([-1, -1, 0, -1, -1, -1, 2]));
}

#[test]
fn cohomology_of_the_cyclic_case() {
    let v = json(&["cohomology", "--group", "s", "--lattice", "rank5"]);
    assert_eq!(v["invariant_factors"], serde_json::json!(["3"]));
    assert_eq!(v["tate_h_minus1"], serde_json::json!(["3"]));
    let v = json(&["cohomology", "--a", "1", "--b", "1", "--c", "1", "--d", "2"]);
    assert_eq!(v["invariant_factors"], serde_json::json!(["3", "3"]));
}

#[test]
fn verify_reports_each_selected_check() {
    let v = json(&["verify", "--check", "geometry", "--check", "generators"]);
    let checks = v.as_array().unwrap();
    assert_eq!(checks.len(), 2);
    for c in checks {
        assert_eq!(c["status"], "pass");
        assert!(c["certificate"].is_object());
    }
}

#[test]
fn injected_faults_fail_verification() {
    let (code, out, _) = call(&["verify", "--check", "geometry", "--inject", "edge:L0,M0"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(out.contains("FAIL") && out.contains("L0") && out.contains("M0"), "{out}");
}

#[test]
fn output_goes_to_a_file() {
    let path = std::env::temp_dir().join(format!("cubic-brauer-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["lines", "--format", "json", "--output", p]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(v["incidence"].is_object());
    std::fs::remove_file(path).unwrap();
}

#[test]
fn the_binary_runs_the_full_battery() {
    let status = Command::new(env!("CARGO_BIN_EXE_cubic-brauer")).arg("verify").output().unwrap();
    assert_eq!(status.status.code(), Some(0));
    let text = String::from_utf8(status.stdout).unwrap();
    assert_eq!(text.matches(" pass ").count(), 5, "{text}");
    assert!(text.contains("certified"));
}

#[test]
fn runs_are_deterministic() {
    let args = ["classify", "--a", "2", "--b", "3", "--c", "5", "--d", "7"];
    assert_eq!(call(&args), call(&args));
}
