mod common;

use common::{code, data, json, run};
use serde_json::json;

#[test]
fn dims_matches_count() {
    let out = run(&["dims", "-m", "2", "-n", "3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!((v["e"].clone(), v["c"].clone()), (json!(1), json!(2)));
    assert_eq!(v["command"], "dims");
    assert!(v["version"].is_string());
}

#[test]
fn hypergeometric_is_generic() {
    let out = run(&["check", &data("hypergeometric.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["generic"], true);
}

#[test]
fn heun_report_passes() {
    let out = run(&["report", &data("heun.json")]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["tangent"]["dimension"], 1);
    assert_eq!(v["ledger"]["dim_h1"], 2);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 12);
    assert!(verdicts.iter().all(|x| x["status"] == "pass"), "{verdicts:?}");
}

#[test]
fn exit_codes() {
    let cases = [
        (vec!["check", "invalid.json"], 1),
        (vec!["report", "invalid.json"], 1),
        (vec!["check", "resonant.json"], 2),
        (vec!["report", "resonant.json"], 2),
        (vec!["check", "malformed.json"], 3),
        (vec!["tangent", "missing.json"], 3),
        (vec!["check", "irrational.json", "--max-bits", "4"], 4),
        (vec!["check", "irrational.json"], 0),
    ];
    for (args, expected) in cases {
        let mut args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        args[1] = data(&args[1]);
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = run(&refs);
        assert_eq!(
            code(&out),
            expected,
            "{refs:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        json(&out);
    }
    assert_eq!(code(&run(&["frobnicate"])), 3);
    assert_eq!(code(&run(&["dims", "-m", "1", "-n", "3"])), 1);
}

#[test]
fn max_bits_from_environment() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_fuchsian"))
        .args(["check", &data("irrational.json")])
        .env("FUCHS_MAX_BITS", "4")
        .output()
        .unwrap();
    assert_eq!(code(&out), 4);
    assert_eq!(json(&out)["error"]["kind"], "undecided");
}

#[test]
fn parse_errors_are_located() {
    let out = run(&["check", &data("malformed.json")]);
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["location"], "$.punctures[1]");
    assert!(String::from_utf8_lossy(&out.stderr).contains("$.punctures[1]"));
}

#[test]
fn ordering_override() {
    let out = run(&["exponents", &data("hypergeometric.json"), "--ordering", "inf=1/3,1/5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["table"]["ordering"][2], json!(["1/3", "1/5"]));
    let bad = run(&["exponents", &data("hypergeometric.json"), "--ordering", "inf=1/3,1/7"]);
    assert_eq!(code(&bad), 1);
    assert_eq!(
        code(&run(&["exponents", &data("hypergeometric.json"), "--ordering", "inf"])),
        3
    );
}

#[test]
fn gauge_self_and_mismatch() {
    let out = run(&["gauge", &data("heun.json"), &data("heun.json")]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["basis"].as_array().unwrap().len(), 1);
    let other = run(&["gauge", &data("heun.json"), &data("hypergeometric.json")]);
    assert_eq!(code(&other), 1);
}

#[test]
fn fuzz_writes_valid_generic_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "fuzz",
        "-m",
        "2",
        "-n",
        "3",
        "--count",
        "3",
        "--seed",
        "9",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let files = json(&out)["files"].as_array().unwrap().clone();
    assert_eq!(files.len(), 3);
    for f in &files {
        let check = run(&["check", f.as_str().unwrap()]);
        assert_eq!(code(&check), 0);
        assert_eq!(json(&check)["generic"], true);
    }
}

#[test]
fn pretty_output_is_text() {
    let out = run(&["report", &data("hypergeometric.json"), "--pretty"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(serde_json::from_str::<serde_json::Value>(&text).is_err());
    assert!(text.contains("gauge_rigidity: pass"));
    assert!(text.contains("lagrangian_vanishing: skipped (rigid: no deformation directions)"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["report".to_string(), data("order3.json")],
        vec![
            "fuzz".into(),
            "-m".into(),
            "3".into(),
            "-n".into(),
            "2".into(),
            "--count".into(),
            "2".into(),
            "--seed".into(),
            "1".into(),
        ],
        vec!["connection".to_string(), data("heun.json")],
    ] {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (a, b) = (run(&refs), run(&refs));
        assert_eq!(a.stdout, b.stdout, "{refs:?}");
    }
}
