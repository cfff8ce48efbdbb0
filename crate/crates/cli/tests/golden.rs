//! Byte-level goldens, minus the version field. Set `FUCHSIAN_BLESS=1` to
//! rewrite them after an intended output change.

mod common;

use std::path::PathBuf;

use common::{data, json, run};

fn check_golden(name: &str, args: &[&str]) {
    let mut actual = json(&run(args));
    actual.as_object_mut().unwrap().remove("version");
    let text = serde_json::to_string_pretty(&actual).unwrap() + "\n";
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("FUCHSIAN_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(text, expected, "{name} differs from the golden");
}

#[test]
fn dims_golden() {
    check_golden("dims_2_3.json", &["dims", "-m", "2", "-n", "3"]);
}

#[test]
fn hypergeometric_goldens() {
    let hyp = data("hypergeometric.json");
    check_golden("check_hypergeometric.json", &["check", &hyp]);
    check_golden("exponents_hypergeometric.json", &["exponents", &hyp]);
    check_golden("connection_hypergeometric.json", &["connection", &hyp]);
    check_golden("report_hypergeometric.json", &["report", &hyp]);
}

#[test]
fn heun_goldens() {
    let heun = data("heun.json");
    check_golden("tangent_heun.json", &["tangent", &heun]);
    check_golden("cohomology_heun.json", &["cohomology", &heun]);
    check_golden("report_heun.json", &["report", &heun]);
}

#[test]
fn fuzz_golden() {
    check_golden(
        "fuzz_2_2_seed7.json",
        &["fuzz", "-m", "2", "-n", "2", "--count", "2", "--seed", "7"],
    );
}
