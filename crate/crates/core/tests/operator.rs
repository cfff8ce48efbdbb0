use fuchsian_core::operator::parse_operator_data;
use fuchsian_core::random::{random_operator, rng_from_seed};
use fuchsian_core::{hypergeometric, parse_operator, q, Error};
use proptest::prelude::*;

fn location(text: &str) -> String {
    match parse_operator_data(text) {
        Err(Error::Parse { location, .. }) => location,
        other => panic!("expected a parse error, got {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn json_round_trip(seed in 0u64..10_000, m in 2usize..=4, n in 2usize..=4) {
        let op = random_operator(&mut rng_from_seed(seed), m, n);
        prop_assert_eq!(parse_operator(&op.to_json()).unwrap(), op);
    }
}

#[test]
fn hypergeometric_file() {
    let text = r#"{"m": 2, "punctures": ["0", "1"], "G": [["1/2", "-23/15"], ["0", "1/15", "-1/15"]]}"#;
    assert_eq!(
        parse_operator(text).unwrap(),
        hypergeometric(&q(1, 3), &q(1, 5), &q(1, 2))
    );
}

#[test]
fn errors_carry_locations() {
    assert_eq!(
        location(r#"{"m": 2, "punctures": ["0", "x"], "G": []}"#),
        "$.punctures[1]"
    );
    assert_eq!(
        location(r#"{"m": 2, "punctures": ["0", "1"], "G": [["1"], [1.5]]}"#),
        "$.G[1][0]"
    );
    assert_eq!(location(r#"{"m": 2, "punctures": ["0", "1"], "G": [["1"]]}"#), "$.G");
    assert_eq!(
        location(r#"{"m": 2, "punctures": ["0", "1"], "G": [], "extra": 1}"#),
        "$.extra"
    );
    assert_eq!(location(r#"{"punctures": []}"#), "$.m");
    assert!(location("{\n  \"m\": 2,\n  oops").starts_with("line 3"));
}

#[test]
fn validation_rejects_bad_degrees() {
    // G_1 of degree 2 exceeds n - 1 = 1
    let text = r#"{"m": 2, "punctures": ["0", "1"], "G": [["1", "0", "1"], ["0"]]}"#;
    assert!(matches!(parse_operator(text), Err(Error::InvalidOperator(_))));
    let repeated = r#"{"m": 2, "punctures": ["0", "0"], "G": [["1"], ["0"]]}"#;
    assert!(matches!(parse_operator(repeated), Err(Error::InvalidOperator(_))));
}
