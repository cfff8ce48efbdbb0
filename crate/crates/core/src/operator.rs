//! Fuchsian operators
//!
//! ```text
//! w^(m) - G_1/psi w^(m-1) - ... - G_m/psi^m w = 0,   psi = (z - p_1)...(z - p_n)
//! ```
//!
//! with rational punctures `p_j` and the point at infinity as the extra
//! singular point. Fuchs' criterion is `deg G_k <= k(n-1)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};

/// A validated Fuchsian operator: order `m >= 2`, `n >= 2` distinct rational
/// punctures, and coefficients `G_1..G_m` within Fuchs' degree bounds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FuchsianOperator {
    punctures: Vec<Rational>,
    coefficients: Vec<Polynomial>,
}

/// Unvalidated operator data, exactly as it appears in the JSON file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorData {
    pub m: i64,
    pub punctures: Vec<Rational>,
    #[serde(rename = "G")]
    pub g: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    OrderTooSmall {
        m: i64,
    },
    TooFewPunctures {
        n: usize,
    },
    CoefficientArity {
        expected: i64,
        found: usize,
    },
    DuplicatePuncture {
        first: usize,
        second: usize,
        value: Rational,
    },
    DegreeBound {
        k: usize,
        degree: usize,
        bound: usize,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::OrderTooSmall { .. } => write!(f, "m must be ≥ 2"),
            Violation::TooFewPunctures { n } => {
                write!(f, "at least 2 finite punctures are required, got {n}")
            }
            Violation::CoefficientArity { expected, found } => {
                write!(f, "expected {expected} coefficient polynomials, got {found}")
            }
            Violation::DuplicatePuncture { first, second, value } => {
                write!(f, "punctures p_{} and p_{} coincide ({value})", first + 1, second + 1)
            }
            Violation::DegreeBound { k, degree, bound } => {
                write!(f, "deg G_{k} = {degree} > {bound}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub accepted: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn messages(&self) -> Vec<String> {
        self.violations.iter().map(ToString::to_string).collect()
    }
}

/// Check Fuchs' degree bounds and puncture distinctness. Violations are
/// collected, not thrown.
pub fn validate_fuchs(data: &OperatorData) -> ValidationReport {
    let mut violations = Vec::new();
    let n = data.punctures.len();
    if data.m < 2 {
        violations.push(Violation::OrderTooSmall { m: data.m });
    }
    if n < 2 {
        violations.push(Violation::TooFewPunctures { n });
    }
    if data.m >= 0 && data.g.len() as i64 != data.m {
        violations.push(Violation::CoefficientArity {
            expected: data.m,
            found: data.g.len(),
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            if data.punctures[i] == data.punctures[j] {
                violations.push(Violation::DuplicatePuncture {
                    first: i,
                    second: j,
                    value: data.punctures[i].clone(),
                });
            }
        }
    }
    for (idx, gk) in data.g.iter().enumerate() {
        let k = idx + 1;
        let bound = k * n.saturating_sub(1);
        if let Some(d) = gk.degree() {
            if d > bound {
                violations.push(Violation::DegreeBound { k, degree: d, bound });
            }
        }
    }
    ValidationReport {
        accepted: violations.is_empty(),
        violations,
    }
}

impl FuchsianOperator {
    /// Validate and build. `coefficients[k-1]` is `G_k`.
    pub fn new(punctures: Vec<Rational>, coefficients: Vec<Polynomial>) -> Result<Self> {
        let data = OperatorData {
            m: coefficients.len() as i64,
            punctures,
            g: coefficients,
        };
        FuchsianOperator::try_from(data)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    /// Number of finite punctures `n`.
    pub fn num_punctures(&self) -> usize {
        self.punctures.len()
    }

    pub fn punctures(&self) -> &[Rational] {
        &self.punctures
    }

    /// `G_k` for `1 <= k <= m`.
    pub fn g(&self, k: usize) -> &Polynomial {
        &self.coefficients[k - 1]
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coefficients
    }

    /// Fuchs' bound `k(n-1)` on `deg G_k`.
    pub fn degree_bound(&self, k: usize) -> usize {
        k * (self.num_punctures() - 1)
    }

    /// `psi = (z - p_1)...(z - p_n)`
    pub fn psi(&self) -> Polynomial {
        psi(self)
    }

    pub fn psi_prime(&self) -> Polynomial {
        self.psi().derivative()
    }

    /// Coefficient of `z^{k(n-1)}` in `G_k`: the limit of `G_k (z/psi)^k` at infinity.
    pub fn top_coefficient(&self, k: usize) -> Rational {
        self.g(k).coeff(self.degree_bound(k))
    }

    /// Same punctures, new coefficients (validated).
    pub fn with_coefficients(&self, coefficients: Vec<Polynomial>) -> Result<Self> {
        FuchsianOperator::new(self.punctures.clone(), coefficients)
    }

    pub fn to_data(&self) -> OperatorData {
        OperatorData {
            m: self.order() as i64,
            punctures: self.punctures.clone(),
            g: self.coefficients.clone(),
        }
    }

    /// Compact JSON in the operator file format.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_data()).expect("operator serializes")
    }
}

impl TryFrom<OperatorData> for FuchsianOperator {
    type Error = Error;

    fn try_from(data: OperatorData) -> Result<Self> {
        let report = validate_fuchs(&data);
        if !report.accepted {
            return Err(Error::InvalidOperator(report.messages().join("; ")));
        }
        Ok(FuchsianOperator {
            punctures: data.punctures,
            coefficients: data.g,
        })
    }
}

impl Serialize for FuchsianOperator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_data().serialize(s)
    }
}

/// `psi(z) = prod (z - p_j)`: monic of degree `n`, simple roots at the punctures.
pub fn psi(op: &FuchsianOperator) -> Polynomial {
    Polynomial::from_roots(op.punctures())
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn parse_rational(v: &Value, location: String) -> Result<Rational> {
    match v {
        Value::String(s) => s
            .parse()
            .map_err(|_| parse_err(location, format!("non-rational literal {s:?}"))),
        other => Err(parse_err(
            location,
            format!("expected rational text \"a\" or \"a/b\", found {other}"),
        )),
    }
}

/// Parse operator file text without validating it.
pub fn parse_operator_data(text: &str) -> Result<OperatorData> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| parse_err(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    let Value::Object(obj) = value else {
        return Err(parse_err("$", "expected a JSON object"));
    };
    let allowed = ["m", "punctures", "G"];
    let extra: BTreeMap<_, _> = obj.iter().filter(|(k, _)| !allowed.contains(&k.as_str())).collect();
    if let Some((k, _)) = extra.iter().next() {
        return Err(parse_err(format!("$.{k}"), "unknown field"));
    }
    let m = obj
        .get("m")
        .ok_or_else(|| parse_err("$.m", "missing field"))?
        .as_i64()
        .ok_or_else(|| parse_err("$.m", "expected an integer"))?;
    let punctures = match obj.get("punctures") {
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, v)| parse_rational(v, format!("$.punctures[{i}]")))
            .collect::<Result<Vec<_>>>()?,
        Some(_) => return Err(parse_err("$.punctures", "expected an array")),
        None => return Err(parse_err("$.punctures", "missing field")),
    };
    let g = match obj.get("G") {
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(k, v)| match v {
                Value::Array(cs) => cs
                    .iter()
                    .enumerate()
                    .map(|(d, c)| parse_rational(c, format!("$.G[{k}][{d}]")))
                    .collect::<Result<Vec<_>>>()
                    .map(Polynomial::new),
                _ => Err(parse_err(
                    format!("$.G[{k}]"),
                    "expected an ascending coefficient array",
                )),
            })
            .collect::<Result<Vec<_>>>()?,
        Some(_) => return Err(parse_err("$.G", "expected an array")),
        None => return Err(parse_err("$.G", "missing field")),
    };
    if m >= 2 && g.len() as i64 != m {
        return Err(parse_err(
            "$.G",
            format!("arity mismatch: m = {m} but {} polynomials given", g.len()),
        ));
    }
    Ok(OperatorData { m, punctures, g })
}

/// Parse and validate operator file text.
pub fn parse_operator(text: &str) -> Result<FuchsianOperator> {
    FuchsianOperator::try_from(parse_operator_data(text)?)
}

/// The hypergeometric equation `z(1-z) w'' + [c - (a+b+1) z] w' - ab w = 0`
/// in the normal form above: punctures `{0, 1}`, `G_1 = c - (a+b+1) z`,
/// `G_2 = -ab psi = ab z(1 - z)`.
pub fn hypergeometric(a: &Rational, b: &Rational, c: &Rational) -> FuchsianOperator {
    let one = Rational::one();
    let g1 = Polynomial::new(vec![c.clone(), -(a + b + &one)]);
    let ab = a * b;
    let g2 = Polynomial::new(vec![Rational::zero(), ab.clone(), -ab]);
    FuchsianOperator::new(vec![Rational::zero(), one], vec![g1, g2]).expect("hypergeometric operator is Fuchsian")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    fn hyp() -> FuchsianOperator {
        hypergeometric(&q(1, 3), &q(1, 5), &q(1, 2))
    }

    #[test]
    fn psi_examples() {
        let op = hyp();
        assert_eq!(op.psi(), Polynomial::from_ints(&[0, -1, 1]));
        let three = FuchsianOperator::new(
            vec![q(0, 1), q(1, 1), q(2, 1)],
            vec![Polynomial::zero(), Polynomial::zero()],
        )
        .unwrap();
        assert_eq!(three.psi(), Polynomial::from_ints(&[0, 2, -3, 1]));
        for p in three.punctures() {
            assert!(three.psi().eval(p).is_zero());
            assert!(!three.psi_prime().eval(p).is_zero());
        }
    }

    #[test]
    fn hypergeometric_coefficients() {
        let op = hyp();
        assert_eq!(op.g(1), &Polynomial::new(vec![q(1, 2), q(-23, 15)]));
        assert_eq!(op.g(2), &Polynomial::new(vec![q(0, 1), q(1, 15), q(-1, 15)]));
        assert!(validate_fuchs(&op.to_data()).accepted);
        let degenerate = hypergeometric(&q(0, 1), &q(0, 1), &q(3, 7));
        assert!(degenerate.g(2).is_zero());
    }

    /// Multiply the normal form by `-psi` and compare with the classical
    /// equation coefficient by coefficient.
    #[test]
    fn hypergeometric_matches_classical_equation() {
        let (a, b, c) = (q(2, 7), q(-3, 4), q(5, 9));
        let op = hypergeometric(&a, &b, &c);
        let psi = op.psi();
        let z = Polynomial::x();
        let one_minus_z = &Polynomial::one() - &z;
        // -psi * (w'' - G1/psi w' - G2/psi^2 w) = -psi w'' + G1 w' + (G2/psi) w
        assert_eq!(-&psi, &z * &one_minus_z);
        let (g2_over_psi, rem) = op.g(2).div_rem(&psi);
        assert!(rem.is_zero());
        assert_eq!(g2_over_psi, Polynomial::constant(-(&a * &b)));
        let classical_w1 = Polynomial::new(vec![c.clone(), -(&a + &b + Rational::one())]);
        assert_eq!(op.g(1), &classical_w1);
    }

    #[test]
    fn rejects_degree_violation() {
        let data = OperatorData {
            m: 2,
            punctures: vec![q(0, 1), q(1, 1)],
            g: vec![Polynomial::from_ints(&[0, 0, 1]), Polynomial::zero()],
        };
        let report = validate_fuchs(&data);
        assert!(!report.accepted);
        assert_eq!(report.messages(), vec!["deg G_1 = 2 > 1".to_string()]);
    }

    #[test]
    fn rejects_duplicate_punctures() {
        let data = OperatorData {
            m: 2,
            punctures: vec![q(0, 1), q(0, 1)],
            g: vec![Polynomial::zero(), Polynomial::zero()],
        };
        let report = validate_fuchs(&data);
        assert!(!report.accepted);
        assert!(matches!(report.violations[0], Violation::DuplicatePuncture { .. }));
    }

    #[test]
    fn parses_file_format() {
        let text = r#"{"m":2,"punctures":["0","1"],"G":[["1/2","-23/15"],["0","1/15","-1/15"]]}"#;
        let op = parse_operator(text).unwrap();
        assert_eq!(op, hyp());
        assert_eq!(op.to_json(), text);
    }

    #[test]
    fn parse_errors_are_located() {
        let e = parse_operator(r#"{"m":1,"punctures":["0","1"],"G":[["1"]]}"#).unwrap_err();
        assert_eq!(e, Error::InvalidOperator("m must be ≥ 2".into()));

        let e = parse_operator(r#"{"m":2,"punctures":["0","1"],"G":[["1"]]}"#).unwrap_err();
        assert!(
            matches!(e, Error::Parse { ref location, .. } if location == "$.G"),
            "{e}"
        );

        let e = parse_operator(r#"{"m":2,"punctures":["0","1"],"G":[["1"],["x"]]}"#).unwrap_err();
        assert!(matches!(e, Error::Parse { ref location, .. } if location == "$.G[1][0]"));

        let e = parse_operator(r#"{"m":2,"punctures":["0","1"],"G":[[1],["0"]]}"#).unwrap_err();
        assert!(matches!(e, Error::Parse { ref location, .. } if location == "$.G[0][0]"));

        let e = parse_operator(r#"{"m":2,"punctures":["0","1"],"#).unwrap_err();
        assert!(matches!(e, Error::Parse { ref location, .. } if location.starts_with("line 1")));

        let e = parse_operator(r#"{"m":2,"punctures":["0","1"],"G":[[],[]],"x":0}"#).unwrap_err();
        assert!(matches!(e, Error::Parse { ref location, .. } if location == "$.x"));
    }

    #[test]
    fn zero_coefficients_are_allowed() {
        let op = FuchsianOperator::new(
            vec![q(-1, 1), q(1, 1)],
            vec![Polynomial::zero(), Polynomial::zero(), Polynomial::zero()],
        );
        assert!(op.is_ok());
    }
}
