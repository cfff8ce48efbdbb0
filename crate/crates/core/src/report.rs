//! The all-in-one report: every module run on one operator, with a verdict
//! per checked statement.

use serde::Serialize;

use crate::algebra::Rational;
use crate::cohomology::{sequence_ledger, SequenceLedger};
use crate::connection::{bundle_degree, presentation, verify_companion_identity};
use crate::deformation::{dims, isomonodromic_tangent_basis, lagrangian_pairing, DeformationBasis, Dims};
use crate::error::{Error, Result};
use crate::gauge::gauge_solve;
use crate::genericity::{check_table, GenericityOptions, GenericityReport};
use crate::operator::{validate_fuchs, FuchsianOperator, OperatorData, ValidationReport};
use crate::parabolic::{check_independence, flags, ParabolicData};
use crate::spectral::{exponent_table, global_checks, indicial_polynomial, ExponentTable, GlobalChecks, Point};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail { detail: String },
    Skipped { reason: String },
}

impl Verdict {
    fn check(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail { detail: detail() }
        }
    }

    fn skipped(reason: &str) -> Self {
        Verdict::Skipped {
            reason: reason.to_string(),
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedVerdict {
    pub name: &'static str,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    pub genericity: GenericityOptions,
    /// Exponent order overrides, applied to the table before flags are built.
    pub orderings: Vec<(Point, Vec<Rational>)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub operator: OperatorData,
    pub validation: ValidationReport,
    pub exponents: Option<ExponentTable>,
    pub genericity: Option<GenericityReport>,
    pub dims: Option<Dims>,
    pub tangent: Option<DeformationBasis>,
    pub ledger: Option<SequenceLedger>,
    pub global_checks: Option<GlobalChecks>,
    pub verdicts: Vec<NamedVerdict>,
}

/// Process exit status for a finished report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Invalid,
    NotGeneric,
    Inconsistent,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Pass => 0,
            Outcome::Invalid => 1,
            Outcome::NotGeneric => 2,
            Outcome::Inconsistent => 5,
        }
    }
}

impl Report {
    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name).map(|v| &v.verdict)
    }

    pub fn outcome(&self) -> Outcome {
        if !self.validation.accepted {
            Outcome::Invalid
        } else if self
            .verdicts
            .iter()
            .any(|v| v.name != "genericity" && v.verdict.is_fail())
        {
            Outcome::Inconsistent
        } else if self.verdict("genericity").is_some_and(Verdict::is_fail) {
            Outcome::NotGeneric
        } else {
            Outcome::Pass
        }
    }
}

/// Turn a computation that must succeed on valid input into a verdict;
/// inconsistencies become failures, anything else is propagated.
fn verdict_of<T>(r: Result<T>, ok: impl FnOnce(&T) -> Verdict) -> Result<(Option<T>, Verdict)> {
    match r {
        Ok(v) => {
            let verdict = ok(&v);
            Ok((Some(v), verdict))
        }
        Err(Error::Inconsistency(detail)) => Ok((None, Verdict::Fail { detail })),
        Err(e) => Err(e),
    }
}

/// Run the whole pipeline. Only parse-level problems and undecided interval
/// checks are returned as errors; everything else lands in the report.
pub fn build_report(data: &OperatorData, opts: &ReportOptions) -> Result<Report> {
    let validation = validate_fuchs(data);
    let mut report = Report {
        operator: data.clone(),
        validation: validation.clone(),
        exponents: None,
        genericity: None,
        dims: None,
        tangent: None,
        ledger: None,
        global_checks: None,
        verdicts: Vec::new(),
    };
    let push = |report: &mut Report, name: &'static str, verdict: Verdict| {
        report.verdicts.push(NamedVerdict { name, verdict });
    };
    push(
        &mut report,
        "fuchs_degree_bounds",
        Verdict::check(validation.accepted, || validation.messages().join("; ")),
    );
    if !validation.accepted {
        return Ok(report);
    }
    let op = FuchsianOperator::try_from(data.clone())?;
    let (m, n) = (op.order(), op.num_punctures());

    let (_, v) = verdict_of(presentation(&op), |p| {
        Verdict::check(p.infinity.pole_order <= 1, || {
            format!("pole order {}", p.infinity.pole_order)
        })
    })?;
    push(&mut report, "logarithmic_at_infinity", v);
    let (_, v) = verdict_of(verify_companion_identity(&op), |_| Verdict::Pass)?;
    push(&mut report, "companion_identity", v);

    let mut table = exponent_table(&op)?;
    for (point, order) in &opts.orderings {
        table.set_ordering(point, order.clone())?;
    }
    let checks = global_checks(&table, bundle_degree(m, n));
    push(
        &mut report,
        "fuchs_relation",
        Verdict::check(checks.fuchs_relation, || {
            format!("exponent sum differs from {}", checks.expected_sum)
        }),
    );
    push(
        &mut report,
        "residue_theorem",
        Verdict::check(checks.residue_theorem, || {
            format!(
                "trace sum {} differs from {}",
                checks.trace_sum, checks.expected_trace_sum
            )
        }),
    );
    let mut indicial_ok = true;
    for r in &table.points {
        indicial_ok &= indicial_polynomial(&op, &r.point)? == r.char_poly;
    }
    push(
        &mut report,
        "indicial_agreement",
        Verdict::check(indicial_ok, || {
            "a residue characteristic polynomial differs from the indicial polynomial".into()
        }),
    );
    report.global_checks = Some(checks);

    let generic = check_table(&table, &opts.genericity)?;
    let is_generic = generic.is_generic();
    push(
        &mut report,
        "genericity",
        Verdict::check(is_generic, || {
            if generic.regular_semisimple {
                "some exponents sum to an integer".into()
            } else {
                "some residue is resonant or not split over the rationals".into()
            }
        }),
    );
    report.genericity = Some(generic);
    let d = dims(m, n)?;
    report.dims = Some(d);

    let generic_only = [
        "tangent_dimension",
        "lagrangian_vanishing",
        "parabolic_independence",
        "gauge_rigidity",
        "sequence_ledger",
    ];
    if !is_generic {
        report.exponents = Some(table);
        for name in generic_only {
            push(&mut report, name, Verdict::skipped("operator is not generic"));
        }
        return Ok(report);
    }

    let basis = isomonodromic_tangent_basis(&op)?;
    push(
        &mut report,
        "tangent_dimension",
        Verdict::check(basis.diagnostic.is_none(), || {
            basis.diagnostic.clone().unwrap_or_default()
        }),
    );
    let mut lagrangian = Verdict::Pass;
    'pairs: for v1 in &basis.basis {
        for v2 in &basis.basis {
            if let Err(e) = lagrangian_pairing(v1, v2, &op) {
                lagrangian = Verdict::Fail { detail: e.to_string() };
                break 'pairs;
            }
        }
    }
    if basis.basis.is_empty() {
        lagrangian = Verdict::skipped("rigid: no deformation directions");
    }
    push(&mut report, "lagrangian_vanishing", lagrangian);

    let parabolic = flags(&op, &table)?;
    push(
        &mut report,
        "parabolic_independence",
        independence(&op, &basis, &parabolic)?,
    );

    let (_, v) = verdict_of(gauge_solve(&op, &op), |s| {
        Verdict::check(s.space.len() == 1, || {
            format!("self-intertwiners span dimension {}", s.space.len())
        })
    })?;
    push(&mut report, "gauge_rigidity", v);

    let (ledger, v) = verdict_of(sequence_ledger(&op, &parabolic), |_| Verdict::Pass)?;
    push(&mut report, "sequence_ledger", v);
    report.ledger = ledger;
    report.tangent = Some(basis);
    report.exponents = Some(table);
    Ok(report)
}

/// Residues and flags agree between the operator and `op + v` for every
/// basis direction `v`.
fn independence(op: &FuchsianOperator, basis: &DeformationBasis, parabolic: &ParabolicData) -> Result<Verdict> {
    if basis.basis.is_empty() {
        return Ok(Verdict::skipped("rigid: no deformation directions"));
    }
    for (i, v) in basis.basis.iter().enumerate() {
        let moved = v.apply(op, &Rational::one())?;
        let same = check_independence(op, &moved)?;
        if !same.same {
            let at = same.witness.map(|p| p.to_string()).unwrap_or_default();
            return Ok(Verdict::Fail {
                detail: format!("direction {i} moves the residue at {at}"),
            });
        }
        let mut table = exponent_table(&moved)?;
        for (r, f) in table.points.clone().iter().zip(&parabolic.points) {
            table.set_ordering(&r.point, f.exponents.clone())?;
        }
        if &flags(&moved, &table)? != parabolic {
            return Ok(Verdict::Fail {
                detail: format!("direction {i} moves a flag"),
            });
        }
    }
    Ok(Verdict::Pass)
}
