//! `fuchsian`: exact checks on Fuchsian operators from the command line.
//!
//! Every command writes one JSON document to standard output (or an indented
//! text rendering of it with `--pretty`) and reports its outcome through the
//! exit status.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use fuchsian_core::cohomology::sequence_ledger;
use fuchsian_core::connection::{bundle_degree, presentation};
use fuchsian_core::deformation::{dims, isomonodromic_tangent_basis};
use fuchsian_core::gauge::{are_gauge_equivalent, gauge_solve};
use fuchsian_core::genericity::{check_table, GenericityOptions, DEFAULT_MAX_BITS};
use fuchsian_core::operator::{parse_operator_data, validate_fuchs};
use fuchsian_core::parabolic::flags;
use fuchsian_core::random::{random_generic_operator, rng_from_seed};
use fuchsian_core::report::{build_report, ReportOptions};
use fuchsian_core::spectral::{exponent_table, global_checks, ExponentTable, Point};
use fuchsian_core::{Error, FuchsianOperator, OperatorData, Rational};
use serde_json::{json, Value};

mod text;

#[derive(Parser)]
#[command(
    name = "fuchsian",
    version,
    about = "Exact checks on Fuchsian operators and their logarithmic connections"
)]
struct Cli {
    /// Print indented text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Precision {
    /// Precision cap in bits for the interval genericity check.
    #[arg(long, env = "FUCHS_MAX_BITS", default_value_t = DEFAULT_MAX_BITS)]
    max_bits: u32,
}

#[derive(Args, Clone)]
struct Orderings {
    /// Exponent order at one point, e.g. `inf=1/3,1/5`. Repeatable.
    #[arg(long = "ordering", value_name = "POINT=MU,...", value_parser = parse_ordering)]
    ordering: Vec<Ordering>,
}

#[derive(Clone, Debug)]
struct Ordering(Point, Vec<Rational>);

fn parse_ordering(s: &str) -> Result<Ordering, String> {
    let (point, list) = s.split_once('=').ok_or("expected POINT=MU1,MU2,...")?;
    let point: Point = point.trim().parse().map_err(|e: Error| e.to_string())?;
    let mus = list
        .split(',')
        .map(|mu| mu.trim().parse::<Rational>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    Ok(Ordering(point, mus))
}

#[derive(Subcommand)]
enum Command {
    /// Validate the degree bounds and test genericity.
    Check {
        file: PathBuf,
        #[command(flatten)]
        precision: Precision,
    },
    /// Residues, local exponents and the global exponent checks.
    Exponents {
        file: PathBuf,
        #[command(flatten)]
        orderings: Orderings,
    },
    /// The logarithmic connection on both charts and the gluing.
    Connection {
        file: PathBuf,
        /// Laurent coefficients to print per entry at infinity.
        #[arg(long, default_value_t = 3)]
        terms: usize,
    },
    /// Dimension counts `e` and `c` for order `m` and `n` finite punctures.
    Dims {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
    },
    /// Basis of the isomonodromic tangent space.
    Tangent { file: PathBuf },
    /// Decide whether two operators give gauge-equivalent connections.
    Gauge { first: PathBuf, second: PathBuf },
    /// The long exact sequence ledger behind the Hodge splitting.
    Cohomology {
        file: PathBuf,
        #[command(flatten)]
        orderings: Orderings,
    },
    /// Run everything and list a verdict per checked statement.
    Report {
        file: PathBuf,
        #[command(flatten)]
        orderings: Orderings,
        #[command(flatten)]
        precision: Precision,
    },
    /// Sample random generic operators by rejection.
    Fuzz {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write each operator to `DIR/op_NNN.json`.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Exponents { .. } => "exponents",
            Command::Connection { .. } => "connection",
            Command::Dims { .. } => "dims",
            Command::Tangent { .. } => "tangent",
            Command::Gauge { .. } => "gauge",
            Command::Cohomology { .. } => "cohomology",
            Command::Report { .. } => "report",
            Command::Fuzz { .. } => "fuzz",
        }
    }
}

const PASS: u8 = 0;
const VALIDATION: u8 = 1;
const NOT_GENERIC: u8 = 2;
const PARSE: u8 = 3;
const UNDECIDED: u8 = 4;
const INCONSISTENT: u8 = 5;

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
    location: Option<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::Parse { .. } | Error::RationalLiteral(_) => (PARSE, "parse"),
            Error::InvalidOperator(_) | Error::Dimension(_) | Error::Mismatch(_) => (VALIDATION, "validation"),
            Error::Unsupported(_) => (NOT_GENERIC, "unsupported"),
            Error::Undecided { .. } => (UNDECIDED, "undecided"),
            Error::Inconsistency(_) | Error::ZeroPolynomial => (INCONSISTENT, "inconsistency"),
        };
        let location = match &e {
            Error::Parse { location, .. } => Some(location.clone()),
            _ => None,
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
            location,
        }
    }
}

/// A finished command: the document body and the exit code.
struct Output {
    body: Value,
    code: u8,
}

impl Output {
    fn pass(body: Value) -> Self {
        Output { body, code: PASS }
    }
}

fn read_data(path: &Path) -> Result<OperatorData, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: PARSE,
        kind: "io",
        message: format!("cannot read {}: {e}", path.display()),
        location: None,
    })?;
    Ok(parse_operator_data(&text)?)
}

fn read_operator(path: &Path) -> Result<FuchsianOperator, Failure> {
    Ok(FuchsianOperator::try_from(read_data(path)?)?)
}

fn ordered_table(op: &FuchsianOperator, orderings: &Orderings) -> Result<ExponentTable, Failure> {
    let mut table = exponent_table(op)?;
    for Ordering(point, order) in &orderings.ordering {
        table.set_ordering(point, order.clone())?;
    }
    Ok(table)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn run(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Check { file, precision } => {
            let data = read_data(file)?;
            let validation = validate_fuchs(&data);
            if !validation.accepted {
                return Ok(Output {
                    body: json!({ "valid": false, "validation": validation, "generic": null, "genericity": null }),
                    code: VALIDATION,
                });
            }
            let op = FuchsianOperator::try_from(data)?;
            let opts = GenericityOptions {
                max_bits: precision.max_bits,
                ..Default::default()
            };
            let report = check_table(&exponent_table(&op)?, &opts)?;
            let generic = report.is_generic();
            Ok(Output {
                body: json!({ "valid": true, "validation": validation, "generic": generic, "genericity": report }),
                code: if generic { PASS } else { NOT_GENERIC },
            })
        }
        Command::Exponents { file, orderings } => {
            let op = read_operator(file)?;
            let table = ordered_table(&op, orderings)?;
            let checks = global_checks(&table, bundle_degree(op.order(), op.num_punctures()));
            let code = if checks.passed() { PASS } else { INCONSISTENT };
            Ok(Output {
                body: json!({ "table": table, "global_checks": checks }),
                code,
            })
        }
        Command::Connection { file, terms } => {
            let op = read_operator(file)?;
            let p = presentation(&op)?;
            Ok(Output::pass(to_value(&p.view(&op, *terms))))
        }
        Command::Dims { m, n } => Ok(Output::pass(to_value(&dims(*m, *n)?))),
        Command::Tangent { file } => {
            let op = read_operator(file)?;
            let basis = isomonodromic_tangent_basis(&op)?;
            Ok(Output::pass(json!({
                "m": op.order(),
                "n": op.num_punctures(),
                "dims": dims(op.order(), op.num_punctures())?,
                "tangent": basis,
            })))
        }
        Command::Gauge { first, second } => {
            let (a, b) = (read_operator(first)?, read_operator(second)?);
            let verdict = are_gauge_equivalent(&a, &b)?;
            let basis = if verdict.equivalent {
                gauge_solve(&a, &b)?.space
            } else {
                Vec::new()
            };
            let code = if verdict.contradiction.is_some() {
                INCONSISTENT
            } else {
                PASS
            };
            let mut body = to_value(&verdict);
            body["basis"] = to_value(&basis);
            Ok(Output { body, code })
        }
        Command::Cohomology { file, orderings } => {
            let op = read_operator(file)?;
            let table = ordered_table(&op, orderings)?;
            let ledger = sequence_ledger(&op, &flags(&op, &table)?)?;
            Ok(Output::pass(json!({
                "dims": dims(op.order(), op.num_punctures())?,
                "ledger": ledger,
            })))
        }
        Command::Report {
            file,
            orderings,
            precision,
        } => {
            let data = read_data(file)?;
            let opts = ReportOptions {
                genericity: GenericityOptions {
                    max_bits: precision.max_bits,
                    ..Default::default()
                },
                orderings: orderings.ordering.iter().map(|o| (o.0.clone(), o.1.clone())).collect(),
            };
            let report = build_report(&data, &opts)?;
            let code = report.outcome().exit_code() as u8;
            Ok(Output {
                body: to_value(&report),
                code,
            })
        }
        Command::Fuzz { m, n, count, seed, out } => {
            dims(*m, *n)?;
            let mut rng = rng_from_seed(*seed);
            let ops = (0..*count)
                .map(|_| random_generic_operator(&mut rng, *m, *n))
                .collect::<Result<Vec<_>, _>>()?;
            let mut files = Vec::new();
            if let Some(dir) = out {
                let io = |e: std::io::Error| Failure {
                    code: PARSE,
                    kind: "io",
                    message: format!("cannot write to {}: {e}", dir.display()),
                    location: None,
                };
                fs::create_dir_all(dir).map_err(io)?;
                for (i, op) in ops.iter().enumerate() {
                    let path = dir.join(format!("op_{i:03}.json"));
                    fs::write(&path, op.to_json() + "\n").map_err(io)?;
                    files.push(path.display().to_string());
                }
            }
            Ok(Output::pass(json!({
                "m": m,
                "n": n,
                "seed": seed,
                "operators": ops,
                "files": files,
            })))
        }
    }
}

fn document(command: &str, body: Value) -> Value {
    let mut doc = json!({ "version": env!("CARGO_PKG_VERSION"), "command": command });
    if let Value::Object(fields) = body {
        doc.as_object_mut().unwrap().extend(fields);
    }
    doc
}

fn emit(doc: &Value, pretty: bool) {
    if pretty {
        print!("{}", text::render(doc));
    } else {
        println!("{}", serde_json::to_string(doc).expect("json values serialize"));
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(PARSE),
            };
        }
    };
    let name = cli.command.name();
    match run(&cli.command) {
        Ok(out) => {
            emit(&document(name, out.body), cli.pretty);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("fuchsian {name}: {}", f.message);
            let error = json!({ "kind": f.kind, "message": f.message, "location": f.location });
            emit(&document(name, json!({ "error": error })), cli.pretty);
            ExitCode::from(f.code)
        }
    }
}
