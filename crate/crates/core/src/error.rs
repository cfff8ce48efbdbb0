use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    RationalLiteral(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("the zero polynomial has no well-defined roots")]
    ZeroPolynomial,

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// The operator violates Fuchs' degree bounds or has repeated punctures.
    #[error("invalid operator: {0}")]
    InvalidOperator(String),

    /// Input is valid but outside what the requested computation supports
    /// (resonant residues, irrational exponents, ...).
    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("undecided at {bits} bits of precision: {detail}")]
    Undecided { bits: u32, detail: String },

    /// Two computations that must agree did not. Never expected on valid input.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("operators are not comparable: {0}")]
    Mismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
