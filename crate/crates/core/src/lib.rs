pub mod algebra;
pub mod cohomology;
pub mod connection;
pub mod deformation;
pub mod error;
pub mod gauge;
pub mod genericity;
pub mod linear;
pub mod operator;
pub mod parabolic;
pub mod random;
pub mod report;
pub mod spectral;

pub use algebra::{q, Matrix, PolyMatrix, Polynomial, QMatrix, RatFnMatrix, Rational, RationalFunction};
pub use error::{Error, Result};
pub use operator::{hypergeometric, parse_operator, FuchsianOperator, OperatorData};
