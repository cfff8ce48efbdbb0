//! Exact arithmetic substrate: rationals, polynomials, rational functions and
//! dense matrices with Gaussian elimination.

pub mod matrix;
pub mod poly;
pub mod ratfn;
pub mod rational;

pub use matrix::{Field, Matrix, PolyMatrix, QMatrix, RatFnMatrix, Ring, Rref};
pub use poly::Polynomial;
pub use ratfn::{LaurentSeries, RationalFunction};
pub use rational::{q, Rational};
