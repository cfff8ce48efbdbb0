//! Gauge equivalence of the connections induced by two operators.
//!
//! A gauge transformation `g` sends the frame of the first connection to the
//! second, `w_2 = g w_1`, and intertwines them when
//! `psi g' = A_2 g - g A_1`. In the column frame the bundle splits as
//! `O(0) + O(n-1) + ... + O((m-1)(n-1))` up to a common twist, so `g_ij` is a
//! polynomial of degree at most `(i-j)(n-1)` below the diagonal, a constant
//! on it, and zero above it. Regularity at infinity is imposed separately by
//! transporting `g` to the frame at infinity.

use serde::Serialize;

use crate::algebra::{PolyMatrix, Polynomial, QMatrix, RatFnMatrix, Rational, RationalFunction};
use crate::connection::{companion_matrix, gluing};
use crate::error::{Error, Result};
use crate::linear::{combine, monomial_slots, reduced_kernel, restrict, slot_matrix, ColumnBuilder};
use crate::operator::FuchsianOperator;

/// Degree bounds of the admissible gauge pattern; `None` marks a zero entry.
pub fn gauge_pattern(m: usize, n: usize) -> Vec<Vec<Option<usize>>> {
    (0..m)
        .map(|i| (0..m).map(|j| (i >= j).then(|| (i - j) * (n - 1))).collect())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ansatz {
    /// The triangular pattern above.
    Pattern,
    /// Every entry of degree at most the given bound; only the solver and
    /// the infinity condition cut it down.
    Full(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct GaugeSolution {
    pub space: Vec<PolyMatrix>,
    pub pattern: Vec<Vec<Option<usize>>>,
    /// Dimension lost to the regularity condition at infinity.
    pub discarded_at_infinity: usize,
}

fn check_compatible(op1: &FuchsianOperator, op2: &FuchsianOperator) -> Result<()> {
    if op1.order() != op2.order() || op1.punctures() != op2.punctures() {
        return Err(Error::Mismatch("gauge problems need equal order and punctures".into()));
    }
    Ok(())
}

/// `psi g' - A_2 g + g A_1`.
fn residual(psi: &Polynomial, a1: &PolyMatrix, a2: &PolyMatrix, g: &PolyMatrix) -> PolyMatrix {
    let lhs = g.derivative().map(|e| psi * e);
    lhs.sub(&a2.mul(g)).add(&g.mul(a1))
}

pub fn gauge_solve_with(op1: &FuchsianOperator, op2: &FuchsianOperator, ansatz: Ansatz) -> Result<GaugeSolution> {
    check_compatible(op1, op2)?;
    let (m, n) = (op1.order(), op1.num_punctures());
    let bounds = match ansatz {
        Ansatz::Pattern => gauge_pattern(m, n),
        Ansatz::Full(d) => vec![vec![Some(d); m]; m],
    };
    let slots = monomial_slots(&bounds);
    let psi = op1.psi();
    let (a1, a2) = (companion_matrix(op1), companion_matrix(op2));
    let mut eqs = ColumnBuilder::default();
    for s in &slots {
        eqs.push_poly_matrix(&residual(&psi, &a1, &a2, &slot_matrix(m, s)));
    }
    let solutions = reduced_kernel(&eqs.build());
    let glue = gluing(m, &psi);
    let mut polar = ColumnBuilder::default();
    for v in &solutions {
        let g = combine(m, &slots, v).to_ratfn();
        polar.push_polar_at_infinity(&glue.to_infinity.mul(&g).mul(&glue.from_infinity));
    }
    let regular = restrict(&solutions, polar.build());
    Ok(GaugeSolution {
        discarded_at_infinity: solutions.len() - regular.len(),
        space: regular.iter().map(|v| combine(m, &slots, v)).collect(),
        pattern: gauge_pattern(m, n),
    })
}

pub fn gauge_solve(op1: &FuchsianOperator, op2: &FuchsianOperator) -> Result<GaugeSolution> {
    gauge_solve_with(op1, op2, Ansatz::Pattern)
}

/// Re-check an intertwiner directly: `g` is invertible and
/// `(psi g' + g A_1) g^{-1} = A_2`.
pub fn verify_intertwiner(g: &PolyMatrix, op1: &FuchsianOperator, op2: &FuchsianOperator) -> Result<bool> {
    let gr = g.to_ratfn();
    let Ok(inv) = gr.inverse() else {
        return Ok(false);
    };
    let psi = RationalFunction::from_poly(op1.psi());
    let a1 = companion_matrix(op1).to_ratfn();
    let transformed = gr.derivative().scale(&psi).add(&gr.mul(&a1)).mul(&inv);
    Ok(transformed == companion_matrix(op2).to_ratfn())
}

#[derive(Clone, Debug, Serialize)]
pub struct GaugeVerdict {
    pub equivalent: bool,
    pub intertwiner: Option<PolyMatrix>,
    pub solution_dimension: usize,
    /// Set when the connections are equivalent although the operators differ.
    pub contradiction: Option<String>,
}

/// The connections are gauge equivalent when the solution space contains an
/// invertible element; since elements are triangular with constant
/// diagonal, that happens exactly when no diagonal entry vanishes on the
/// whole space.
pub fn are_gauge_equivalent(op1: &FuchsianOperator, op2: &FuchsianOperator) -> Result<GaugeVerdict> {
    let sol = gauge_solve(op1, op2)?;
    let m = op1.order();
    let diag = |g: &PolyMatrix, i: usize| g.get(i, i).coeff(0);
    let possible = (0..m).all(|i| sol.space.iter().any(|g| !diag(g, i).is_zero()));
    let mut intertwiner = None;
    if possible {
        // sum_i t^i g_i avoids the finitely many bad t
        for t in 0i64.. {
            let t = Rational::from(t);
            let g = sol
                .space
                .iter()
                .enumerate()
                .fold(PolyMatrix::zeros(m, m), |acc, (i, gi)| {
                    acc.add(&gi.map(|e| e.scale(&t.pow(i as u32))))
                });
            if (0..m).all(|i| !diag(&g, i).is_zero()) {
                if !verify_intertwiner(&g, op1, op2)? {
                    return Err(Error::Inconsistency("solver returned a non-intertwiner".into()));
                }
                intertwiner = Some(g);
                break;
            }
        }
    }
    let equivalent = intertwiner.is_some();
    let contradiction =
        (equivalent && op1 != op2).then(|| "gauge-equivalent connections from different operators".to_string());
    Ok(GaugeVerdict {
        equivalent,
        intertwiner,
        solution_dimension: sol.space.len(),
        contradiction,
    })
}

/// The degree pattern read back from a space: the largest degree occurring in
/// each entry.
pub fn observed_degrees(space: &[PolyMatrix]) -> Vec<Vec<Option<usize>>> {
    let Some(first) = space.first() else {
        return Vec::new();
    };
    let m = first.rows();
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| space.iter().filter_map(|g| g.get(i, j).degree()).max())
                .collect()
        })
        .collect()
}

/// `T g T^{-1}` in the frame at infinity.
pub fn at_infinity(g: &PolyMatrix, psi: &Polynomial) -> RatFnMatrix {
    let glue = gluing(g.rows(), psi);
    glue.to_infinity.mul(&g.to_ratfn()).mul(&glue.from_infinity)
}

/// Whether a constant matrix is a multiple of the identity.
pub fn is_scalar(g: &QMatrix) -> bool {
    let c = g.get(0, 0).clone();
    g == &QMatrix::identity(g.rows()).scale(&c)
}
