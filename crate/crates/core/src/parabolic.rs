//! Eigenvector flags at the singular points and parabolic weights.

use serde::Serialize;

use crate::algebra::{QMatrix, Rational};
use crate::connection::companion_matrix;
use crate::error::{Error, Result};
use crate::operator::FuchsianOperator;
use crate::spectral::{exponent_table, residue_at_infinity, ExponentTable, Point};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointFlag {
    pub point: Point,
    /// Exponents in the chosen order.
    pub exponents: Vec<Rational>,
    /// `eigenvectors[k]` belongs to `exponents[k]`; first nonzero entry is 1.
    pub eigenvectors: Vec<Vec<Rational>>,
    /// `weights[k-1] = beta_k`.
    pub weights: Vec<Rational>,
}

impl PointFlag {
    /// Spanning vectors of the flag step `E_k` (dimension `m - k`).
    pub fn step(&self, k: usize) -> &[Vec<Rational>] {
        &self.eigenvectors[k..]
    }

    /// Columns are the eigenvectors, in order.
    pub fn eigenbasis(&self) -> QMatrix {
        let m = self.eigenvectors.len();
        QMatrix::from_fn(m, m, |i, j| self.eigenvectors[j][i].clone())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParabolicData {
    /// Punctures in order, then infinity.
    pub points: Vec<PointFlag>,
}

impl ParabolicData {
    pub fn at(&self, point: &Point) -> Option<&PointFlag> {
        self.points.iter().find(|f| &f.point == point)
    }
}

fn normalize(v: Vec<Rational>) -> Vec<Rational> {
    let lead = v.iter().find(|x| !x.is_zero()).cloned().expect("nonzero vector");
    let inv = lead.recip();
    v.into_iter().map(|x| x * &inv).collect()
}

/// Eigenvectors of a residue for the given ordered, pairwise distinct
/// eigenvalues, each checked to span an invariant line.
pub fn eigenvectors(residue: &QMatrix, order: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    let m = residue.rows();
    let mut out = Vec::with_capacity(m);
    for mu in order {
        let shifted = residue.sub(&QMatrix::identity(m).scale(mu));
        let ker = shifted.kernel_basis();
        if ker.len() != 1 {
            return Err(Error::Unsupported(format!(
                "eigenvalue {mu} has a {}-dimensional eigenspace",
                ker.len()
            )));
        }
        let v = normalize(ker.into_iter().next().unwrap());
        let image = residue.mul_vec(&v);
        if image.iter().zip(&v).any(|(a, b)| a != &(b * mu)) {
            return Err(Error::Inconsistency(format!("residue does not preserve the {mu}-line")));
        }
        out.push(v);
    }
    Ok(out)
}

/// Default weights `beta^j_k = k/(m+1) + j/((m+1)(n+2))`, with infinity as
/// `j = 0` and the `i`-th puncture as `j = i`.
pub fn default_weights(m: usize, n: usize, j: usize) -> Vec<Rational> {
    let (mm, nn) = ((m + 1) as i64, (n + 2) as i64);
    (1..=m as i64)
        .map(|k| Rational::new(k, mm) + Rational::new(j as i64, mm * nn))
        .collect()
}

/// True when no two weights (across all points) differ by a nonzero integer
/// and no two weights at one point coincide.
pub fn weights_valid(data: &ParabolicData) -> bool {
    let all: Vec<(usize, &Rational)> = data
        .points
        .iter()
        .enumerate()
        .flat_map(|(j, f)| f.weights.iter().map(move |w| (j, w)))
        .collect();
    all.iter().enumerate().all(|(a, (ja, wa))| {
        all[a + 1..].iter().all(|(jb, wb)| {
            let d = *wa - *wb;
            if d.is_zero() {
                ja != jb
            } else {
                !d.is_integer()
            }
        })
    })
}

/// Flags at all points for the orderings recorded in `table`.
pub fn flags(op: &FuchsianOperator, table: &ExponentTable) -> Result<ParabolicData> {
    let n = op.num_punctures();
    let m = op.order();
    let mut points = Vec::with_capacity(n + 1);
    for (idx, (r, ord)) in table.points.iter().zip(&table.ordering).enumerate() {
        let Some(order) = ord else {
            return Err(Error::Unsupported(format!("exponents at {} are not rational", r.point)));
        };
        let j = if r.point == Point::Infinity { 0 } else { idx + 1 };
        points.push(PointFlag {
            point: r.point.clone(),
            exponents: order.clone(),
            eigenvectors: eigenvectors(&r.matrix, order)?,
            weights: default_weights(m, n, j),
        });
    }
    Ok(ParabolicData { points })
}

pub fn default_flags(op: &FuchsianOperator) -> Result<ParabolicData> {
    flags(op, &exponent_table(op)?)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndependenceReport {
    pub same: bool,
    /// First point where the residue data differ.
    pub witness: Option<Point>,
}

/// Whether two operators on the same punctures induce identical residue
/// data: `A_1(p_j) = A_2(p_j)` at every puncture and equal residues at
/// infinity.
pub fn check_independence(op1: &FuchsianOperator, op2: &FuchsianOperator) -> Result<IndependenceReport> {
    if op1.punctures() != op2.punctures() || op1.order() != op2.order() {
        return Err(Error::Mismatch(
            "operators live on different punctures or orders".into(),
        ));
    }
    let (a1, a2) = (companion_matrix(op1), companion_matrix(op2));
    for p in op1.punctures() {
        if a1.eval(p) != a2.eval(p) {
            return Ok(IndependenceReport {
                same: false,
                witness: Some(Point::Finite(p.clone())),
            });
        }
    }
    let same = residue_at_infinity(op1)?.matrix == residue_at_infinity(op2)?.matrix;
    Ok(IndependenceReport {
        same,
        witness: (!same).then_some(Point::Infinity),
    })
}
