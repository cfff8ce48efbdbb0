//! Dimension counts and the isomonodromic tangent space of the equation family.

use serde::Serialize;

use crate::algebra::{Matrix, Polynomial, QMatrix, RatFnMatrix, Rational, RationalFunction};
use crate::connection::infinity_residue_from_tops;
use crate::error::{Error, Result};
use crate::linear::reduced_kernel;
use crate::operator::FuchsianOperator;
use crate::spectral::{indicial_polynomial, residue_at, residue_at_infinity, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub e: i64,
    pub c: i64,
}

impl Dims {
    /// `c = 0`: the family is rigid.
    pub fn is_rigid(&self) -> bool {
        self.c == 0
    }
}

/// `c = 2 - 2m^2 + m(m-1)(n+1)` and `e = c/2`.
pub fn dims(m: usize, n: usize) -> Result<Dims> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidOperator("dims needs m >= 2 and n >= 2".into()));
    }
    let (m, n) = (m as i64, n as i64);
    let c = 2 - 2 * m * m + m * (m - 1) * (n + 1);
    if c < 0 || c % 2 != 0 {
        return Err(Error::Inconsistency(format!(
            "c = {c} is not a nonnegative even integer"
        )));
    }
    Ok(Dims { e: c / 2, c })
}

/// Number of coefficients of `G_1, ..., G_m`: `(n-1)m(m+1)/2 + m`.
pub fn coefficient_count(m: usize, n: usize) -> usize {
    (n - 1) * m * (m + 1) / 2 + m
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentVector {
    /// `delta G_1, ..., delta G_m`.
    pub dg: Vec<Polynomial>,
}

impl TangentVector {
    fn from_coords(m: usize, n: usize, v: &[Rational]) -> Self {
        let mut it = v.iter();
        let dg = (1..=m)
            .map(|k| Polynomial::new((0..=k * (n - 1)).map(|_| it.next().unwrap().clone()).collect()))
            .collect();
        TangentVector { dg }
    }

    /// `op + t * self`.
    pub fn apply(&self, op: &FuchsianOperator, t: &Rational) -> Result<FuchsianOperator> {
        let g = op
            .coefficients()
            .iter()
            .zip(&self.dg)
            .map(|(g, d)| g + &d.scale(t))
            .collect();
        op.with_coefficients(g)
    }

    /// The perturbation `delta A` of the companion matrix: `delta G` along
    /// the bottom row.
    pub fn delta_a(&self) -> Matrix<Polynomial> {
        let m = self.dg.len();
        let mut a = Matrix::zeros(m, m);
        for l in 0..m {
            a.set(m - 1, l, self.dg[m - 1 - l].clone());
        }
        a
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DeformationBasis {
    pub basis: Vec<TangentVector>,
    pub dimension: usize,
    pub constraint_rank: usize,
    pub expected: i64,
    /// Set when the kernel dimension differs from `e`.
    pub diagnostic: Option<String>,
}

/// Derivative at `t = 0` of the non-leading characteristic polynomial
/// coefficients of `r + t l`, from samples at `t = 0..=m`.
fn charpoly_derivative(r: &QMatrix, l: &QMatrix) -> Result<Vec<Rational>> {
    let m = r.rows();
    let samples: Vec<Polynomial> = (0..=m)
        .map(|t| r.add(&l.scale(&Rational::from(t))).charpoly())
        .collect::<Result<_>>()?;
    Ok((0..m)
        .map(|i| {
            let nodes: Vec<(Rational, Rational)> = samples
                .iter()
                .enumerate()
                .map(|(t, p)| (Rational::from(t), p.coeff(i)))
                .collect();
            Polynomial::interpolate(&nodes).coeff(1)
        })
        .collect())
}

/// Residues at the punctures (in order) and at infinity.
fn residues(op: &FuchsianOperator) -> Result<Vec<QMatrix>> {
    let mut out: Vec<QMatrix> = (1..=op.num_punctures())
        .map(|j| residue_at(op, j).map(|r| r.matrix))
        .collect::<Result<_>>()?;
    out.push(residue_at_infinity(op)?.matrix);
    Ok(out)
}

/// Basis of perturbations `delta G` keeping every residue characteristic
/// polynomial fixed to first order, in reduced row-echelon form over the
/// coefficient order (`k` ascending, then degree ascending).
pub fn isomonodromic_tangent_basis(op: &FuchsianOperator) -> Result<DeformationBasis> {
    let (m, n) = (op.order(), op.num_punctures());
    let count = coefficient_count(m, n);
    let base = residues(op)?;
    let dpsi = op.psi_prime();
    let r0 = infinity_residue_from_tops(&vec![Rational::zero(); m])?;
    // columns[i] = derivative of all charpoly coefficients along unit vector i
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(count);
    for i in 0..count {
        let mut unit = vec![Rational::zero(); count];
        unit[i] = Rational::one();
        let v = TangentVector::from_coords(m, n, &unit);
        let da = v.delta_a();
        let mut col = Vec::with_capacity((n + 1) * m);
        for (p, r) in op.punctures().iter().zip(&base) {
            let l = da.eval(p).scale(&dpsi.eval(p).recip());
            col.extend(charpoly_derivative(r, &l)?);
        }
        // the closed form is affine in the top coefficients
        let tops: Vec<Rational> = (1..=m).map(|k| v.dg[k - 1].coeff(k * (n - 1))).collect();
        let l = infinity_residue_from_tops(&tops)?.sub(&r0);
        col.extend(charpoly_derivative(&base[n], &l)?);
        columns.push(col);
    }
    let rows = (n + 1) * m;
    let constraints = QMatrix::from_fn(rows, count, |r, c| columns[c][r].clone());
    let basis: Vec<TangentVector> = reduced_kernel(&constraints)
        .iter()
        .map(|v| TangentVector::from_coords(m, n, v))
        .collect();
    let expected = dims(m, n)?.e;
    let dimension = basis.len();
    let diagnostic = (dimension as i64 != expected)
        .then(|| format!("tangent dimension {dimension} differs from e = {expected}; operator is not generic"));
    Ok(DeformationBasis {
        basis,
        dimension,
        constraint_rank: constraints.rank(),
        expected,
        diagnostic,
    })
}

/// Check through the indicial polynomials (not the residue matrices) that
/// moving along `v` leaves every local exponent unchanged.
pub fn preserves_exponents(op: &FuchsianOperator, v: &TangentVector, t: &Rational) -> Result<bool> {
    let moved = v.apply(op, t)?;
    let mut points: Vec<Point> = op.punctures().iter().cloned().map(Point::Finite).collect();
    points.push(Point::Infinity);
    for p in &points {
        if indicial_polynomial(op, p)? != indicial_polynomial(&moved, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A matrix-valued 1-form `a dz + b dzbar`.
#[derive(Clone, Debug, PartialEq)]
pub struct OneForm {
    pub dz: RatFnMatrix,
    pub dzbar: RatFnMatrix,
}

impl OneForm {
    /// `delta A / psi dz`.
    pub fn from_tangent(v: &TangentVector, op: &FuchsianOperator) -> Self {
        let inv_psi = RationalFunction::new(Polynomial::one(), op.psi());
        let m = op.order();
        OneForm {
            dz: v.delta_a().to_ratfn().scale(&inv_psi),
            dzbar: RatFnMatrix::zeros(m, m),
        }
    }
}

/// Coefficient of `dz ^ dzbar` in `tr(phi_1 ^ phi_2)`.
pub fn wedge_trace(phi1: &OneForm, phi2: &OneForm) -> RationalFunction {
    let t1 = phi1.dz.mul(&phi2.dzbar).trace();
    let t2 = phi1.dzbar.mul(&phi2.dz).trace();
    &t1 - &t2
}

/// The integrand `tr(phi_1 ^ phi_2)` for two equation deformations; both are
/// of type (1,0), so it must vanish identically.
pub fn lagrangian_pairing(v1: &TangentVector, v2: &TangentVector, op: &FuchsianOperator) -> Result<RationalFunction> {
    let w = wedge_trace(&OneForm::from_tangent(v1, op), &OneForm::from_tangent(v2, op));
    if !w.is_zero() {
        return Err(Error::Inconsistency(format!("wedge-trace pairing is {w}, not zero")));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;
    use crate::operator::hypergeometric;

    #[test]
    fn dims_table() {
        assert_eq!(dims(2, 3).unwrap(), Dims { e: 1, c: 2 });
        assert_eq!(dims(2, 2).unwrap(), Dims { e: 0, c: 0 });
        assert!(dims(2, 2).unwrap().is_rigid());
        assert_eq!(dims(3, 3).unwrap(), Dims { e: 4, c: 8 });
        assert!(dims(1, 3).is_err());
    }

    #[test]
    fn hypergeometric_is_rigid() {
        let op = hypergeometric(&q(1, 3), &q(1, 5), &q(1, 2));
        let b = isomonodromic_tangent_basis(&op).unwrap();
        assert_eq!(b.dimension, 0);
        assert_eq!(b.constraint_rank, 5);
        assert!(b.diagnostic.is_none());
    }

    #[test]
    fn heun_direction_is_psi_multiple() {
        let ex = vec![
            vec![q(0, 1), q(1, 3)],
            vec![q(0, 1), q(2, 7)],
            vec![q(0, 1), q(1, 11)],
            vec![q(1, 5), q(2, 1) - q(1, 3) - q(2, 7) - q(1, 11) - q(1, 5)],
        ];
        let op = crate::spectral::operator_from_exponents(vec![q(0, 1), q(1, 1), q(-1, 1)], &ex, &[q(1, 4)]).unwrap();
        let b = isomonodromic_tangent_basis(&op).unwrap();
        assert_eq!(b.dimension, 1);
        let v = &b.basis[0];
        assert!(v.dg[0].is_zero());
        let (quot, rem) = v.dg[1].div_rem(&op.psi());
        assert!(rem.is_zero());
        assert_eq!(quot.degree(), Some(0));
        assert!(preserves_exponents(&op, v, &q(7, 3)).unwrap());
    }

    #[test]
    fn dzbar_forms_pair_nontrivially() {
        let m = 2;
        let e = RatFnMatrix::from_fn(m, m, |i, j| {
            if i == 0 && j == 1 {
                RationalFunction::one()
            } else {
                RationalFunction::zero()
            }
        });
        let f = RatFnMatrix::from_fn(m, m, |i, j| {
            if i == 1 && j == 0 {
                RationalFunction::one()
            } else {
                RationalFunction::zero()
            }
        });
        let a = OneForm {
            dz: e,
            dzbar: RatFnMatrix::zeros(m, m),
        };
        let b = OneForm {
            dz: RatFnMatrix::zeros(m, m),
            dzbar: f,
        };
        assert_eq!(wedge_trace(&a, &b), RationalFunction::one());
        assert_eq!(wedge_trace(&b, &a), -&RationalFunction::one());
    }
}
