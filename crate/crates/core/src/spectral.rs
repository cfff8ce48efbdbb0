//! Residues, exponents and the indicial cross-check.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::algebra::{Polynomial, QMatrix, Rational};
use crate::connection::{bundle_degree, companion_matrix, infinity_residue};
use crate::error::{Error, Result};
use crate::operator::FuchsianOperator;

/// A singular point: a finite puncture or infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(p) => write!(f, "{p}"),
            Point::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "infinity" | "∞" => Ok(Point::Infinity),
            _ => Ok(Point::Finite(s.parse()?)),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidueData {
    pub point: Point,
    pub matrix: QMatrix,
    pub char_poly: Polynomial,
    /// Eigenvalues with multiplicity, ascending; present when the
    /// characteristic polynomial splits over the rationals.
    pub exponents: Option<Vec<Rational>>,
}

impl ResidueData {
    fn new(point: Point, matrix: QMatrix) -> Result<Self> {
        let char_poly = matrix.charpoly()?;
        let roots = char_poly.rational_roots()?;
        let exponents = (roots.len() == matrix.rows()).then_some(roots);
        Ok(ResidueData {
            point,
            matrix,
            char_poly,
            exponents,
        })
    }

    pub fn trace(&self) -> Rational {
        self.matrix.trace()
    }
}

/// Residue at the puncture `p_j` (1-based): `A(p_j) / psi'(p_j)`.
pub fn residue_at(op: &FuchsianOperator, j: usize) -> Result<ResidueData> {
    let p = op
        .punctures()
        .get(j.wrapping_sub(1))
        .ok_or_else(|| Error::Dimension(format!("no puncture with index {j}")))?
        .clone();
    let a = companion_matrix(op).eval(&p);
    let d = op.psi_prime().eval(&p).recip();
    ResidueData::new(Point::Finite(p), a.scale(&d))
}

/// Residue at infinity in the frame at infinity, for the Euler field `t d/dt`.
pub fn residue_at_infinity(op: &FuchsianOperator) -> Result<ResidueData> {
    ResidueData::new(Point::Infinity, infinity_residue(op)?)
}

pub fn residue(op: &FuchsianOperator, point: &Point) -> Result<ResidueData> {
    match point {
        Point::Infinity => residue_at_infinity(op),
        Point::Finite(p) => {
            let j = op
                .punctures()
                .iter()
                .position(|x| x == p)
                .ok_or_else(|| Error::Dimension(format!("{p} is not a puncture")))?;
            residue_at(op, j + 1)
        }
    }
}

/// Frobenius indicial polynomial, monic in `mu`. At `p_j`, substituting
/// `w = (z-p_j)^mu` gives `mu^(m) - sum_k G_k(p_j) psi'(p_j)^{-k} mu^(m-k)`
/// (falling factorials); at infinity `w = z^{-mu}` gives
/// `(-mu)^(m) - sum_k g_k (-mu)^(m-k)` with `g_k` the top coefficient of `G_k`.
pub fn indicial_polynomial(op: &FuchsianOperator, point: &Point) -> Result<Polynomial> {
    let m = op.order();
    match point {
        Point::Finite(p) => {
            if !op.punctures().contains(p) {
                return Err(Error::Dimension(format!("{p} is not a puncture")));
            }
            let d = op.psi_prime().eval(p).recip();
            let mut out = Polynomial::falling_factorial(m);
            for k in 1..=m {
                let c = op.g(k).eval(p) * d.pow(k as u32);
                out = &out - &Polynomial::falling_factorial(m - k).scale(&c);
            }
            Ok(out)
        }
        Point::Infinity => {
            let minus_mu = Polynomial::from_ints(&[0, -1]);
            let ff = |i: usize| Polynomial::falling_factorial(i).compose(&minus_mu);
            let mut out = ff(m);
            for k in 1..=m {
                out = &out - &ff(m - k).scale(&op.top_coefficient(k));
            }
            Ok(if m % 2 == 1 { -out } else { out })
        }
    }
}

/// Coefficients `c_0..c_deg` of `p` in the falling-factorial basis.
pub fn falling_factorial_coords(p: &Polynomial) -> Vec<Rational> {
    let Some(d) = p.degree() else {
        return Vec::new();
    };
    let mut rest = p.clone();
    let mut out = vec![Rational::zero(); d + 1];
    for i in (0..=d).rev() {
        let c = rest.coeff(i);
        if !c.is_zero() {
            rest = &rest - &Polynomial::falling_factorial(i).scale(&c);
        }
        out[i] = c;
    }
    out
}

/// The values `G_1(p), ..., G_m(p)` forced by a monic residue characteristic
/// polynomial at a puncture where `psi'(p) = dpsi`.
pub fn companion_values_from_charpoly(chi: &Polynomial, dpsi: &Rational) -> Result<Vec<Rational>> {
    let m = monic_degree(chi)?;
    let c = falling_factorial_coords(chi);
    Ok((1..=m).map(|k| -(&c[m - k] * &dpsi.pow(k as u32))).collect())
}

/// The top coefficients `g_1, ..., g_m` (of `z^{k(n-1)}` in `G_k`) forced by
/// the characteristic polynomial of the residue at infinity.
pub fn infinity_tops_from_charpoly(chi: &Polynomial) -> Result<Vec<Rational>> {
    let m = monic_degree(chi)?;
    let minus = Polynomial::from_ints(&[0, -1]);
    let mut qpoly = chi.compose(&minus);
    if m % 2 == 1 {
        qpoly = -qpoly;
    }
    let d = falling_factorial_coords(&qpoly);
    Ok((1..=m).map(|k| -d[m - k].clone()).collect())
}

fn monic_degree(chi: &Polynomial) -> Result<usize> {
    match chi.degree() {
        Some(m) if chi.is_monic() => Ok(m),
        _ => Err(Error::InvalidOperator("characteristic polynomial must be monic".into())),
    }
}

/// Number of free coefficients left once all residue characteristic
/// polynomials are prescribed: `sum_{k=2}^m (k(n-1) - n)`.
pub fn accessory_count(m: usize, n: usize) -> usize {
    (2..=m).map(|k| k * (n - 1) - n).sum()
}

/// Build the operator whose residues have the given characteristic
/// polynomials (punctures in order, then infinity). Writes
/// `G_k = L_k + psi H_k` with `L_k` interpolating the forced values at the
/// punctures and `H_k` carrying the forced top coefficient; the remaining
/// coefficients of `H_2, ..., H_m` (ascending, `k` ascending) are taken from
/// `accessory`. For `k = 1` the top coefficient is forced twice, and the two
/// agree exactly when the Fuchs relation holds.
pub fn operator_from_charpolys(
    punctures: Vec<Rational>,
    charpolys: &[Polynomial],
    accessory: &[Rational],
) -> Result<FuchsianOperator> {
    let n = punctures.len();
    if charpolys.len() != n + 1 {
        return Err(Error::Dimension(format!(
            "expected {} characteristic polynomials, got {}",
            n + 1,
            charpolys.len()
        )));
    }
    let m = monic_degree(&charpolys[0])?;
    if n < 2 || m < 2 {
        return Err(Error::InvalidOperator("need m >= 2 and n >= 2".into()));
    }
    if accessory.len() != accessory_count(m, n) {
        return Err(Error::Dimension(format!(
            "expected {} accessory parameters, got {}",
            accessory_count(m, n),
            accessory.len()
        )));
    }
    let psi = Polynomial::from_roots(&punctures);
    let dpsi = psi.derivative();
    let mut values = Vec::with_capacity(n);
    for (p, chi) in punctures.iter().zip(charpolys) {
        if monic_degree(chi)? != m {
            return Err(Error::Dimension("characteristic polynomials differ in degree".into()));
        }
        values.push(companion_values_from_charpoly(chi, &dpsi.eval(p))?);
    }
    let tops = infinity_tops_from_charpoly(&charpolys[n])?;
    let mut free = accessory.iter();
    let mut g = Vec::with_capacity(m);
    for k in 1..=m {
        let nodes: Vec<(Rational, Rational)> = punctures
            .iter()
            .zip(&values)
            .map(|(p, v)| (p.clone(), v[k - 1].clone()))
            .collect();
        let l = Polynomial::interpolate(&nodes);
        if k == 1 {
            if l.coeff(n - 1) != tops[0] {
                return Err(Error::Mismatch("exponents violate the Fuchs relation".into()));
            }
            g.push(l);
            continue;
        }
        let top = k * (n - 1) - n;
        let mut h: Vec<Rational> = (0..top).map(|_| free.next().unwrap().clone()).collect();
        h.push(tops[k - 1].clone());
        g.push(&l + &(&psi * &Polynomial::new(h)));
    }
    FuchsianOperator::new(punctures, g)
}

/// [`operator_from_charpolys`] with split characteristic polynomials.
pub fn operator_from_exponents(
    punctures: Vec<Rational>,
    exponents: &[Vec<Rational>],
    accessory: &[Rational],
) -> Result<FuchsianOperator> {
    let chis: Vec<Polynomial> = exponents.iter().map(|e| Polynomial::from_roots(e.as_slice())).collect();
    operator_from_charpolys(punctures, &chis, accessory)
}

/// Residue data at all `n + 1` points (punctures in order, then infinity),
/// with a chosen ordering of exponents where they are rational.
#[derive(Clone, Debug, Serialize)]
pub struct ExponentTable {
    pub m: usize,
    pub n: usize,
    pub points: Vec<ResidueData>,
    pub ordering: Vec<Option<Vec<Rational>>>,
}

impl ExponentTable {
    pub fn entry(&self, point: &Point) -> Option<(usize, &ResidueData)> {
        self.points.iter().enumerate().find(|(_, r)| &r.point == point)
    }

    pub fn all_rational(&self) -> bool {
        self.points.iter().all(|r| r.exponents.is_some())
    }

    /// Override the order of exponents at `point`; must be a permutation of
    /// the exponent multiset there.
    pub fn set_ordering(&mut self, point: &Point, order: Vec<Rational>) -> Result<()> {
        let (i, r) = self
            .entry(point)
            .ok_or_else(|| Error::Dimension(format!("{point} is not a singular point")))?;
        let Some(ex) = &r.exponents else {
            return Err(Error::Unsupported(format!("exponents at {point} are not rational")));
        };
        let mut a = ex.clone();
        let mut b = order.clone();
        a.sort();
        b.sort();
        if a != b {
            return Err(Error::Mismatch(format!(
                "ordering at {point} is not a permutation of the exponents"
            )));
        }
        self.ordering[i] = Some(order);
        Ok(())
    }

    pub fn total_trace(&self) -> Rational {
        self.points.iter().map(ResidueData::trace).sum()
    }
}

pub fn exponent_table(op: &FuchsianOperator) -> Result<ExponentTable> {
    let mut points = Vec::with_capacity(op.num_punctures() + 1);
    for j in 1..=op.num_punctures() {
        points.push(residue_at(op, j)?);
    }
    points.push(residue_at_infinity(op)?);
    let ordering = points.iter().map(|r| r.exponents.clone()).collect();
    Ok(ExponentTable {
        m: op.order(),
        n: op.num_punctures(),
        points,
        ordering,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GlobalChecks {
    /// Sum of all exponents, when every point splits.
    pub exponent_sum: Option<Rational>,
    pub trace_sum: Rational,
    /// `(n-1) m (m-1) / 2`.
    pub expected_sum: Rational,
    /// `-deg E`.
    pub expected_trace_sum: Rational,
    pub fuchs_relation: bool,
    pub residue_theorem: bool,
}

impl GlobalChecks {
    pub fn passed(&self) -> bool {
        self.fuchs_relation && self.residue_theorem
    }
}

pub fn global_checks(table: &ExponentTable, degree: i64) -> GlobalChecks {
    let (m, n) = (table.m as i64, table.n as i64);
    let expected_sum = Rational::from((n - 1) * m * (m - 1) / 2);
    let expected_trace_sum = Rational::from(-degree);
    let trace_sum = table.total_trace();
    let exponent_sum = table
        .points
        .iter()
        .map(|r| r.exponents.as_ref().map(|e| e.iter().sum::<Rational>()))
        .sum::<Option<Rational>>();
    let fuchs_relation = exponent_sum.as_ref().unwrap_or(&trace_sum) == &expected_sum;
    GlobalChecks {
        residue_theorem: trace_sum == expected_trace_sum,
        exponent_sum,
        trace_sum,
        expected_sum,
        expected_trace_sum,
        fuchs_relation,
    }
}

pub fn operator_global_checks(op: &FuchsianOperator) -> Result<GlobalChecks> {
    let table = exponent_table(op)?;
    Ok(global_checks(&table, bundle_degree(op.order(), op.num_punctures())))
}
