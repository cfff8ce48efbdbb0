//! Global sections of the deformation complex and its Euler-characteristic
//! ledger.
//!
//! `End_para` consists of bundle endomorphisms `f` (polynomial matrices in the
//! affine frame, regular at infinity after transport) whose value at every
//! singular point preserves the eigenvector flag. `Omega^1(P) (x) End_iso`
//! consists of forms `B dz / psi` with logarithmic poles whose residues move
//! each flag step into the next one. The differential is
//! `f -> (psi f' - [A, f]) dz / psi`.

use serde::Serialize;

use crate::algebra::{PolyMatrix, Polynomial, QMatrix, RatFnMatrix, Rational, RationalFunction};
use crate::connection::{companion_matrix, gluing, Gluing};
use crate::deformation::dims;
use crate::error::{Error, Result};
use crate::linear::{combine, monomial_slots, reduced_kernel, restrict, ColumnBuilder};
use crate::operator::FuchsianOperator;
use crate::parabolic::ParabolicData;
use crate::spectral::Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SectionKind {
    Para,
    Iso,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionSpace {
    pub kind: SectionKind,
    /// Affine-frame representatives; iso sections stand for `B dz / psi`.
    pub basis: Vec<PolyMatrix>,
    pub unconditioned_dim: usize,
    /// Number of scalar point conditions imposed (all `n + 1` points).
    pub condition_count: usize,
    /// Rank of those conditions on the unconditioned space.
    pub condition_rank: usize,
}

impl SectionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Summand degrees of `End E` in the column frame: `(i-j)(n-1)`.
fn end_degrees(m: usize, n: usize) -> impl Iterator<Item = i64> {
    (0..m).flat_map(move |i| (0..m).map(move |j| (i as i64 - j as i64) * (n as i64 - 1)))
}

/// `(h0, h1)` of a direct sum of line bundles on the projective line.
fn line_bundle_cohomology(degrees: impl Iterator<Item = i64>) -> (i64, i64) {
    degrees.fold((0, 0), |(h0, h1), d| (h0 + (d + 1).max(0), h1 + (-d - 1).max(0)))
}

/// `End E` and `Omega^1(log) (x) End E` before any flag conditions.
pub fn riemann_roch(m: usize, n: usize, kind: SectionKind) -> (i64, i64) {
    let shift = match kind {
        SectionKind::Para => 0,
        SectionKind::Iso => n as i64 - 1,
    };
    line_bundle_cohomology(end_degrees(m, n).map(|d| d + shift))
}

/// Polynomial matrices with entries of degree `<= bound` that define
/// holomorphic sections near infinity: `T f T^{-1}` for endomorphisms,
/// `(z/psi) T B T^{-1}` for forms.
fn regular_at_infinity(m: usize, bound: usize, glue: &Gluing, psi: &Polynomial, kind: SectionKind) -> Vec<PolyMatrix> {
    let slots = monomial_slots(&vec![vec![Some(bound); m]; m]);
    let factor = match kind {
        SectionKind::Para => RationalFunction::one(),
        SectionKind::Iso => RationalFunction::new(Polynomial::x(), psi.clone()),
    };
    let mut polar = ColumnBuilder::default();
    for s in &slots {
        let mut unit = vec![Rational::zero(); slots.len()];
        unit[slots.iter().position(|x| x == s).unwrap()] = Rational::one();
        let f = combine(m, &slots, &unit).to_ratfn().scale(&factor);
        polar.push_polar_at_infinity(&glue.to_infinity.mul(&f).mul(&glue.from_infinity));
    }
    reduced_kernel(&polar.build())
        .iter()
        .map(|v| combine(m, &slots, v))
        .collect()
}

/// Residue (value for endomorphisms) at infinity, in the frame at infinity.
fn value_at_infinity(f: &PolyMatrix, glue: &Gluing, psi: &Polynomial, kind: SectionKind) -> Result<QMatrix> {
    let fr = match kind {
        SectionKind::Para => f.to_ratfn(),
        SectionKind::Iso => f
            .to_ratfn()
            .scale(&RationalFunction::new(-&Polynomial::x(), psi.clone())),
    };
    let t: RatFnMatrix = glue.to_infinity.mul(&fr).mul(&glue.from_infinity);
    let m = f.rows();
    let mut out = QMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            let v = t
                .get(i, j)
                .value_at_infinity()
                .ok_or_else(|| Error::Inconsistency("section is not regular at infinity".into()))?;
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// Entries of `V^{-1} x V` on or above the diagonal (strict: including it).
fn flag_violations(x: &QMatrix, v: &QMatrix, vinv: &QMatrix, strict: bool) -> Vec<Rational> {
    let y = vinv.mul(x).mul(v);
    let m = y.rows();
    let mut out = Vec::new();
    for a in 0..m {
        for b in a..m {
            if strict || a < b {
                out.push(y.get(a, b).clone());
            }
        }
    }
    out
}

fn sections(op: &FuchsianOperator, parabolic: &ParabolicData, kind: SectionKind) -> Result<SectionSpace> {
    let (m, n) = (op.order(), op.num_punctures());
    let psi = op.psi();
    let dpsi = op.psi_prime();
    let glue = gluing(m, &psi);
    let bound = match kind {
        SectionKind::Para => (m - 1) * (n - 1),
        SectionKind::Iso => m * (n - 1),
    };
    let ambient = regular_at_infinity(m, bound, &glue, &psi, kind);
    let (h0, _) = riemann_roch(m, n, kind);
    if ambient.len() as i64 != h0 {
        return Err(Error::Inconsistency(format!(
            "{} sections regular at infinity, expected {h0}",
            ambient.len()
        )));
    }
    let strict = kind == SectionKind::Iso;
    let bases: Vec<(Point, QMatrix, QMatrix)> = parabolic
        .points
        .iter()
        .map(|f| {
            let v = f.eigenbasis();
            let vinv = v.inverse()?;
            Ok((f.point.clone(), v, vinv))
        })
        .collect::<Result<_>>()?;
    let mut conds = ColumnBuilder::default();
    for f in &ambient {
        let mut col = Vec::new();
        for (point, v, vinv) in &bases {
            let x = match point {
                Point::Finite(p) => {
                    let val = f.eval(p);
                    match kind {
                        SectionKind::Para => val,
                        SectionKind::Iso => val.scale(&dpsi.eval(p).recip()),
                    }
                }
                Point::Infinity => value_at_infinity(f, &glue, &psi, kind)?,
            };
            col.extend(flag_violations(&x, v, vinv, strict));
        }
        conds.push_raw(col);
    }
    let per_point = if strict { m * (m + 1) / 2 } else { m * (m - 1) / 2 };
    let condition_count = per_point * bases.len();
    let cmat = conds.build();
    let condition_rank = cmat.rank();
    let coords: Vec<Vec<Rational>> = (0..ambient.len())
        .map(|i| (0..ambient.len()).map(|j| Rational::from((i == j) as i64)).collect())
        .collect();
    let kept = restrict(&coords, cmat);
    let basis = kept
        .iter()
        .map(|c| {
            c.iter()
                .zip(&ambient)
                .fold(PolyMatrix::zeros(m, m), |acc, (ci, f)| acc.add(&f.map(|e| e.scale(ci))))
        })
        .collect();
    Ok(SectionSpace {
        kind,
        basis,
        unconditioned_dim: ambient.len(),
        condition_count,
        condition_rank,
    })
}

pub fn h0_end_para(op: &FuchsianOperator, parabolic: &ParabolicData) -> Result<SectionSpace> {
    sections(op, parabolic, SectionKind::Para)
}

pub fn h0_om_end_iso(op: &FuchsianOperator, parabolic: &ParabolicData) -> Result<SectionSpace> {
    sections(op, parabolic, SectionKind::Iso)
}

/// `psi f' - [A, f]`, the numerator of `D f` over `dz / psi`.
pub fn ad_d(op: &FuchsianOperator, f: &PolyMatrix) -> PolyMatrix {
    let psi = op.psi();
    let a = companion_matrix(op);
    f.derivative().map(|e| &psi * e).sub(&a.commutator(f))
}

#[derive(Clone, Debug, Serialize)]
pub struct Cokernel {
    pub rank: usize,
    pub dim_c: usize,
}

/// Rank and cokernel of `H^0(D)` between the two section spaces.
pub fn dim_c(op: &FuchsianOperator, para: &SectionSpace, iso: &SectionSpace) -> Result<Cokernel> {
    let mut images = ColumnBuilder::default();
    let mut joint = ColumnBuilder::default();
    for b in &iso.basis {
        joint.push_poly_matrix(b);
    }
    for f in &para.basis {
        let img = ad_d(op, f);
        images.push_poly_matrix(&img);
        joint.push_poly_matrix(&img);
    }
    let rank = images.build().rank();
    if joint.build().rank() != iso.dim() {
        return Err(Error::Inconsistency(
            "the differential leaves the space of isomonodromic forms".into(),
        ));
    }
    Ok(Cokernel {
        rank,
        dim_c: iso.dim() - rank,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceLedger {
    pub h0_para: i64,
    pub h1_para: i64,
    pub h0_iso: i64,
    pub h1_iso: i64,
    pub rank_h0d: i64,
    pub dim_c: i64,
    pub dim_k: i64,
    pub dim_h1: i64,
    pub chi_para: i64,
    pub chi_iso: i64,
    pub chi_complex: i64,
    /// Measured rank of the iso point conditions and their naive count.
    pub iso_condition_rank: i64,
    pub iso_condition_count: i64,
}

/// `chi_para = m^2 - (n+1) m (m-1) / 2`.
pub fn chi_para(m: usize, n: usize) -> i64 {
    let (m, n) = (m as i64, n as i64);
    m * m - (n + 1) * m * (m - 1) / 2
}

/// `chi_iso = m^2 (n-1) + m^2 - (n+1) m (m+1) / 2`.
pub fn chi_iso(m: usize, n: usize) -> i64 {
    let (m, n) = (m as i64, n as i64);
    m * m * (n - 1) + m * m - (n + 1) * m * (m + 1) / 2
}

pub fn sequence_ledger(op: &FuchsianOperator, parabolic: &ParabolicData) -> Result<SequenceLedger> {
    let (m, n) = (op.order(), op.num_punctures());
    let para = h0_end_para(op, parabolic)?;
    let iso = h0_om_end_iso(op, parabolic)?;
    let cok = dim_c(op, &para, &iso)?;
    let (cp, ci) = (chi_para(m, n), chi_iso(m, n));
    // chi again from Riemann-Roch on the summands minus the naive point conditions
    for (kind, space, chi) in [(SectionKind::Para, &para, cp), (SectionKind::Iso, &iso, ci)] {
        let (h0, h1) = riemann_roch(m, n, kind);
        if h0 - h1 - space.condition_count as i64 != chi {
            return Err(Error::Inconsistency(format!("{kind:?} Euler characteristic mismatch")));
        }
    }
    let chi_complex = cp - ci;
    let dim_h1 = 2 - chi_complex;
    let (h0_para, h0_iso) = (para.dim() as i64, iso.dim() as i64);
    let dim_c = cok.dim_c as i64;
    let ledger = SequenceLedger {
        h0_para,
        h1_para: h0_para - cp,
        h0_iso,
        h1_iso: h0_iso - ci,
        rank_h0d: cok.rank as i64,
        dim_c,
        dim_k: dim_h1 - dim_c,
        dim_h1,
        chi_para: cp,
        chi_iso: ci,
        chi_complex,
        iso_condition_rank: iso.condition_rank as i64,
        iso_condition_count: iso.condition_count as i64,
    };
    let d = dims(m, n)?;
    let mut problems = Vec::new();
    if ledger.rank_h0d != h0_para - 1 {
        problems.push(format!(
            "H0(D) has rank {} on {} parabolic sections",
            ledger.rank_h0d, h0_para
        ));
    }
    if ledger.dim_k != ledger.dim_c {
        problems.push(format!("dim K = {} but dim C = {}", ledger.dim_k, ledger.dim_c));
    }
    if ledger.dim_h1 != d.c {
        problems.push(format!("dim H1 = {} but c = {}", ledger.dim_h1, d.c));
    }
    if ledger.dim_c != d.e {
        problems.push(format!("dim C = {} but e = {}", ledger.dim_c, d.e));
    }
    if !problems.is_empty() {
        return Err(Error::Inconsistency(problems.join("; ")));
    }
    Ok(ledger)
}
