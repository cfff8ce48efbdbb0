//! The logarithmic connection induced by a Fuchsian operator.
//!
//! Frame conventions: on the affine chart a solution `w` gives the column
//! vector `(w_1, ..., w_m)` with `w_k = psi^{k-1} w^{(k-1)}`, and parallel
//! sections satisfy `dw/dz = (A/psi) w`. Near infinity, with `t = 1/z`, the
//! frame is `w~_k = t^{k-1} d^{k-1}w/dt^{k-1}` and the connection is written as
//! `theta w~ = Theta w~` for the Euler field `theta = t d/dt = -z d/dz`; the
//! connection is logarithmic at infinity exactly when `Theta` is regular there,
//! and the residue is `Theta(infinity)`.
//!
//! [`companion_matrix`] returns `A` acting on column vectors: ones on the
//! superdiagonal, `(k-1) psi'` on the diagonal, and `G_m, ..., G_2, G_1 + (m-1) psi'`
//! along the bottom row. The transpose is the same array written row-wise.

use serde::Serialize;

use crate::algebra::{LaurentSeries, PolyMatrix, Polynomial, QMatrix, RatFnMatrix, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::operator::FuchsianOperator;

/// The modified companion matrix `A(z)` acting on the column frame.
pub fn companion_matrix(op: &FuchsianOperator) -> PolyMatrix {
    let m = op.order();
    let dpsi = op.psi_prime();
    let mut a = PolyMatrix::zeros(m, m);
    for k in 0..m {
        if k + 1 < m {
            a.set(k, k + 1, Polynomial::one());
        }
        a.set(k, k, dpsi.scale(&Rational::from(k)));
    }
    for l in 0..m {
        // bottom row: column l carries G_{m-l}
        let g = op.g(m - l);
        let entry = if l + 1 == m {
            &a.get(m - 1, m - 1).clone() + g
        } else {
            g.clone()
        };
        a.set(m - 1, l, entry);
    }
    a
}

/// Integers `a[kappa][j]` (`0 <= kappa <= j <= max_j`) with
/// `t^j d^j/dt^j = sum_kappa a[kappa][j] (-z)^kappa d^kappa/dz^kappa`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeCoefficients {
    /// `rows[j][kappa]`, zero for `kappa > j`.
    rows: Vec<Vec<i64>>,
}

impl LatticeCoefficients {
    pub fn get(&self, kappa: usize, j: usize) -> i64 {
        self.rows.get(j).and_then(|r| r.get(kappa)).copied().unwrap_or(0)
    }

    pub fn max_j(&self) -> usize {
        self.rows.len() - 1
    }

    /// The unit lower-triangular matrix `M[j][kappa] = a[kappa][j]`.
    pub fn as_matrix(&self, size: usize) -> QMatrix {
        QMatrix::from_fn(size, size, |j, kappa| Rational::from(self.get(kappa, j)))
    }
}

/// Compute the lattice triangle up to `j = max_j` by composing Euler
/// operators: `t^{j+1} d^{j+1}/dt^{j+1} = (theta - j) t^j d^j/dt^j` and
/// `theta = -z d/dz`.
pub fn infinity_lattice_coeffs(max_j: usize) -> LatticeCoefficients {
    // current[kappa] is the coefficient of z^kappa d^kappa/dz^kappa
    let mut current = vec![1i64];
    let mut rows = Vec::with_capacity(max_j + 1);
    for j in 0..=max_j {
        let signed: Vec<i64> = current
            .iter()
            .enumerate()
            .map(|(kappa, c)| if kappa % 2 == 0 { *c } else { -c })
            .collect();
        rows.push(signed);
        // multiply by (theta - j) = -(z d/dz) - j; z d/dz (z^k d^k) = k z^k d^k + z^{k+1} d^{k+1}
        let mut next = vec![0i64; current.len() + 1];
        for (kappa, c) in current.iter().enumerate() {
            next[kappa] -= (kappa as i64 + j as i64) * c;
            next[kappa + 1] -= c;
        }
        current = next;
    }
    LatticeCoefficients { rows }
}

/// `deg E = (1-n) m (m-1) / 2`.
pub fn bundle_degree(m: usize, n: usize) -> i64 {
    (1 - n as i64) * (m * (m - 1) / 2) as i64
}

/// The transition between the affine frame and the frame at infinity:
/// `w~ = T w` with `T = L * diag((-z/psi)^kappa)`, `L` the lattice matrix.
/// Equivalently `w = B * diag((-1)^kappa z^{kappa(n-1)}) * L^{-1} w~` with
/// `B = diag((psi/z^n)^kappa)` holomorphic and invertible at infinity.
#[derive(Clone, Debug, Serialize)]
pub struct Gluing {
    pub lattice: LatticeCoefficients,
    /// `kappa (n-1)` for `kappa = 0..m`.
    pub diagonal_exponents: Vec<usize>,
    /// Diagonal of `B`.
    pub correction: Vec<RationalFunction>,
    #[serde(skip)]
    pub to_infinity: RatFnMatrix,
    #[serde(skip)]
    pub from_infinity: RatFnMatrix,
}

pub fn gluing(m: usize, psi: &Polynomial) -> Gluing {
    let n = psi.degree().expect("psi is nonzero");
    let lattice = infinity_lattice_coeffs(m.saturating_sub(1).max(1));
    let lmat = lattice.as_matrix(m);
    let linv = lmat.inverse().expect("unit triangular");
    let minus_z_over_psi = RationalFunction::new(-&Polynomial::x(), psi.clone());
    let d: Vec<RationalFunction> = (0..m).map(|k| minus_z_over_psi.pow(k as i32)).collect();
    let to_infinity = RatFnMatrix::from_fn(m, m, |j, k| &RationalFunction::constant(lmat.get(j, k).clone()) * &d[k]);
    let from_infinity = RatFnMatrix::from_fn(m, m, |k, j| {
        &d[k].recip() * &RationalFunction::constant(linv.get(k, j).clone())
    });
    let zn = Polynomial::monomial(Rational::one(), n);
    let correction = (0..m)
        .map(|k| RationalFunction::new(psi.clone(), zn.clone()).pow(k as i32))
        .collect();
    Gluing {
        lattice,
        diagonal_exponents: (0..m).map(|k| k * (n - 1)).collect(),
        correction,
        to_infinity,
        from_infinity,
    }
}

/// The connection in the frame at infinity.
#[derive(Clone, Debug)]
pub struct InfinityConnection {
    /// `Theta` as rational functions of `z`; the connection matrix in `t` is `Theta / t`.
    pub theta: RatFnMatrix,
    /// `Theta(infinity)`.
    pub residue: QMatrix,
    /// Pole order at `t = 0` of the connection matrix `Theta / t`.
    pub pole_order: u64,
}

impl InfinityConnection {
    fn from_theta(theta: RatFnMatrix) -> Result<Self> {
        let mut pole_order = 0u64;
        for f in theta.entries() {
            if let Some(d) = f.degree_at_infinity() {
                // Theta ~ t^{-d}, so Theta / t has a pole of order d + 1
                pole_order = pole_order.max((d + 1).max(0) as u64);
            }
        }
        if pole_order > 1 {
            return Err(Error::Inconsistency(format!(
                "connection has a pole of order {pole_order} at infinity"
            )));
        }
        let m = theta.rows();
        let residue = QMatrix::from_fn(m, m, |i, j| {
            theta.get(i, j).value_at_infinity().expect("regular at infinity")
        });
        Ok(InfinityConnection {
            theta,
            residue,
            pole_order,
        })
    }

    /// Laurent expansions in `t` of the connection matrix `Theta / t`.
    pub fn laurent(&self, terms: usize) -> Vec<Vec<LaurentSeries>> {
        (0..self.theta.rows())
            .map(|i| {
                (0..self.theta.cols())
                    .map(|j| {
                        let mut s = self.theta.get(i, j).laurent_at_infinity(terms);
                        if !s.coeffs.is_empty() {
                            s.valuation -= 1;
                        }
                        s
                    })
                    .collect()
            })
            .collect()
    }

    /// The connection matrix `Theta(1/t) / t` as rational functions of `t`.
    pub fn matrix_in_t(&self) -> RatFnMatrix {
        let t_inv = RationalFunction::new(Polynomial::one(), Polynomial::x());
        self.theta.map(|f| &f.invert_variable() * &t_inv)
    }
}

/// Transport `A/psi dz` through the gluing: `Theta = -z (T' + T A/psi) T^{-1}`.
pub fn infinity_connection_matrix(op: &FuchsianOperator) -> Result<InfinityConnection> {
    let psi = op.psi();
    let glue = gluing(op.order(), &psi);
    let omega = companion_matrix(op)
        .to_ratfn()
        .scale(&RationalFunction::new(Polynomial::one(), psi));
    let t = &glue.to_infinity;
    let inner = t.derivative().add(&t.mul(&omega));
    let minus_z = RationalFunction::from_poly(-&Polynomial::x());
    let theta = inner.mul(&glue.from_infinity).scale(&minus_z);
    InfinityConnection::from_theta(theta)
}

/// Change of the residue at infinity when `A` moves by `delta_a`: the value
/// at infinity of `-z T (delta_a / psi) T^{-1}`. The transport is affine in
/// `A`, so this is exact, not just first order.
pub fn infinity_residue_variation(glue: &Gluing, psi: &Polynomial, delta_a: &PolyMatrix) -> Result<QMatrix> {
    let scale = RationalFunction::new(-&Polynomial::x(), psi.clone());
    let moved = glue
        .to_infinity
        .mul(&delta_a.to_ratfn().scale(&scale))
        .mul(&glue.from_infinity);
    let m = moved.rows();
    let mut out = QMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            let v = moved
                .get(i, j)
                .value_at_infinity()
                .ok_or_else(|| Error::Inconsistency("perturbation is not logarithmic at infinity".into()))?;
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// The same connection obtained by rewriting the equation in `t` directly:
/// `theta w~_k = (k-1) w~_k + w~_{k+1}` and
/// `theta w~_m = (m-1) w~_m + t^m d^m w / dt^m`, the last term expanded through
/// the equation. Independent of [`gluing`].
pub fn infinity_companion(op: &FuchsianOperator) -> Result<InfinityConnection> {
    let m = op.order();
    let lattice = infinity_lattice_coeffs(m);
    // X_kappa = (-z)^kappa d^kappa/dz^kappa = sum_i xinv[kappa][i] Y_i
    let xinv = lattice.as_matrix(m).inverse()?;
    let psi = op.psi();
    let minus_z_over_psi = RationalFunction::new(-&Polynomial::x(), psi);
    let mut theta = RatFnMatrix::zeros(m, m);
    for k in 0..m {
        theta.set(k, k, RationalFunction::constant(Rational::from(k)));
        if k + 1 < m {
            theta.set(k, k + 1, RationalFunction::one());
        }
    }
    let mut last = vec![RationalFunction::zero(); m];
    for kappa in 1..m {
        let a = Rational::from(lattice.get(kappa, m));
        if a.is_zero() {
            continue;
        }
        for (i, slot) in last.iter_mut().enumerate() {
            let c = &a * xinv.get(kappa, i);
            *slot = &*slot + &RationalFunction::constant(c);
        }
    }
    // kappa = m: (-z)^m w^(m) = sum_k G_k (-z/psi)^k X_{m-k}
    for k in 1..=m {
        let coef = &RationalFunction::from_poly(op.g(k).clone()) * &minus_z_over_psi.pow(k as i32);
        for (i, slot) in last.iter_mut().enumerate() {
            let c = xinv.get(m - k, i);
            if !c.is_zero() {
                *slot = &*slot + &(&coef * &RationalFunction::constant(c.clone()));
            }
        }
    }
    for (i, v) in last.into_iter().enumerate() {
        let cur = theta.get(m - 1, i).clone();
        theta.set(m - 1, i, &cur + &v);
    }
    InfinityConnection::from_theta(theta)
}

/// The residue at infinity read off [`infinity_companion`] without building
/// it: `G_k (-z/psi)^k` tends to `(-1)^k g_k`, so only the top coefficients
/// `g_k` of `G_k` (degree `k(n-1)`) enter, and they enter linearly.
pub fn infinity_residue_from_tops(tops: &[Rational]) -> Result<QMatrix> {
    let m = tops.len();
    let lattice = infinity_lattice_coeffs(m);
    let xinv = lattice.as_matrix(m).inverse()?;
    let mut r = QMatrix::zeros(m, m);
    for k in 0..m {
        r.set(k, k, Rational::from(k));
        if k + 1 < m {
            r.set(k, k + 1, Rational::one());
        }
    }
    for i in 0..m {
        let mut v = r.get(m - 1, i).clone();
        for kappa in 1..m {
            v += &(Rational::from(lattice.get(kappa, m)) * xinv.get(kappa, i));
        }
        for (k, g) in tops.iter().enumerate().map(|(k, g)| (k + 1, g)) {
            let c = g * xinv.get(m - k, i);
            if k % 2 == 0 {
                v += &c;
            } else {
                v -= &c;
            }
        }
        r.set(m - 1, i, v);
    }
    Ok(r)
}

/// Top coefficients `g_k` (of `z^{k(n-1)}`) of `G_1, ..., G_m`.
pub fn top_coefficients(op: &FuchsianOperator) -> Vec<Rational> {
    let n = op.num_punctures();
    (1..=op.order()).map(|k| op.g(k).coeff(k * (n - 1))).collect()
}

pub fn infinity_residue(op: &FuchsianOperator) -> Result<QMatrix> {
    infinity_residue_from_tops(&top_coefficients(op))
}

/// Pole order of `A/psi` at each finite puncture.
pub fn affine_pole_orders(op: &FuchsianOperator) -> Vec<usize> {
    let psi = op.psi();
    let omega: Vec<RationalFunction> = companion_matrix(op)
        .entries()
        .map(|e| RationalFunction::new(e.clone(), psi.clone()))
        .collect();
    op.punctures()
        .iter()
        .map(|p| omega.iter().map(|f| f.pole_order_at(p)).max().unwrap_or(0))
        .collect()
}

/// Everything needed to write the connection down on both charts.
#[derive(Clone, Debug)]
pub struct ConnectionPresentation {
    pub affine_matrix: PolyMatrix,
    pub infinity: InfinityConnection,
    pub gluing: Gluing,
    pub degree: i64,
}

pub fn presentation(op: &FuchsianOperator) -> Result<ConnectionPresentation> {
    Ok(ConnectionPresentation {
        affine_matrix: companion_matrix(op),
        infinity: infinity_connection_matrix(op)?,
        gluing: gluing(op.order(), &op.psi()),
        degree: bundle_degree(op.order(), op.num_punctures()),
    })
}

#[derive(Serialize)]
struct LaurentView {
    pole_order: u64,
    valuation: i64,
    coefficients: Vec<Rational>,
}

#[derive(Serialize)]
pub struct PresentationView {
    affine_matrix: PolyMatrix,
    affine_pole_orders: Vec<usize>,
    infinity_pole_order: u64,
    infinity_residue: QMatrix,
    infinity_laurent: Vec<Vec<LaurentView>>,
    gluing: Gluing,
    degree: i64,
}

impl ConnectionPresentation {
    /// JSON-friendly view, with `terms` Laurent coefficients per entry.
    pub fn view(&self, op: &FuchsianOperator, terms: usize) -> PresentationView {
        PresentationView {
            affine_matrix: self.affine_matrix.clone(),
            affine_pole_orders: affine_pole_orders(op),
            infinity_pole_order: self.infinity.pole_order,
            infinity_residue: self.infinity.residue.clone(),
            infinity_laurent: self
                .infinity
                .laurent(terms)
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|s| LaurentView {
                            pole_order: s.pole_order(),
                            valuation: s.valuation,
                            coefficients: s.coeffs,
                        })
                        .collect()
                })
                .collect(),
            gluing: self.gluing.clone(),
            degree: self.degree,
        }
    }
}

/// A linear form `sum_i c_i(z) y_i` in the jet variables `y_i = w^{(i)}`,
/// `0 <= i < m`.
#[derive(Clone, Debug, PartialEq)]
struct JetForm(Vec<RationalFunction>);

impl JetForm {
    fn basis(m: usize, i: usize, c: RationalFunction) -> Self {
        let mut v = vec![RationalFunction::zero(); m];
        v[i] = c;
        JetForm(v)
    }

    fn add(&self, other: &JetForm) -> JetForm {
        JetForm(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn scale(&self, c: &RationalFunction) -> JetForm {
        JetForm(self.0.iter().map(|a| a * c).collect())
    }

    /// `d/dz`, eliminating `y_m` through the equation.
    fn derivative(&self, top: &JetForm) -> JetForm {
        let m = self.0.len();
        let mut out: Vec<RationalFunction> = self.0.iter().map(RationalFunction::derivative).collect();
        for i in 0..m {
            if self.0[i].is_zero() {
                continue;
            }
            if i + 1 < m {
                out[i + 1] = &out[i + 1] + &self.0[i];
            } else {
                let extra = top.scale(&self.0[i]);
                for (o, e) in out.iter_mut().zip(extra.0) {
                    *o = &*o + &e;
                }
            }
        }
        JetForm(out)
    }
}

/// Check symbolically that the frame `w_k = psi^{k-1} w^{(k-1)}` of a solution
/// satisfies `dw_k/dz = sum_l (A/psi)_{kl} w_l` identically in the jet
/// variables `w, w', ..., w^{(m-1)}`.
pub fn verify_companion_identity(op: &FuchsianOperator) -> Result<()> {
    let m = op.order();
    let psi = RationalFunction::from_poly(op.psi());
    let inv_psi = psi.recip();
    // w^(m) = sum_k G_k / psi^k w^(m-k)
    let top = (1..=m).fold(JetForm(vec![RationalFunction::zero(); m]), |acc, k| {
        let c = &RationalFunction::from_poly(op.g(k).clone()) * &inv_psi.pow(k as i32);
        acc.add(&JetForm::basis(m, m - k, c))
    });
    let frame: Vec<JetForm> = (0..m).map(|k| JetForm::basis(m, k, psi.pow(k as i32))).collect();
    let a = companion_matrix(op);
    for k in 0..m {
        let lhs = frame[k].derivative(&top);
        let rhs = (0..m).fold(JetForm(vec![RationalFunction::zero(); m]), |acc, l| {
            let c = &RationalFunction::from_poly(a.get(k, l).clone()) * &inv_psi;
            acc.add(&frame[l].scale(&c))
        });
        if lhs != rhs {
            return Err(Error::Inconsistency(format!(
                "companion identity fails in row {}",
                k + 1
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;
    use crate::operator::hypergeometric;

    #[test]
    fn companion_m2_pattern() {
        let op = hypergeometric(&q(1, 3), &q(1, 5), &q(1, 2));
        let a = companion_matrix(&op);
        assert_eq!(a.get(0, 0), &Polynomial::zero());
        assert_eq!(a.get(0, 1), &Polynomial::one());
        assert_eq!(a.get(1, 0), &Polynomial::new(vec![q(0, 1), q(1, 15), q(-1, 15)]));
        assert_eq!(a.get(1, 1), &Polynomial::new(vec![q(-1, 2), q(7, 15)]));
    }

    #[test]
    fn companion_m3_pattern() {
        let g: Vec<Polynomial> = (1..=3).map(|k| Polynomial::from_ints(&[k, 1])).collect();
        let op = FuchsianOperator::new(vec![q(0, 1), q(1, 1), q(3, 1)], g.clone()).unwrap();
        let dpsi = op.psi_prime();
        let a = companion_matrix(&op);
        assert_eq!(a.get(0, 0), &Polynomial::zero());
        assert_eq!(a.get(1, 1), &dpsi);
        assert_eq!(a.get(0, 1), &Polynomial::one());
        assert_eq!(a.get(1, 2), &Polynomial::one());
        assert_eq!(a.get(2, 0), &g[2]);
        assert_eq!(a.get(2, 1), &g[1]);
        assert_eq!(a.get(2, 2), &(&g[0] + &dpsi.scale(&q(2, 1))));
        assert!(a.get(0, 2).is_zero() && a.get(1, 0).is_zero());
    }

    #[test]
    fn lattice_triangle() {
        let a = infinity_lattice_coeffs(5);
        for j in 0..=5 {
            assert_eq!(a.get(j, j), 1);
            assert_eq!(a.get(j + 1, j), 0);
        }
        assert_eq!(a.get(1, 2), -2);
        assert_eq!(a.get(0, 3), 0);
    }

    #[test]
    fn degrees() {
        assert_eq!(bundle_degree(2, 2), -1);
        assert_eq!(bundle_degree(2, 3), -2);
        assert_eq!(bundle_degree(3, 3), -6);
    }

    #[test]
    fn gluing_factors_are_inverse() {
        let psi = Polynomial::from_roots(&[q(0, 1), q(1, 1), q(-2, 1)]);
        let g = gluing(3, &psi);
        assert_eq!(g.to_infinity.mul(&g.from_infinity), RatFnMatrix::identity(3));
        for b in &g.correction {
            assert_eq!(b.value_at_infinity(), Some(q(1, 1)));
        }
    }

    #[test]
    fn hypergeometric_infinity_residue() {
        let op = hypergeometric(&q(1, 3), &q(1, 5), &q(1, 2));
        let inf = infinity_connection_matrix(&op).unwrap();
        assert!(inf.pole_order <= 1);
        let roots = inf.residue.charpoly().unwrap().rational_roots().unwrap();
        assert_eq!(roots, vec![q(1, 5), q(1, 3)]);
    }

    #[test]
    fn closed_form_residue_matches_transport() {
        let g: Vec<Polynomial> = vec![
            Polynomial::new(vec![q(1, 2), q(-3, 7), q(2, 9)]),
            Polynomial::new(vec![q(1, 1), q(0, 1), q(5, 3), q(-1, 4), q(1, 6)]),
            Polynomial::new(vec![q(2, 1), q(1, 1), q(0, 1), q(1, 3), q(-2, 5), q(3, 1), q(1, 8)]),
        ];
        let op = FuchsianOperator::new(vec![q(0, 1), q(1, 1), q(-2, 1)], g).unwrap();
        let via_transport = infinity_connection_matrix(&op).unwrap().residue;
        assert_eq!(infinity_residue(&op).unwrap(), via_transport);
        assert_eq!(infinity_companion(&op).unwrap().residue, via_transport);
    }

    #[test]
    fn residue_variation_is_affine_in_tops() {
        let op = hypergeometric(&q(2, 7), &q(-1, 3), &q(3, 5));
        let psi = op.psi();
        let glue = gluing(2, &psi);
        let mut da = PolyMatrix::zeros(2, 2);
        da.set(1, 0, Polynomial::new(vec![q(1, 1), q(2, 1), q(-5, 3)]));
        da.set(1, 1, Polynomial::new(vec![q(4, 1), q(1, 2)]));
        let moved = infinity_residue_variation(&glue, &psi, &da).unwrap();
        let base = infinity_residue_from_tops(&[q(0, 1), q(0, 1)]).unwrap();
        let tops = infinity_residue_from_tops(&[q(1, 2), q(-5, 3)]).unwrap();
        assert_eq!(moved, tops.sub(&base));
    }

    #[test]
    fn companion_identity_small() {
        let op = hypergeometric(&q(1, 3), &q(1, 5), &q(1, 2));
        verify_companion_identity(&op).unwrap();
    }
}
