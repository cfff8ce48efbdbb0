//! Linear maps on spaces of polynomial matrices, assembled coefficient-wise.

use std::collections::BTreeMap;

use crate::algebra::{PolyMatrix, Polynomial, QMatrix, RatFnMatrix, Rational};

/// A matrix with one entry `(i, j)` of degree at most `bound`; the space of
/// such matrices is spanned by monomials `z^d E_ij`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub i: usize,
    pub j: usize,
    pub deg: usize,
}

/// Monomial basis for entries with the given degree bounds (`None` = zero).
pub fn monomial_slots(bounds: &[Vec<Option<usize>>]) -> Vec<Slot> {
    let mut out = Vec::new();
    for (i, row) in bounds.iter().enumerate() {
        for (j, b) in row.iter().enumerate() {
            if let Some(b) = b {
                out.extend((0..=*b).map(|deg| Slot { i, j, deg }));
            }
        }
    }
    out
}

pub fn slot_matrix(size: usize, s: &Slot) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(size, size);
    m.set(s.i, s.j, Polynomial::monomial(Rational::one(), s.deg));
    m
}

pub fn combine(size: usize, slots: &[Slot], coords: &[Rational]) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(size, size);
    for (s, c) in slots.iter().zip(coords) {
        if !c.is_zero() {
            let cur = m.get(s.i, s.j).clone();
            m.set(s.i, s.j, &cur + &Polynomial::monomial(c.clone(), s.deg));
        }
    }
    m
}

/// Collects sparse coefficient vectors keyed by an ordered label and lays
/// them out as the columns of a dense matrix.
#[derive(Default)]
pub struct ColumnBuilder {
    columns: Vec<BTreeMap<(usize, usize, usize), Rational>>,
}

impl ColumnBuilder {
    pub fn push_poly_matrix(&mut self, m: &PolyMatrix) {
        let mut col = BTreeMap::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                for (d, c) in m.get(i, j).coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        col.insert((i, j, d), c.clone());
                    }
                }
            }
        }
        self.columns.push(col);
    }

    /// Polar parts at infinity of each entry (coefficients of `z^d`, `d >= 1`,
    /// of the polynomial part).
    pub fn push_polar_at_infinity(&mut self, m: &RatFnMatrix) {
        let mut col = BTreeMap::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let f = m.get(i, j);
                let (q, _) = f.num().div_rem(f.den());
                for (d, c) in q.coeffs().iter().enumerate().skip(1) {
                    if !c.is_zero() {
                        col.insert((i, j, d), c.clone());
                    }
                }
            }
        }
        self.columns.push(col);
    }

    pub fn push_raw(&mut self, values: Vec<Rational>) {
        self.columns.push(
            values
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| ((k, 0, 0), v))
                .collect(),
        );
    }

    pub fn build(self) -> QMatrix {
        let mut labels: Vec<(usize, usize, usize)> = self.columns.iter().flat_map(|c| c.keys().copied()).collect();
        labels.sort();
        labels.dedup();
        let index: BTreeMap<_, _> = labels.iter().enumerate().map(|(r, l)| (*l, r)).collect();
        let mut out = QMatrix::zeros(labels.len(), self.columns.len());
        for (c, col) in self.columns.iter().enumerate() {
            for (l, v) in col {
                out.set(index[l], c, v.clone());
            }
        }
        out
    }
}

/// Basis of the kernel, reduced to row-echelon form for determinism.
pub fn reduced_kernel(m: &QMatrix) -> Vec<Vec<Rational>> {
    let k = if m.rows() == 0 {
        (0..m.cols())
            .map(|i| {
                (0..m.cols())
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect()
    } else {
        m.kernel_basis()
    };
    if k.is_empty() {
        return k;
    }
    let r = QMatrix::from_rows(k).expect("rectangular").rref();
    (0..r.pivots.len()).map(|i| r.reduced.row(i).to_vec()).collect()
}

/// Restrict a space given by basis vectors (in ambient coordinates) to the
/// kernel of `constraint` applied to each basis vector's image; returns new
/// ambient-coordinate basis vectors.
pub fn restrict(basis: &[Vec<Rational>], images: QMatrix) -> Vec<Vec<Rational>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let sub = reduced_kernel(&images);
    let width = basis[0].len();
    let raw: Vec<Vec<Rational>> = sub
        .iter()
        .map(|c| {
            (0..width)
                .map(|x| c.iter().zip(basis).map(|(ci, b)| ci * &b[x]).sum())
                .collect()
        })
        .collect();
    if raw.is_empty() {
        return raw;
    }
    let r = QMatrix::from_rows(raw).expect("rectangular").rref();
    (0..r.pivots.len()).map(|i| r.reduced.row(i).to_vec()).collect()
}
