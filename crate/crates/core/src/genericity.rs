//! Genericity of the exponent data: non-resonance at each point, and the
//! absence of integer sums over selections of exponents.
//!
//! A selection takes `k` distinct exponents at every one of the `n + 1`
//! points, `1 <= k <= m - 1`; its total is minus the degree of a would-be
//! invariant subbundle of rank `k`. Taking all `m` exponents everywhere
//! always gives the integer of the Fuchs relation, so `k = m` is excluded.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};
use crate::operator::FuchsianOperator;
use crate::spectral::{exponent_table, ExponentTable, Point};

pub const DEFAULT_MAX_BITS: u32 = 256;
const START_BITS: u32 = 64;
const WITNESS_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumMode {
    /// Exact arithmetic, falling back to intervals only when composed
    /// polynomials would exceed the degree cap.
    Auto,
    /// Enclose every exponent numerically, even rational ones.
    ForceInterval,
}

#[derive(Clone, Debug)]
pub struct GenericityOptions {
    pub max_bits: u32,
    pub mode: SumMode,
    pub composed_degree_cap: usize,
}

impl Default for GenericityOptions {
    fn default() -> Self {
        GenericityOptions {
            max_bits: DEFAULT_MAX_BITS,
            mode: SumMode::Auto,
            composed_degree_cap: 256,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Interval { bits: u32 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResonanceWitness {
    /// Integer difference of two eigenvalues (0 for a repeated one).
    pub shift: u64,
    /// The pair `(mu, mu + shift)` when the point splits over the rationals.
    pub pair: Option<(Rational, Rational)>,
    /// Monic common factor of `chi(x)` and `chi(x + shift)`.
    pub common_factor: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointResonance {
    pub point: Point,
    pub nonresonant: bool,
    pub witness: Option<ResonanceWitness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Selection {
    pub point: Point,
    /// Positions in the chosen exponent ordering; absent for points whose
    /// exponents are not rational.
    pub indices: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SumWitness {
    pub k: usize,
    pub selections: Vec<Selection>,
    pub total: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SumCheck {
    pub integer_sum_free: bool,
    pub witnesses: Vec<SumWitness>,
    pub mode: Mode,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenericityReport {
    pub nonresonant: Vec<PointResonance>,
    pub integer_sum_free: bool,
    pub sum_witnesses: Vec<SumWitness>,
    pub mode: Mode,
    /// Consequence of non-resonance: every residue has distinct eigenvalues.
    pub regular_semisimple: bool,
    /// Consequence of integer-sum freeness: no proper invariant subbundles.
    pub irreducible: bool,
}

impl GenericityReport {
    pub fn is_generic(&self) -> bool {
        self.regular_semisimple && self.integer_sum_free
    }
}

/// Non-resonance at one point from its characteristic polynomial alone:
/// `chi` has a repeated root, or `chi(x)` and `chi(x + k)` share a root for
/// an integer `k > 0`. The candidate shifts are the positive integer roots
/// of the difference polynomial `prod_{i,j} (x - (lambda_i - lambda_j))`.
pub fn resonance_witness(chi: &Polynomial) -> Option<ResonanceWitness> {
    let g0 = chi.gcd(&chi.derivative());
    if g0.degree().unwrap_or(0) > 0 {
        return Some(ResonanceWitness {
            shift: 0,
            pair: None,
            common_factor: g0,
        });
    }
    let shifts = difference_polynomial(chi)
        .rational_roots()
        .expect("difference polynomial is monic");
    let k = shifts
        .into_iter()
        .find(|d| d.is_integer() && !d.is_negative() && !d.is_zero())?;
    let g = chi.gcd(&chi.shift(&k));
    Some(ResonanceWitness {
        shift: k.floor().try_into().unwrap_or(u64::MAX),
        pair: None,
        common_factor: g,
    })
}

/// Monic polynomial whose roots are all differences of roots of `chi`.
pub fn difference_polynomial(chi: &Polynomial) -> Polynomial {
    let reflected = chi.compose(&-&Polynomial::x()).monic();
    composed_sum(&chi.monic(), &reflected)
}

pub fn check_nonresonance(table: &ExponentTable) -> Vec<PointResonance> {
    table
        .points
        .iter()
        .map(|r| {
            let witness = resonance_witness(&r.char_poly).map(|mut w| {
                if let Some(ex) = &r.exponents {
                    let k = Rational::from(w.shift as i64);
                    w.pair = ex
                        .iter()
                        .enumerate()
                        .flat_map(|(i, a)| ex.iter().enumerate().map(move |(j, b)| (i, a, j, b)))
                        .find(|(i, a, j, b)| i != j && *b - *a == k)
                        .map(|(_, a, _, b)| (a.clone(), b.clone()));
                }
                w
            });
            PointResonance {
                point: r.point.clone(),
                nonresonant: witness.is_none(),
                witness,
            }
        })
        .collect()
}

/// All `k`-subsets of `0..m` in lexicographic order.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

fn frac(x: &Rational) -> Rational {
    x - &Rational::from(x.floor())
}

/// Achievable sums over the given rational points, keyed by value, each with
/// the first selection (in lexicographic order) reaching it.
type SumSet = BTreeMap<Rational, Vec<Vec<usize>>>;

fn minkowski(points: &[&Vec<Rational>], k: usize) -> SumSet {
    let mut acc: SumSet = BTreeMap::new();
    acc.insert(Rational::zero(), Vec::new());
    for ex in points {
        let local: Vec<(Rational, Vec<usize>)> = subsets(ex.len(), k)
            .into_iter()
            .map(|s| (s.iter().map(|&i| ex[i].clone()).sum(), s))
            .collect();
        let mut next: SumSet = BTreeMap::new();
        for (a, wa) in &acc {
            for (b, sb) in &local {
                next.entry(a + b).or_insert_with(|| {
                    let mut w = wa.clone();
                    w.push(sb.clone());
                    w
                });
            }
        }
        acc = next;
    }
    acc
}

/// Integer totals when every point has rational exponents, by a
/// meet-in-the-middle on fractional parts.
fn rational_sum_witnesses(points: &[Point], orders: &[&Vec<Rational>], k: usize) -> Vec<SumWitness> {
    let half = orders.len() / 2;
    let left = minkowski(&orders[..half], k);
    let right = minkowski(&orders[half..], k);
    let mut by_frac: BTreeMap<Rational, Vec<(&Rational, &Vec<Vec<usize>>)>> = BTreeMap::new();
    for (b, wb) in &right {
        by_frac.entry(frac(b)).or_default().push((b, wb));
    }
    let mut out = Vec::new();
    for (a, wa) in &left {
        let target = frac(&-a);
        let Some(hits) = by_frac.get(&target) else {
            continue;
        };
        for (b, wb) in hits {
            let selections = wa
                .iter()
                .chain(wb.iter())
                .zip(points)
                .map(|(s, p)| Selection {
                    point: p.clone(),
                    indices: Some(s.clone()),
                })
                .collect();
            out.push(SumWitness {
                k,
                selections,
                total: a + *b,
            });
            if out.len() >= WITNESS_CAP {
                return out;
            }
        }
    }
    out
}

/// Power sums `p_0..=p_upto` of the roots of a monic polynomial (Newton).
fn power_sums(f: &Polynomial, upto: usize) -> Vec<Rational> {
    let d = f.degree().unwrap_or(0);
    // e_i = (-1)^i coeff of x^{d-i}
    let e: Vec<Rational> = (0..=d)
        .map(|i| {
            let c = f.coeff(d - i);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    let mut p = vec![Rational::from(d)];
    for r in 1..=upto {
        let mut s = Rational::zero();
        for i in 1..r.min(d + 1) {
            let t = &e[i] * &p[r - i];
            if i % 2 == 1 {
                s += &t;
            } else {
                s -= &t;
            }
        }
        if r <= d {
            let t = &e[r] * &Rational::from(r);
            if r % 2 == 1 {
                s += &t;
            } else {
                s -= &t;
            }
        }
        p.push(s);
    }
    p
}

/// The monic polynomial of degree `d` with power sums `p_1..p_d` (Newton).
fn from_power_sums(p: &[Rational], d: usize) -> Polynomial {
    let mut e = vec![Rational::one()];
    for r in 1..=d {
        let mut s = Rational::zero();
        for i in 1..=r {
            let t = &e[r - i] * &p[i];
            if i % 2 == 1 {
                s += &t;
            } else {
                s -= &t;
            }
        }
        e.push(s / Rational::from(r));
    }
    let coeffs = (0..=d)
        .map(|j| {
            let i = d - j;
            if i % 2 == 0 {
                e[i].clone()
            } else {
                -e[i].clone()
            }
        })
        .collect();
    Polynomial::new(coeffs)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Monic polynomial whose roots are the sums over `k`-subsets of the roots
/// of `f` (with multiplicity). Uses the expansion of
/// `prod_i (1 + y e^{lambda_i t})` truncated in `y` and `t`.
pub fn subset_sum_polynomial(f: &Polynomial, k: usize) -> Polynomial {
    let m = f.degree().unwrap_or(0);
    let d = binomial(m, k);
    let p = power_sums(f, d);
    // series in y (degree <= k) and t (degree <= d) as [y][t], t^r / r! scaled out later
    type Series = Vec<Vec<Rational>>;
    let zero = || vec![vec![Rational::zero(); d + 1]; k + 1];
    let mul = |a: &Series, b: &Series| -> Series {
        let mut out = zero();
        for (i, ai) in a.iter().enumerate() {
            for (r, x) in ai.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, bj) in b.iter().enumerate().take(k + 1 - i) {
                    for (s, y) in bj.iter().enumerate().take(d + 1 - r) {
                        if !y.is_zero() {
                            out[i + j][r + s] += &(x * y);
                        }
                    }
                }
            }
        }
        out
    };
    let mut fact = vec![Rational::one()];
    for r in 1..=d {
        let next = &fact[r - 1] * &Rational::from(r);
        fact.push(next);
    }
    // log = sum_l (-1)^{l+1} y^l / l * sum_r l^r p_r t^r / r!
    let mut log = zero();
    for l in 1..=k {
        let sign = if l % 2 == 1 { Rational::one() } else { -Rational::one() };
        for r in 0..=d {
            let lr = Rational::from(l as i64).pow(r as u32);
            log[l][r] = &(&(&sign * &lr) * &p[r]) / &(&fact[r] * &Rational::from(l));
        }
    }
    // exp(log) = sum_{s <= k} log^s / s!
    let mut total = zero();
    total[0][0] = Rational::one();
    let mut term = total.clone();
    for s in 1..=k {
        // term = log^s / s!
        term = mul(&term, &log);
        let inv = Rational::from(s as i64).recip();
        for (row_t, row) in total.iter_mut().zip(term.iter_mut()) {
            for (x, y) in row_t.iter_mut().zip(row.iter_mut()) {
                *y = &*y * &inv;
                *x += &*y;
            }
        }
    }
    let q: Vec<Rational> = (0..=d).map(|r| &total[k][r] * &fact[r]).collect();
    from_power_sums(&q, d)
}

/// Monic polynomial whose roots are all sums `a + b`, `a` a root of `f`
/// and `b` a root of `g`.
pub fn composed_sum(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (a, b) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    let d = a * b;
    let pf = power_sums(f, d);
    let pg = power_sums(g, d);
    let mut binom = vec![Rational::one()];
    let mut p = vec![Rational::from(d)];
    for r in 1..=d {
        // binomial row r
        let mut row = vec![Rational::one(); r + 1];
        for i in 1..r {
            row[i] = &binom[i - 1] + &binom[i];
        }
        binom = row;
        let s: Rational = (0..=r).map(|i| &(&binom[i] * &pf[i]) * &pg[r - i]).sum();
        p.push(s);
    }
    from_power_sums(&p, d)
}

/// Exact check of one `k` when some points do not split over the
/// rationals. Returns `None` when the composed degree exceeds the cap.
fn composed_sum_witnesses(table: &ExponentTable, k: usize, cap: usize) -> Option<Vec<SumWitness>> {
    let mut rational_points = Vec::new();
    let mut rational_orders = Vec::new();
    let mut composed = Polynomial::one();
    let mut irrational_points = Vec::new();
    // check the cap before composing anything
    let mut degree = 1usize;
    for _ in table.ordering.iter().filter(|o| o.is_none()) {
        degree = degree.checked_mul(binomial(table.m, k))?;
        if degree > cap {
            return None;
        }
    }
    for (r, ord) in table.points.iter().zip(&table.ordering) {
        match ord {
            Some(o) => {
                rational_points.push(r.point.clone());
                rational_orders.push(o);
            }
            None => {
                let s = subset_sum_polynomial(&r.char_poly, k);
                composed = if composed.degree() == Some(0) {
                    s
                } else {
                    composed_sum(&composed, &s)
                };
                irrational_points.push(r.point.clone());
            }
        }
    }
    let sums = minkowski(&rational_orders, k);
    let mut by_frac: BTreeMap<Rational, (&Rational, &Vec<Vec<usize>>)> = BTreeMap::new();
    for (s, w) in &sums {
        by_frac.entry(frac(s)).or_insert((s, w));
    }
    let mut roots = composed.rational_roots().expect("composed polynomial is monic");
    roots.dedup();
    let mut out = Vec::new();
    // a root x of `composed` completes a rational partial sum s to an integer iff frac(s) = frac(-x)
    for x in roots {
        let Some((s, w)) = by_frac.get(&frac(&-&x)) else {
            continue;
        };
        let mut selections: Vec<Selection> = rational_points
            .iter()
            .zip(w.iter())
            .map(|(p, idx)| Selection {
                point: p.clone(),
                indices: Some(idx.clone()),
            })
            .collect();
        selections.extend(irrational_points.iter().map(|p| Selection {
            point: p.clone(),
            indices: None,
        }));
        out.push(SumWitness {
            k,
            selections,
            total: &x + *s,
        });
        if out.len() >= WITNESS_CAP {
            return Some(out);
        }
    }
    Some(out)
}

/// Complex dyadic rationals for root enclosures.
#[derive(Clone, Debug, PartialEq)]
struct Complex {
    re: Rational,
    im: Rational,
}

impl Complex {
    fn real(re: Rational) -> Self {
        Complex {
            re,
            im: Rational::zero(),
        }
    }
    fn add(&self, o: &Complex) -> Complex {
        Complex {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    fn sub(&self, o: &Complex) -> Complex {
        Complex {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn mul(&self, o: &Complex) -> Complex {
        Complex {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
    fn div(&self, o: &Complex) -> Option<Complex> {
        let n = &(&o.re * &o.re) + &(&o.im * &o.im);
        if n.is_zero() {
            return None;
        }
        let num = self.mul(&Complex {
            re: o.re.clone(),
            im: -&o.im,
        });
        Some(Complex {
            re: &num.re / &n,
            im: &num.im / &n,
        })
    }
    /// Upper bound on the modulus.
    fn norm_upper(&self) -> Rational {
        &self.re.abs() + &self.im.abs()
    }
    /// Lower bound on the modulus.
    fn norm_lower(&self) -> Rational {
        std::cmp::max(self.re.abs(), self.im.abs())
    }
    fn round(&self, bits: u32) -> Complex {
        let scale = Rational::from(num_bigint::BigInt::from(1) << bits);
        let r = |x: &Rational| {
            let y = x * &scale;
            Rational::from((&y + &Rational::new(1, 2)).floor()) / &scale
        };
        Complex {
            re: r(&self.re),
            im: r(&self.im),
        }
    }
    fn eval(f: &Polynomial, z: &Complex) -> Complex {
        f.coeffs().iter().rev().fold(Complex::real(Rational::zero()), |acc, c| {
            acc.mul(z).add(&Complex::real(c.clone()))
        })
    }
}

/// A disc certainly containing one root.
#[derive(Clone, Debug)]
struct Enclosure {
    center: Complex,
    radius: Rational,
}

/// Isolating discs for the roots of a monic squarefree polynomial, by
/// Weierstrass iteration at `bits` of fixed-point precision. `None` when the
/// discs fail to separate.
fn isolate_roots(f: &Polynomial, bits: u32) -> Option<Vec<Enclosure>> {
    let d = f.degree()?;
    if d == 0 {
        return Some(Vec::new());
    }
    if d == 1 {
        return Some(vec![Enclosure {
            center: Complex::real(-f.coeff(0)),
            radius: Rational::zero(),
        }]);
    }
    let seed = Complex {
        re: Rational::new(2, 5),
        im: Rational::new(9, 10),
    };
    let mut z: Vec<Complex> = Vec::with_capacity(d);
    let mut cur = Complex::real(Rational::one());
    for _ in 0..d {
        cur = cur.mul(&seed).round(bits);
        z.push(cur.clone());
    }
    let tol = Rational::new(1, 1) / Rational::from(num_bigint::BigInt::from(1) << bits);
    let corrections = |z: &[Complex]| -> Option<Vec<Complex>> {
        (0..d)
            .map(|i| {
                let denom = (0..d)
                    .filter(|&j| j != i)
                    .fold(Complex::real(Rational::one()), |acc, j| acc.mul(&z[i].sub(&z[j])));
                Complex::eval(f, &z[i]).div(&denom)
            })
            .collect()
    };
    for _ in 0..(100 + 4 * bits as usize) {
        let w = corrections(&z)?;
        let mut biggest = Rational::zero();
        for (zi, wi) in z.iter_mut().zip(&w) {
            *zi = zi.sub(wi).round(bits);
            biggest = std::cmp::max(biggest, wi.norm_upper());
        }
        if biggest < tol {
            break;
        }
    }
    let w = corrections(&z)?;
    let dd = Rational::from(d);
    let discs: Vec<Enclosure> = z
        .into_iter()
        .zip(w)
        .map(|(center, wi)| Enclosure {
            center,
            radius: &dd * &wi.norm_upper(),
        })
        .collect();
    for i in 0..d {
        for j in i + 1..d {
            let gap = discs[i].center.sub(&discs[j].center).norm_lower();
            if gap <= &discs[i].radius + &discs[j].radius {
                return None;
            }
        }
    }
    Some(discs)
}

/// Enclosures for all roots of `chi` with multiplicity.
fn enclose_all(chi: &Polynomial, bits: u32) -> Option<Vec<Enclosure>> {
    let mut out = Vec::new();
    for (f, mult) in chi.squarefree_decomposition() {
        let discs = isolate_roots(&f, bits)?;
        for e in discs {
            out.extend(std::iter::repeat_n(e, mult));
        }
    }
    Some(out)
}

/// Interval decision for one `k` at fixed precision: `Some(witnesses)` when
/// every total is separated from the integers (empty) or an exactly
/// rational integer total is found; `None` when undecided.
fn interval_sum_check(table: &ExponentTable, k: usize, bits: u32, force: bool) -> Option<Vec<SumWitness>> {
    let mut exact_points = Vec::new();
    let mut exact_orders = Vec::new();
    let mut numeric: Vec<(Point, Vec<Enclosure>)> = Vec::new();
    for (r, ord) in table.points.iter().zip(&table.ordering) {
        match ord {
            Some(o) if !force => {
                exact_points.push(r.point.clone());
                exact_orders.push(o);
            }
            _ => numeric.push((r.point.clone(), enclose_all(&r.char_poly, bits)?)),
        }
    }
    let fracs: BTreeSet<Rational> = minkowski(&exact_orders, k).keys().map(frac).collect();
    let per_point: Vec<Vec<(Complex, Rational)>> = numeric
        .iter()
        .map(|(_, encl)| {
            subsets(encl.len(), k)
                .into_iter()
                .map(|s| {
                    s.iter()
                        .fold((Complex::real(Rational::zero()), Rational::zero()), |(c, r), &i| {
                            (c.add(&encl[i].center), &r + &encl[i].radius)
                        })
                })
                .collect()
        })
        .collect();
    let mut idx = vec![0usize; per_point.len()];
    loop {
        let (c, rad) = idx.iter().enumerate().fold(
            (Complex::real(Rational::zero()), Rational::zero()),
            |(c, r), (p, &i)| (c.add(&per_point[p][i].0), &r + &per_point[p][i].1),
        );
        if c.im.abs() <= rad {
            for f in &fracs {
                let x = &c.re + f;
                let near = Rational::from((&x + &Rational::new(1, 2)).floor());
                if (&x - &near).abs() <= rad {
                    return None;
                }
            }
        }
        // advance the odometer
        let mut p = 0;
        loop {
            if p == idx.len() {
                return Some(Vec::new());
            }
            idx[p] += 1;
            if idx[p] < per_point[p].len() {
                break;
            }
            idx[p] = 0;
            p += 1;
        }
    }
}

pub fn check_no_integer_sums(table: &ExponentTable, opts: &GenericityOptions) -> Result<SumCheck> {
    let m = table.m;
    let force = opts.mode == SumMode::ForceInterval;
    let mut witnesses = Vec::new();
    let mut mode = Mode::Exact;
    for k in 1..m {
        let exact = if force {
            None
        } else if table.all_rational() {
            let orders: Vec<&Vec<Rational>> = table.ordering.iter().map(|o| o.as_ref().unwrap()).collect();
            let points: Vec<Point> = table.points.iter().map(|r| r.point.clone()).collect();
            Some(rational_sum_witnesses(&points, &orders, k))
        } else {
            composed_sum_witnesses(table, k, opts.composed_degree_cap)
        };
        let found = match exact {
            Some(w) => w,
            None => {
                let mut bits = START_BITS.min(opts.max_bits);
                loop {
                    if let Some(w) = interval_sum_check(table, k, bits, force) {
                        mode = match mode {
                            Mode::Interval { bits: b } => Mode::Interval { bits: b.max(bits) },
                            Mode::Exact => Mode::Interval { bits },
                        };
                        break w;
                    }
                    if bits >= opts.max_bits {
                        return Err(Error::Undecided {
                            bits,
                            detail: format!("selection sums of size {k} not separated from the integers"),
                        });
                    }
                    bits = (bits * 2).min(opts.max_bits);
                }
            }
        };
        witnesses.extend(found);
    }
    witnesses.truncate(WITNESS_CAP);
    Ok(SumCheck {
        integer_sum_free: witnesses.is_empty(),
        witnesses,
        mode,
    })
}

pub fn check_table(table: &ExponentTable, opts: &GenericityOptions) -> Result<GenericityReport> {
    let nonresonant = check_nonresonance(table);
    let sums = check_no_integer_sums(table, opts)?;
    let regular_semisimple = nonresonant.iter().all(|p| p.nonresonant);
    Ok(GenericityReport {
        nonresonant,
        integer_sum_free: sums.integer_sum_free,
        irreducible: sums.integer_sum_free,
        sum_witnesses: sums.witnesses,
        mode: sums.mode,
        regular_semisimple,
    })
}

pub fn genericity_report(op: &FuchsianOperator, opts: &GenericityOptions) -> Result<GenericityReport> {
    check_table(&exponent_table(op)?, opts)
}

pub fn is_generic(op: &FuchsianOperator) -> Result<bool> {
    Ok(genericity_report(op, &GenericityOptions::default())?.is_generic())
}
