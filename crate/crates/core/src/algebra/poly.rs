//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rational::Rational;
use crate::error::{Error, Result};

/// A polynomial stored as ascending coefficients. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl From<Vec<Rational>> for Polynomial {
    fn from(coeffs: Vec<Rational>) -> Self {
        Polynomial::new(coeffs)
    }
}

impl From<Polynomial> for Vec<Rational> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c * x^d`.
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Polynomial::new(coeffs)
    }

    pub fn x() -> Self {
        Polynomial::monomial(Rational::one(), 1)
    }

    /// `x - r`
    pub fn linear_root(r: &Rational) -> Self {
        Polynomial::new(vec![-r, Rational::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    /// Monic polynomial with the given roots (with multiplicity).
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots
            .into_iter()
            .fold(Polynomial::one(), |acc, r| &acc * &Polynomial::linear_root(r))
    }

    /// The falling factorial `x (x-1) ... (x-k+1)`.
    pub fn falling_factorial(k: usize) -> Self {
        (0..k).fold(Polynomial::one(), |acc, i| {
            &acc * &Polynomial::linear_root(&Rational::from(i))
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Rational::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => Polynomial::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(i))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// `self(other(x))`
    pub fn compose(&self, other: &Polynomial) -> Self {
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| {
            &(&acc * other) + &Polynomial::constant(c.clone())
        })
    }

    /// `self(x + a)`
    pub fn shift(&self, a: &Rational) -> Self {
        self.compose(&Polynomial::new(vec![a.clone(), Rational::one()]))
    }

    /// `x^deg * self(1/x)`; the coefficient sequence reversed.
    pub fn reversed(&self) -> Self {
        Polynomial::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Multiplicity of `x = 0` as a root.
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Polynomial::zero(), Polynomial::zero());
        };
        if sd < dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &(&c * dc);
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        !self.is_zero() && other.div_rem(self).1.is_zero()
    }

    /// Exact quotient; errors if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Inconsistency(format!("{divisor} does not divide {self}")))
        }
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.degree().unwrap_or(0) > 0 && other.degree().unwrap_or(0) > 0 && coprime_modulo_prime(self, other) {
            return Polynomial::one();
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Yun's squarefree decomposition of a nonconstant polynomial: pairs
    /// `(f_i, i)` of monic, squarefree, pairwise coprime factors with
    /// `self = lead * prod f_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Polynomial, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let d = f.derivative();
        let a0 = f.gcd(&d);
        let (mut b, _) = f.div_rem(&a0);
        let (mut c, _) = d.div_rem(&a0);
        let mut i = 1;
        loop {
            let dd = &c - &b.derivative();
            if dd.is_zero() {
                if b.degree().unwrap_or(0) > 0 {
                    out.push((b.monic(), i));
                }
                break;
            }
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = dd.div_rem(&a).0;
            i += 1;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
        }
        out
    }

    /// The unique polynomial of degree `< points.len()` through the given
    /// nodes (Lagrange form). Nodes must be distinct.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Polynomial::one();
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = &basis * &Polynomial::linear_root(xj);
                    denom *= &(xi - xj);
                }
            }
            out = &out + &basis.scale(&(yi / &denom));
        }
        out
    }

    /// Scale to coprime integer coefficients with a positive leading term.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    /// Upper bound `max(1, sum |c_i| / |lead|)` on the modulus of every complex root.
    pub fn cauchy_bound(&self) -> Rational {
        let lc = self.leading().abs();
        let s: Rational = self.coeffs[..self.coeffs.len().saturating_sub(1)]
            .iter()
            .map(Rational::abs)
            .sum();
        let b = s / lc;
        if b < 1 {
            Rational::one()
        } else {
            b
        }
    }

    /// All rational roots with multiplicity, in ascending order.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        let zeros = p.low_order().unwrap_or(0);
        if zeros > 0 {
            roots.extend(std::iter::repeat_n(Rational::zero(), zeros));
            p = Polynomial::new(p.coeffs[zeros..].to_vec());
        }
        if p.degree().unwrap_or(0) == 0 {
            roots.sort();
            return Ok(roots);
        }
        let sqf = p.exact_div(&p.gcd(&p.derivative()))?;
        for r in padic_rational_roots(&sqf) {
            let lin = Polynomial::linear_root(&r);
            loop {
                let (qt, rem) = p.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                roots.push(r.clone());
                p = qt;
            }
        }
        roots.sort();
        Ok(roots)
    }
}

/// Rational roots of a squarefree polynomial, p-adically. For a prime `p`
/// not dividing the leading coefficient `l` and keeping the reduction
/// squarefree, every root `a/b` reduces to a simple root mod `p`; lifting it
/// to `p^k > 2 l B` (`B` a root bound) recovers the integer `l a / b` as the
/// symmetric residue of `l r`. Complete and exact.
fn padic_rational_roots(sqf: &Polynomial) -> Vec<Rational> {
    let ints = sqf.primitive_integer();
    let lead = ints.last().unwrap().clone();
    let p = good_prime(&ints);
    let bound = sqf.cauchy_bound().ceil() + 1;
    let target = BigInt::from(2) * lead.abs() * bound + 1;
    let deriv: Vec<BigInt> = ints.iter().enumerate().skip(1).map(|(i, c)| c * i).collect();
    let eval_mod =
        |c: &[BigInt], x: &BigInt, m: &BigInt| c.iter().rev().fold(BigInt::zero(), |acc, a| (acc * x + a).mod_floor(m));
    let mut out = Vec::new();
    let pb = BigInt::from(p);
    for r0 in 0..p {
        let mut r = BigInt::from(r0);
        if !eval_mod(&ints, &r, &pb).is_zero() {
            continue;
        }
        let mut modulus = pb.clone();
        while modulus < target {
            modulus = &modulus * &modulus;
            let inv = eval_mod(&deriv, &r, &modulus)
                .modinv(&modulus)
                .expect("simple root modulo a good prime");
            r = (&r - eval_mod(&ints, &r, &modulus) * inv).mod_floor(&modulus);
        }
        let mut c = (&lead * &r).mod_floor(&modulus);
        if &c * 2 > modulus {
            c -= &modulus;
        }
        let cand = Rational::new(c, lead.clone());
        if sqf.eval(&cand).is_zero() {
            out.push(cand);
        }
    }
    out
}

/// Sufficient test for coprimality: a common factor over Q survives
/// reduction modulo any prime dividing neither leading coefficient (Gauss's
/// lemma), so coprime reductions prove coprimality. Rational Euclid can blow
/// up badly on large degrees; this settles the common case cheaply.
fn coprime_modulo_prime(a: &Polynomial, b: &Polynomial) -> bool {
    const PRIMES: [u64; 3] = [2_147_483_647, 2_147_483_629, 2_147_483_587];
    let (ia, ib) = (a.primitive_integer(), b.primitive_integer());
    let Some(&p) = PRIMES
        .iter()
        .find(|&&p| mod_small(ia.last().unwrap(), p) != 0 && mod_small(ib.last().unwrap(), p) != 0)
    else {
        return false;
    };
    let ra = ia.iter().map(|c| mod_small(c, p)).collect();
    let rb = ib.iter().map(|c| mod_small(c, p)).collect();
    gcd_mod_p(ra, rb, p).len() == 1
}

/// Smallest odd prime not dividing the leading coefficient for which the
/// reduction stays squarefree; exists because the discriminant is nonzero.
fn good_prime(ints: &[BigInt]) -> u64 {
    (3u64..)
        .filter(|&p| (2..).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .find(|&p| {
            let f: Vec<u64> = ints.iter().map(|c| mod_small(c, p)).collect();
            if *f.last().unwrap() == 0 {
                return false;
            }
            let df: Vec<u64> = f
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * (i as u64 % p) % p)
                .collect();
            gcd_mod_p(f, df, p).len() == 1
        })
        .expect("infinitely many primes")
}

fn mod_small(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().expect("reduced below p")
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Monic gcd over `F_p` of two ascending coefficient vectors.
fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let f = a.last().unwrap() * inv % p;
            for (i, c) in b.iter().enumerate() {
                a[i + shift] = (a[i + shift] + p - f * c % p) % p;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    let inv = pow_mod(*a.last().unwrap(), p - 2, p);
    a.iter().map(|c| c * inv % p).collect()
}

/// Rational roots of a squarefree polynomial by divisor enumeration.
#[cfg(test)]
fn exhaustive_rational_roots(sqf: &Polynomial) -> Result<Vec<Rational>> {
    let ints = sqf.primitive_integer();
    let lead = ints.last().unwrap().abs();
    let trail = ints[0].abs();
    let bound = sqf.cauchy_bound();
    let num_divs = divisors(&trail)?;
    let den_divs = divisors(&lead)?;
    let mut candidates: Vec<Rational> = Vec::new();
    for d in &den_divs {
        for n in &num_divs {
            let r = Rational::new(n.clone(), d.clone());
            if r > bound {
                continue;
            }
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    Ok(candidates.into_iter().filter(|r| sqf.eval(r).is_zero()).collect())
}

impl Polynomial {
    /// Render with a chosen variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}

/// Positive divisors by trial division.
#[cfg(test)]
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    const TRIAL_LIMIT: u64 = 20_000_000;
    let mut n = n.abs();
    if n.is_zero() {
        return Ok(vec![BigInt::one()]);
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2u32);
    let mut steps = 0u64;
    while &p * &p <= n {
        steps += 1;
        if steps > TRIAL_LIMIT {
            return Err(Error::Unsupported(
                "coefficient too large for rational-root divisor enumeration".into(),
            ));
        }
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (f, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pow = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pow);
                pow *= &f;
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::q;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn squarefree_decomposition_recovers_powers() {
        // (x - 1) (x + 2)^2 x^3
        let f = &(&p(&[-1, 1]) * &p(&[2, 1]).pow(2)) * &p(&[0, 1]).pow(3);
        let d = f.squarefree_decomposition();
        assert_eq!(d, vec![(p(&[-1, 1]), 1), (p(&[2, 1]), 2), (p(&[0, 1]), 3)]);
        let back = d.iter().fold(Polynomial::one(), |acc, (g, i)| &acc * &g.pow(*i as u32));
        assert_eq!(back, f);
    }

    #[test]
    fn interpolation_through_nodes() {
        let nodes = vec![(q(0, 1), q(1, 1)), (q(1, 1), q(3, 1)), (q(3, 1), q(-2, 7))];
        let f = Polynomial::interpolate(&nodes);
        assert!(f.degree().unwrap() <= 2);
        for (x, y) in &nodes {
            assert_eq!(&f.eval(x), y);
        }
    }

    #[test]
    fn trims_and_reports_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn division_reconstructs() {
        let a = p(&[-1, 0, 0, 2, 5]);
        let b = p(&[3, 1, 2]);
        let (qt, r) = a.div_rem(&b);
        assert_eq!(&(&qt * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let f = p(&[-1, 1]); // x - 1
        let a = &f * &p(&[2, 0, 1]);
        let b = &f * &p(&[5, 3]);
        assert_eq!(a.gcd(&b), f);
        assert_eq!(p(&[2, 0, 1]).gcd(&p(&[5, 3])), Polynomial::one());
    }

    #[test]
    fn rational_roots_examples() {
        assert_eq!(p(&[-1, 0, 1]).rational_roots().unwrap(), vec![q(-1, 1), q(1, 1)]);
        assert!(p(&[-2, 0, 1]).rational_roots().unwrap().is_empty());
        let half = Polynomial::new(vec![q(0, 1), q(-1, 2), q(1, 1)]);
        let roots = half.rational_roots().unwrap();
        assert_eq!(roots, vec![q(0, 1), q(1, 2)]);
        for r in &roots {
            assert!(half.eval(r).is_zero());
        }
        assert_eq!(Polynomial::zero().rational_roots(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        let poly = Polynomial::from_roots(&[q(2, 3), q(2, 3), q(-5, 7), q(0, 1), q(0, 1)]);
        assert_eq!(
            poly.rational_roots().unwrap(),
            vec![q(-5, 7), q(0, 1), q(0, 1), q(2, 3), q(2, 3)]
        );
    }

    #[test]
    fn padic_roots_agree_with_divisor_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let k = rng.random_range(0..4);
            let roots: Vec<Rational> = (0..k)
                .map(|_| q(rng.random_range(-40..40), rng.random_range(1..30)))
                .collect();
            // an irreducible or split quadratic factor
            let quad = p(&[
                rng.random_range(-12..12),
                rng.random_range(-5..5),
                rng.random_range(1..4),
            ]);
            let f = &Polynomial::from_roots(&roots) * &quad;
            let sqf = f.exact_div(&f.gcd(&f.derivative())).unwrap();
            if sqf.coeff(0).is_zero() {
                continue;
            }
            let mut fast = padic_rational_roots(&sqf);
            fast.sort();
            assert_eq!(fast, exhaustive_rational_roots(&sqf).unwrap(), "{f}");
        }
    }

    #[test]
    fn shift_and_compose() {
        let a = p(&[1, 2, 3]);
        let s = a.shift(&q(1, 2));
        for x in [q(0, 1), q(3, 4), q(-2, 1)] {
            assert_eq!(s.eval(&x), a.eval(&(&x + &q(1, 2))));
        }
        assert_eq!(p(&[0, 1, 1]).compose(&p(&[1, 1])), p(&[2, 3, 1]));
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(p(&[0, -1, 1]).display_with("z"), "z^2 - z");
        assert_eq!(
            Polynomial::new(vec![q(-1, 2), q(7, 15)]).display_with("z"),
            "7/15*z - 1/2"
        );
    }
}
