//! Univariate rational functions over the rationals, with expansions at infinity.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::Serialize;

use super::poly::Polynomial;
use super::rational::Rational;

/// `num / den` in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

/// A truncated Laurent series `sum_i coeffs[i] * t^(valuation + i)`.
///
/// `valuation` is exact: `coeffs[0]` is nonzero unless the series is zero,
/// in which case `coeffs` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LaurentSeries {
    pub valuation: i64,
    pub coeffs: Vec<Rational>,
}

impl LaurentSeries {
    /// Order of the pole at `t = 0` (zero when holomorphic).
    pub fn pole_order(&self) -> u64 {
        if self.coeffs.is_empty() || self.valuation >= 0 {
            0
        } else {
            self.valuation.unsigned_abs()
        }
    }

    /// Coefficient of `t^k`; zero outside the stored window.
    pub fn coeff(&self, k: i64) -> Rational {
        let i = k - self.valuation;
        if i < 0 {
            return Rational::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(Rational::zero)
    }
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc = den.leading().recip();
        RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(Polynomial::one())
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction::from_poly(Polynomial::constant(c))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        (self.den.degree() == Some(0)).then_some(&self.num)
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero rational function");
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.recip() } else { self.clone() };
        (0..e.unsigned_abs()).fold(RationalFunction::one(), |acc, _| &acc * &base)
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFunction::new(n, &self.den * &self.den)
    }

    /// Value at a finite point; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// Pole order at a finite point (zero when regular there).
    pub fn pole_order_at(&self, x: &Rational) -> usize {
        let lin = Polynomial::linear_root(x);
        let mut d = self.den.clone();
        let mut k = 0;
        loop {
            let (qt, r) = d.div_rem(&lin);
            if !r.is_zero() {
                return k;
            }
            d = qt;
            k += 1;
        }
    }

    /// `deg num - deg den`: the growth exponent at infinity. `None` for zero.
    pub fn degree_at_infinity(&self) -> Option<i64> {
        self.num
            .degree()
            .map(|dn| dn as i64 - self.den.degree().unwrap() as i64)
    }

    pub fn is_regular_at_infinity(&self) -> bool {
        self.degree_at_infinity().is_none_or(|d| d <= 0)
    }

    /// Limit as `z -> infinity`; `None` when the function grows.
    pub fn value_at_infinity(&self) -> Option<Rational> {
        match self.degree_at_infinity() {
            None => Some(Rational::zero()),
            Some(d) if d < 0 => Some(Rational::zero()),
            Some(0) => Some(self.num.leading() / self.den.leading()),
            Some(_) => None,
        }
    }

    /// Laurent expansion in `t = 1/z` around `z = infinity`, with `terms`
    /// coefficients starting at the exact valuation.
    pub fn laurent_at_infinity(&self, terms: usize) -> LaurentSeries {
        let Some(dn) = self.num.degree() else {
            return LaurentSeries {
                valuation: 0,
                coeffs: Vec::new(),
            };
        };
        let dd = self.den.degree().unwrap();
        let valuation = dd as i64 - dn as i64;
        let p = self.num.reversed();
        let q = self.den.reversed();
        // power-series division p / q, q(0) = lead(den) != 0
        let q0_inv = q.coeff(0).recip();
        let mut out: Vec<Rational> = Vec::with_capacity(terms);
        for k in 0..terms {
            let mut acc = p.coeff(k);
            for (j, c) in out.iter().enumerate() {
                let qk = q.coeff(k - j);
                if !qk.is_zero() {
                    acc -= &(c * &qk);
                }
            }
            out.push(acc * &q0_inv);
        }
        LaurentSeries { valuation, coeffs: out }
    }

    /// Substitute `z = 1/t`, returning the function of `t`.
    pub fn invert_variable(&self) -> Self {
        let Some(dn) = self.num.degree() else {
            return RationalFunction::zero();
        };
        let dd = self.den.degree().unwrap();
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        if dd >= dn {
            num = &num * &Polynomial::monomial(Rational::one(), dd - dn);
        } else {
            den = &den * &Polynomial::monomial(Rational::one(), dn - dd);
        }
        RationalFunction::new(num, den)
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.den.degree() == Some(0) {
            self.num.display_with(var)
        } else {
            format!("({}) / ({})", self.num.display_with(var), self.den.display_with(var))
        }
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.recip()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("z"))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}
