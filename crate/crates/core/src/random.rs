//! Seeded random operators for property tests and the `fuzz` command.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};
use crate::genericity::is_generic;
use crate::operator::FuchsianOperator;
use crate::spectral::{accessory_count, operator_from_exponents};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational `a/b` with `|a| <= num` and `1 <= b <= den`.
pub fn small_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
    Rational::new(rng.random_range(-num..=num), rng.random_range(1..=den))
}

/// `n` distinct rational punctures.
pub fn random_punctures<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    while out.len() < n {
        let p = small_rational(rng, 6, 2);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// A valid operator with arbitrary coefficients: degrees are usually at the
/// Fuchs bound, sometimes lower, and occasionally a coefficient vanishes.
pub fn random_operator<R: Rng>(rng: &mut R, m: usize, n: usize) -> FuchsianOperator {
    let punctures = random_punctures(rng, n);
    let g = (1..=m)
        .map(|k| {
            let bound = k * (n - 1);
            let deg = match rng.random_range(0..10) {
                0 => return Polynomial::zero(),
                1 | 2 => rng.random_range(0..=bound),
                _ => bound,
            };
            Polynomial::new((0..=deg).map(|_| small_rational(rng, 9, 4)).collect())
        })
        .collect();
    FuchsianOperator::new(punctures, g).expect("degrees within the Fuchs bound")
}

const EXPONENT_DENOMINATORS: [i64; 8] = [7, 11, 13, 17, 19, 23, 29, 31];

/// `m` exponents at each of the `n + 1` points (infinity last) with no two
/// at a point differing by an integer and the Fuchs relation satisfied.
pub fn random_exponents<R: Rng>(rng: &mut R, m: usize, n: usize) -> Vec<Vec<Rational>> {
    let target = Rational::from(((n - 1) * m * (m - 1) / 2) as i64);
    loop {
        let mut table: Vec<Vec<Rational>> = Vec::with_capacity(n + 1);
        for _ in 0..=n {
            let mut point = Vec::with_capacity(m);
            while point.len() < m {
                let d = EXPONENT_DENOMINATORS[rng.random_range(0..EXPONENT_DENOMINATORS.len())];
                let x = Rational::new(rng.random_range(-2 * d..=2 * d), d);
                if point.iter().all(|y: &Rational| !(&x - y).is_integer()) {
                    point.push(x);
                }
            }
            table.push(point);
        }
        let total: Rational = table.iter().flatten().sum();
        let last = table[n].pop().unwrap();
        let fixed = &last + &(&target - &total);
        if table[n].iter().all(|y| !(&fixed - y).is_integer()) {
            table[n].push(fixed);
            return table;
        }
    }
}

/// A random operator satisfying both genericity conditions, built from
/// random exponents and accessory parameters and rejection-sampled.
pub fn random_generic_operator<R: Rng>(rng: &mut R, m: usize, n: usize) -> Result<FuchsianOperator> {
    for _ in 0..1000 {
        let punctures = random_punctures(rng, n);
        let exponents = random_exponents(rng, m, n);
        let accessory: Vec<Rational> = (0..accessory_count(m, n)).map(|_| small_rational(rng, 9, 4)).collect();
        let op = operator_from_exponents(punctures, &exponents, &accessory)?;
        if is_generic(&op)? {
            return Ok(op);
        }
    }
    Err(Error::Inconsistency(format!(
        "no generic operator found for m = {m}, n = {n}"
    )))
}
