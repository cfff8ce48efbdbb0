use fuchsian_core::{q, Polynomial, QMatrix, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(a, b)| q(a, b))
}

fn square(max: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(rational(), n * n).prop_map(move |v| QMatrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
    })
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 1..=max_deg + 1).prop_map(Polynomial::new)
}

/// `det(xI - M)` by cofactor expansion along the first row, over Q[x].
fn cofactor_charpoly(m: &QMatrix) -> Polynomial {
    let n = m.rows();
    let entries: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Polynomial::constant(-m.get(i, j).clone());
                    if i == j {
                        &c + &Polynomial::x()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    laplace(&entries)
}

fn laplace(a: &[Vec<Polynomial>]) -> Polynomial {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut acc = Polynomial::zero();
    for col in 0..n {
        let minor: Vec<Vec<Polynomial>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = &a[0][col] * &laplace(&minor);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Sylvester matrix of `p` and `q`; its rank is `deg p + deg q - deg gcd`.
fn sylvester(p: &Polynomial, q: &Polynomial) -> QMatrix {
    let (dp, dq) = (p.degree().unwrap(), q.degree().unwrap());
    let size = dp + dq;
    QMatrix::from_fn(size, size, |i, j| {
        let (f, d, row) = if i < dq { (p, dp, i) } else { (q, dq, i - dq) };
        // row `row` holds the coefficients of f, highest first, shifted right by `row`
        if j >= row && j - row <= d {
            f.coeff(d - (j - row))
        } else {
            Rational::zero()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn charpoly_matches_cofactor_expansion(m in square(4)) {
        prop_assert_eq!(m.charpoly().unwrap(), cofactor_charpoly(&m));
    }

    #[test]
    fn rank_nullity(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(rational(), 16)) {
        // force some dependence: the last row is the sum of the others
        let mut m = QMatrix::from_fn(rows, cols, |i, j| seed[i * cols + j].clone());
        if rows > 1 {
            for j in 0..cols {
                let s: Rational = (0..rows - 1).map(|i| m.get(i, j).clone()).sum();
                m.set(rows - 1, j, s);
            }
        }
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn inverse_is_two_sided(m in square(4)) {
        if let Ok(inv) = m.inverse() {
            let id = QMatrix::identity(m.rows());
            prop_assert_eq!(m.mul(&inv), id.clone());
            prop_assert_eq!(inv.mul(&m), id);
        } else {
            prop_assert!(m.determinant().unwrap().is_zero());
        }
    }

    #[test]
    fn division_with_remainder(a in poly(6), b in poly(3)) {
        prop_assume!(!b.is_zero());
        let (quot, rem) = a.div_rem(&b);
        prop_assert_eq!(&(&quot * &b) + &rem, a);
        prop_assert!(rem.degree().unwrap_or(0) < b.degree().unwrap().max(1) || rem.is_zero());
    }

    #[test]
    fn gcd_divides_both(a in poly(4), b in poly(4), c in poly(2)) {
        let (x, y) = (&a * &c, &b * &c);
        prop_assume!(!x.is_zero() && !y.is_zero());
        let g = x.gcd(&y);
        prop_assert!(x.div_rem(&g).1.is_zero());
        prop_assert!(y.div_rem(&g).1.is_zero());
        prop_assert!(g.div_rem(&c.monic()).1.is_zero() || c.degree() == Some(0));
    }

    #[test]
    fn gcd_degree_matches_sylvester_rank(a in poly(4), b in poly(4), c in poly(3)) {
        let (x, y) = (&a * &c, &b * &c);
        prop_assume!(x.degree().unwrap_or(0) > 0 && y.degree().unwrap_or(0) > 0);
        let (dx, dy) = (x.degree().unwrap(), y.degree().unwrap());
        prop_assert_eq!(x.gcd(&y).degree().unwrap() + sylvester(&x, &y).rank(), dx + dy);
    }

    #[test]
    fn roots_of_products_are_recovered(roots in prop::collection::vec(rational(), 1..6), extra in 1i64..7) {
        // times x^2 + 2 extra + 1, which has no real roots
        let quad = Polynomial::from_ints(&[2 * extra + 1, 0, 1]);
        let f = &Polynomial::from_roots(&roots) * &quad;
        let mut expected = roots.clone();
        expected.sort();
        prop_assert_eq!(f.rational_roots().unwrap(), expected);
    }
}

#[test]
fn charpoly_of_companion_block() {
    // companion matrix of x^3 - 2x + 5
    let m = QMatrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[-5, 2, 0]]);
    assert_eq!(m.charpoly().unwrap(), Polynomial::from_ints(&[5, -2, 0, 1]));
}

#[test]
fn rationals_stay_canonical() {
    let x = q(6, -4);
    assert!(x.is_canonical());
    assert_eq!(x, q(-3, 2));
    assert_eq!("-3/2".parse::<Rational>().unwrap(), x);
    assert!("3/0".parse::<Rational>().is_err());
}
