use fuchsian_core::connection::{
    companion_matrix, gluing, infinity_companion, infinity_connection_matrix, infinity_lattice_coeffs,
    infinity_residue, presentation, verify_companion_identity,
};
use fuchsian_core::random::{random_operator, rng_from_seed};
use fuchsian_core::{hypergeometric, q, FuchsianOperator, Polynomial, RatFnMatrix, RationalFunction};
use num_bigint::BigInt;
use proptest::prelude::*;

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: i64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

/// Signed Lah numbers: `t^j d^j/dt^j = sum (-1)^(j-k) C(j-1,k-1) j!/k! (-z)^k d^k/dz^k`.
#[test]
fn lattice_triangle_is_signed_lah() {
    let a = infinity_lattice_coeffs(9);
    for j in 0..=9i64 {
        for k in 0..=j {
            let lah = if j == 0 {
                BigInt::from(1)
            } else {
                binomial(j - 1, k - 1) * factorial(j) / factorial(k)
            };
            let signed = if (j - k) % 2 == 0 { lah } else { -lah };
            assert_eq!(BigInt::from(a.get(k as usize, j as usize)), signed, "a[{k}][{j}]");
        }
    }
}

fn operator(seed: u64, m: usize, n: usize) -> FuchsianOperator {
    random_operator(&mut rng_from_seed(seed), m, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn both_routes_to_infinity_agree(seed in 0u64..10_000, m in 2usize..=4, n in 2usize..=4) {
        let op = operator(seed, m, n);
        let one = infinity_connection_matrix(&op).unwrap();
        let two = infinity_companion(&op).unwrap();
        prop_assert_eq!(&one.theta, &two.theta);
        prop_assert!(one.pole_order <= 1);
        let terms = 2 * m * (n + 1);
        let (l1, l2) = (one.laurent(terms), two.laurent(terms));
        prop_assert_eq!(l1.len(), m);
        for (r1, r2) in l1.iter().zip(&l2) {
            for (a, b) in r1.iter().zip(r2) {
                prop_assert_eq!(a, b);
                prop_assert!(a.pole_order() <= 1);
            }
        }
        prop_assert_eq!(infinity_residue(&op).unwrap(), one.residue);
    }

    #[test]
    fn gluing_round_trips(seed in 0u64..10_000, m in 2usize..=4, n in 2usize..=4) {
        let op = operator(seed, m, n);
        let g = gluing(m, &op.psi());
        prop_assert_eq!(g.to_infinity.mul(&g.from_infinity), RatFnMatrix::identity(m));
        // B is holomorphic and invertible at infinity
        for b in &g.correction {
            prop_assert_eq!(b.value_at_infinity(), Some(q(1, 1)));
        }
    }

    #[test]
    fn affine_chart_is_logarithmic(seed in 0u64..10_000, m in 2usize..=4, n in 2usize..=4) {
        let op = operator(seed, m, n);
        let omega = companion_matrix(&op)
            .to_ratfn()
            .scale(&RationalFunction::new(Polynomial::one(), op.psi()));
        // psi * Omega is polynomial: at most simple poles at the punctures
        let lifted = omega.scale(&RationalFunction::from_poly(op.psi()));
        prop_assert!(lifted.entries().all(|f| f.den().degree() == Some(0)));
    }

    #[test]
    fn companion_identity_holds(seed in 0u64..10_000, m in 2usize..=4, n in 2usize..=3) {
        verify_companion_identity(&operator(seed, m, n)).unwrap();
    }
}

#[test]
fn presentation_degree_and_pattern() {
    let op = hypergeometric(&q(1, 3), &q(1, 5), &q(1, 2));
    let p = presentation(&op).unwrap();
    assert_eq!(p.degree, -1);
    assert_eq!(p.gluing.diagonal_exponents, vec![0, 1]);
    assert_eq!(p.infinity.pole_order, 1);
    let roots = p.infinity.residue.charpoly().unwrap().rational_roots().unwrap();
    assert_eq!(roots, vec![q(1, 5), q(1, 3)]);
}
