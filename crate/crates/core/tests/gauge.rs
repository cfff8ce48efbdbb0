use fuchsian_core::connection::gluing;
use fuchsian_core::gauge::{
    are_gauge_equivalent, at_infinity, gauge_pattern, gauge_solve, gauge_solve_with, observed_degrees,
    verify_intertwiner, Ansatz,
};
use fuchsian_core::linear::{monomial_slots, reduced_kernel, slot_matrix, ColumnBuilder};
use fuchsian_core::random::{random_generic_operator, random_punctures, rng_from_seed};
use fuchsian_core::{hypergeometric, q, PolyMatrix, Polynomial};
use proptest::prelude::*;

/// The polynomial matrices of degree at most `d` that stay regular at
/// infinity after transport span exactly the triangular pattern.
#[test]
fn infinity_regular_matrices_are_the_pattern() {
    for (m, n) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let psi = Polynomial::from_roots(&random_punctures(&mut rng_from_seed(m as u64 * 7 + n as u64), n));
        let glue = gluing(m, &psi);
        let d = (m - 1) * (n - 1) + 1;
        let slots = monomial_slots(&vec![vec![Some(d); m]; m]);
        let mut polar = ColumnBuilder::default();
        for s in &slots {
            polar.push_polar_at_infinity(
                &glue
                    .to_infinity
                    .mul(&slot_matrix(m, s).to_ratfn())
                    .mul(&glue.from_infinity),
            );
        }
        let regular = reduced_kernel(&polar.build());
        let pattern = gauge_pattern(m, n);
        let expected: usize = pattern.iter().flatten().map(|b| b.map_or(0, |b| b + 1)).sum();
        assert_eq!(regular.len(), expected, "(m,n) = ({m},{n})");
        // every regular element lies in the pattern
        for v in &regular {
            for (s, c) in slots.iter().zip(v) {
                if !c.is_zero() {
                    assert!(
                        pattern[s.i][s.j].is_some_and(|b| s.deg <= b),
                        "slot {s:?} outside the pattern"
                    );
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn full_ansatz_matches_pattern(seed in 0u64..10_000, mn in prop::sample::select(vec![(2usize, 2usize), (2, 3), (3, 2)])) {
        let (m, n) = mn;
        let op = random_generic_operator(&mut rng_from_seed(seed), m, n).unwrap();
        let d = (m - 1) * (n - 1) + 1;
        let full = gauge_solve_with(&op, &op, Ansatz::Full(d)).unwrap();
        let pattern = gauge_solve(&op, &op).unwrap();
        prop_assert_eq!(&full.space, &pattern.space);
        prop_assert_eq!(pattern.space.len(), 1);
        prop_assert_eq!(&pattern.space[0], &PolyMatrix::identity(m));
        prop_assert!(at_infinity(&pattern.space[0], &op.psi()).entries().all(|f| f.value_at_infinity().is_some()));
    }

    #[test]
    fn witness_intertwines(seed in 0u64..10_000) {
        let op = random_generic_operator(&mut rng_from_seed(seed), 2, 3).unwrap();
        let v = are_gauge_equivalent(&op, &op).unwrap();
        prop_assert!(v.equivalent && v.contradiction.is_none());
        prop_assert!(verify_intertwiner(v.intertwiner.as_ref().unwrap(), &op, &op).unwrap());
    }
}

#[test]
fn non_intertwiner_is_rejected() {
    let a = hypergeometric(&q(1, 3), &q(1, 5), &q(1, 2));
    let b = hypergeometric(&q(1, 3), &q(1, 5), &q(1, 3));
    assert!(!verify_intertwiner(&PolyMatrix::identity(2), &a, &b).unwrap());
    assert!(!verify_intertwiner(&PolyMatrix::zeros(2, 2), &a, &a).unwrap());
}

#[test]
fn observed_degrees_fit_pattern() {
    let op = hypergeometric(&q(2, 7), &q(-1, 3), &q(3, 5));
    let s = gauge_solve_with(&op, &op, Ansatz::Full(2)).unwrap();
    let seen = observed_degrees(&s.space);
    assert_eq!(seen, vec![vec![Some(0), None], vec![None, Some(0)]]);
}
