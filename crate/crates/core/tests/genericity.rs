use fuchsian_core::genericity::{check_table, subset_sum_polynomial, GenericityOptions, SumMode};
use fuchsian_core::random::{random_operator, random_punctures, rng_from_seed};
use fuchsian_core::spectral::{accessory_count, exponent_table, operator_from_exponents};
use fuchsian_core::{q, Polynomial, Rational};
use proptest::prelude::*;
use rand::Rng;

/// Exponents with denominators in {2, 3, 4} so that integer sums and
/// resonances are common; the last exponent at infinity fixes the Fuchs
/// relation.
fn coarse_exponents(seed: u64, m: usize, n: usize) -> Vec<Vec<Rational>> {
    let mut rng = rng_from_seed(seed);
    let mut ex: Vec<Vec<Rational>> = (0..=n)
        .map(|_| {
            (0..m)
                .map(|_| q(rng.random_range(-6..=6), rng.random_range(2..=4)))
                .collect()
        })
        .collect();
    let target = Rational::from(((n - 1) * m * (m - 1) / 2) as i64);
    let partial: Rational = ex.iter().flatten().take((n + 1) * m - 1).cloned().sum();
    ex[n][m - 1] = &target - &partial;
    ex
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << m)
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| (0..m).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

/// Brute force: every choice of one `k`-subset per point, `1 <= k < m`.
fn naive_sum_free(ex: &[Vec<Rational>]) -> bool {
    let m = ex[0].len();
    for k in 1..m {
        let per_point: Vec<Vec<Rational>> = ex
            .iter()
            .map(|e| {
                subsets(m, k)
                    .iter()
                    .map(|s| s.iter().map(|&i| e[i].clone()).sum())
                    .collect()
            })
            .collect();
        let mut partial = vec![Rational::zero()];
        for sums in &per_point {
            partial = partial.iter().flat_map(|a| sums.iter().map(move |b| a + b)).collect();
        }
        if partial.iter().any(Rational::is_integer) {
            return false;
        }
    }
    true
}

fn naive_nonresonant(e: &[Rational]) -> bool {
    e.iter()
        .enumerate()
        .all(|(i, a)| e.iter().skip(i + 1).all(|b| !(a - b).is_integer()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_check_matches_enumeration(seed in 0u64..100_000, m in 2usize..=3, n in 2usize..=3) {
        let ex = coarse_exponents(seed, m, n);
        let acc = vec![q(2, 5); accessory_count(m, n)];
        let op = operator_from_exponents(random_punctures(&mut rng_from_seed(seed), n), &ex, &acc).unwrap();
        let report = check_table(&exponent_table(&op).unwrap(), &GenericityOptions::default()).unwrap();
        prop_assert_eq!(report.integer_sum_free, naive_sum_free(&ex));
        for (p, e) in report.nonresonant.iter().zip(&ex) {
            prop_assert_eq!(p.nonresonant, naive_nonresonant(e));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn interval_mode_agrees_on_sum_free_tables(seed in 0u64..100_000, m in 2usize..=3, n in 2usize..=3) {
        let op = random_operator(&mut rng_from_seed(seed), m, n);
        let table = exponent_table(&op).unwrap();
        let exact = check_table(&table, &GenericityOptions::default()).unwrap();
        prop_assume!(exact.integer_sum_free);
        let opts = GenericityOptions { mode: SumMode::ForceInterval, ..Default::default() };
        let interval = check_table(&table, &opts).unwrap();
        prop_assert!(interval.integer_sum_free);
        prop_assert_eq!(interval.regular_semisimple, exact.regular_semisimple);
    }
}

#[test]
fn subset_sum_polynomial_matches_expansion() {
    let roots = [q(1, 2), q(-1, 3), q(2, 1), q(5, 7)];
    let f = Polynomial::from_roots(&roots);
    for k in 1..=4 {
        let sums: Vec<Rational> = subsets(4, k)
            .iter()
            .map(|s| s.iter().map(|&i| roots[i].clone()).sum())
            .collect();
        assert_eq!(subset_sum_polynomial(&f, k), Polynomial::from_roots(&sums), "k = {k}");
    }
}

#[test]
fn integer_sum_witness_is_reported() {
    // 0 + 1/3 + 2/3 = 1, one exponent from each point
    let ex = vec![vec![q(0, 1), q(1, 2)], vec![q(0, 1), q(1, 3)], vec![q(2, 3), q(-1, 2)]];
    let op = operator_from_exponents(vec![q(0, 1), q(1, 1)], &ex, &[]).unwrap();
    let r = check_table(&exponent_table(&op).unwrap(), &GenericityOptions::default()).unwrap();
    assert!(!r.integer_sum_free);
    assert!(r.sum_witnesses.iter().all(|w| w.total.is_integer()));
    assert!(!r.is_generic());
}
