use proptest::prelude::*;
use qschur::periodic::{enumerate_interval, matrix_from_triple, tableau_of_upper, PeriodicMatrix, PeriodicVec, Tableau};

/// Truncated double sum `Σ_{1≤i≤n} Σ_j a_ij Σ_{k≤i, l>j} a_kl` over a window wide enough for the band.
fn d_brute(a: &PeriodicMatrix) -> i64 {
    let r = a.band() + 2;
    let mut total = 0;
    for i in 1..=a.n() as i64 {
        for j in (i - r)..=(i + r) {
            let aij = a.get(i, j);
            if aij == 0 {
                continue;
            }
            for k in (i - 4 * r)..=i {
                for l in (j + 1)..=(k + r) {
                    total += aij * a.get(k, l);
                }
            }
        }
    }
    total
}

fn arb_matrix() -> impl Strategy<Value = PeriodicMatrix> {
    (2usize..=3).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(0i64..3, n),
            prop::collection::vec((1i64..=n as i64, prop_oneof![-3i64..=-1, 1i64..=3], 1i64..3), 0..4),
        )
            .prop_map(|(n, diag, entries)| {
                let abs: Vec<(i64, i64, i64)> = entries.into_iter().map(|(i, t, x)| (i, i + t, x)).collect();
                PeriodicMatrix::from_entries(n, &diag, &abs)
            })
    })
}

fn small_matrix() -> impl Strategy<Value = PeriodicMatrix> {
    (2usize..=3).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(0i64..2, n),
            prop::collection::vec((1i64..=n as i64, prop_oneof![-2i64..=-1, 1i64..=2]), 0..3),
        )
            .prop_map(|(n, diag, entries)| {
                let abs: Vec<(i64, i64, i64)> = entries.into_iter().map(|(i, t)| (i, i + t, 1)).collect();
                PeriodicMatrix::from_entries(n, &diag, &abs)
            })
    })
}

proptest! {
    #[test]
    fn d_stat_matches_brute_force(a in arb_matrix()) {
        prop_assert_eq!(a.d_stat(), d_brute(&a));
    }

    #[test]
    fn d_difference_identity(a in arb_matrix()) {
        let lhs = 2 * a.d_stat() - 2 * a.transpose().d_stat();
        prop_assert_eq!(lhs, a.row_sums().sum_squares() - a.col_sums().sum_squares());
    }

    #[test]
    fn transpose_involution(a in arb_matrix()) {
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(a.transpose().row_sums(), a.col_sums());
    }

    #[test]
    fn aperiodicity_is_stable(a in arb_matrix(), p in 0i64..3) {
        prop_assert_eq!(a.is_aperiodic(), a.transpose().is_aperiodic());
        prop_assert_eq!(a.is_aperiodic(), a.shift_p(p).is_aperiodic());
    }

    #[test]
    fn preceq_reflexive_and_shift_invariant(a in arb_matrix(), b in arb_matrix(), p in 0i64..3) {
        prop_assert!(a.preceq(&a));
        if a.n() == b.n() {
            prop_assert_eq!(a.preceq(&b), a.shift_p(p).preceq(&b.shift_p(p)));
        }
    }

    #[test]
    fn split_sums(a in arb_matrix()) {
        let (up, low) = a.split_pm();
        prop_assert_eq!(up.col_sums(), low.row_sums());
        prop_assert_eq!(up.row_sums(), a.row_sums());
        prop_assert_eq!(low.col_sums(), a.col_sums());
    }

    #[test]
    fn interval_is_a_downward_closed_class(a in small_matrix()) {
        let iv = enumerate_interval(&a);
        prop_assert!(iv.contains(&a));
        for b in &iv {
            prop_assert!(b.preceq(&a));
            prop_assert!(b.is_nonneg());
            prop_assert_eq!(b.row_sums(), a.row_sums());
            prop_assert_eq!(b.col_sums(), a.col_sums());
            for c in enumerate_interval(b) {
                prop_assert!(iv.contains(&c));
            }
            // antisymmetry within the class
            if a.preceq(b) {
                prop_assert_eq!(b, &a);
            }
        }
    }

    #[test]
    fn tableau_round_trip(entries in prop::collection::vec((1i64..=3, 1u64..4, 1u64..3), 0..4)) {
        let mut mu = Tableau::new(3);
        for (t, p, m) in entries {
            mu.set(t, p, m);
        }
        let m = matrix_from_triple(&mu, &Tableau::new(3), &PeriodicVec(vec![5, 5, 5]));
        prop_assert_eq!(tableau_of_upper(&m.split_pm().0), mu);
    }
}

#[test]
fn frozen_d_values() {
    assert_eq!(PeriodicMatrix::from_entries(2, &[0, 1], &[(2, 1, 1)]).d_stat(), 1);
    let a = PeriodicMatrix::from_entries(2, &[0, 1], &[(2, 1, 1)]);
    assert_eq!(d_brute(&a), 1);
}

#[test]
fn interval_examples() {
    // ₐ𝐞_{𝐚'} with 𝐚 = (2,0)
    let e = PeriodicMatrix::e_matrix(&PeriodicVec(vec![2, 0]), 1);
    assert_eq!(enumerate_interval(&e), vec![e]);
    let a_per = PeriodicMatrix::from_entries(2, &[0, 0], &[(1, 2, 1), (2, 3, 1)]);
    let mut expected = vec![a_per.clone(), PeriodicMatrix::diagonal(&PeriodicVec(vec![1, 1]))];
    expected.sort();
    assert_eq!(enumerate_interval(&a_per), expected);
}
