mod common;

use common::*;
use dsq_core::evidence::{
    combine_dempster, combine_sequential, combine_with_conflict, conflict, weighted_average, Bpa,
    EvidenceError,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn combination_is_a_valid_bpa((m1, m2) in arb_pair()) {
        match combine_dempster(&m1, &m2) {
            Ok(m) => {
                prop_assert!((m.total_mass() - 1.0).abs() <= 1e-9);
                prop_assert!(m.focal_elements().all(|(s, v)| !s.is_empty() && v > 0.0));
            }
            Err(e) => prop_assert!(matches!(e, EvidenceError::TotalConflict { .. }), "{e}"),
        }
    }

    #[test]
    fn combination_commutes((m1, m2) in arb_pair()) {
        let ab = combine_dempster(&m1, &m2);
        let ba = combine_dempster(&m2, &m1);
        match (ab, ba) {
            (Ok(ab), Ok(ba)) => prop_assert!(ab.max_abs_diff(&ba) <= 1e-12),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "only one order failed"),
        }
    }

    #[test]
    fn matches_exhaustive_oracle((m1, m2) in arb_pair()) {
        let n = m1.frame().len();
        let oracle = dense_dempster(n, &to_dense(&m1), &to_dense(&m2));
        match (combine_with_conflict(&m1, &m2), oracle) {
            (Ok((m, k)), Some((dense, dense_k))) => {
                prop_assert!((k - dense_k).abs() <= 1e-12);
                let got = to_dense(&m);
                for (a, b) in got.iter().zip(&dense) {
                    prop_assert!((a - b).abs() <= 1e-12);
                }
            }
            (Err(_), None) => {}
            (got, want) => prop_assert!(false, "{got:?} vs {want:?}"),
        }
    }

    #[test]
    fn conflict_symmetric_and_bounded((m1, m2) in arb_pair()) {
        let k12 = conflict(&m1, &m2).unwrap();
        let k21 = conflict(&m2, &m1).unwrap();
        prop_assert!((k12 - k21).abs() <= 1e-15);
        prop_assert!((-1e-15..=1.0 + 1e-12).contains(&k12));
    }

    #[test]
    fn vacuous_is_neutral(m in (1usize..=4).prop_flat_map(|n| arb_bpa(n, 4))) {
        let v = Bpa::vacuous(m.frame().clone());
        prop_assert!(combine_dempster(&m, &v).unwrap().max_abs_diff(&m) <= 1e-15);
    }

    #[test]
    fn fold_order_is_irrelevant((a, b, c) in arb_triple()) {
        let left = combine_sequential(&[a.clone(), b.clone(), c.clone()]);
        let right = combine_dempster(&b, &c).and_then(|bc| combine_dempster(&a, &bc));
        let shuffled = combine_sequential(&[c, a, b]);
        if let (Ok(l), Ok(r), Ok(s)) = (left, right, shuffled) {
            prop_assert!(l.max_abs_diff(&r) <= 1e-9);
            prop_assert!(l.max_abs_diff(&s) <= 1e-9);
        }
    }

    #[test]
    fn weighted_average_stays_on_simplex(
        (boes, raw) in (1usize..=4).prop_flat_map(|n| {
            (1usize..=5).prop_flat_map(move |k| {
                (prop::collection::vec(arb_bpa(n, 4), k), prop::collection::vec(0.0f64..1.0, k))
            })
        })
    ) {
        let total: f64 = raw.iter().sum();
        prop_assume!(total > 1e-6);
        let w: Vec<f64> = raw.iter().map(|x| x / total).collect();
        let avg = weighted_average(&boes, &w).unwrap();
        prop_assert!((avg.total_mass() - 1.0).abs() <= 1e-9);
        prop_assert!(avg.focal_elements().all(|(s, v)| !s.is_empty() && v > 0.0 && v <= 1.0 + 1e-12));
    }
}
