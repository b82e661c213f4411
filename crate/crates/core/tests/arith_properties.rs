mod common;

use common::{any_square, gaussian, square};
use num_traits::Zero;
use proptest::prelude::*;
use si_lab_core::{ExactMatrix, GaussianRational};

/// Rank by plain Gaussian elimination with field division.
fn naive_rank(m: &ExactMatrix) -> usize {
    let mut rows: Vec<Vec<GaussianRational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].checked_div(&pivot_row[col]).unwrap();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn adjoint_reverses_products(a in square(3), b in square(3)) {
        prop_assert_eq!((&a * &b).adjoint(), &b.adjoint() * &a.adjoint());
    }

    #[test]
    fn adjoint_is_an_involution(a in any_square()) {
        prop_assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn rank_matches_plain_elimination(a in any_square()) {
        prop_assert_eq!(a.rank(), naive_rank(&a));
        prop_assert_eq!(a.rank(), a.adjoint().rank());
    }

    #[test]
    fn rank_of_product_is_bounded(a in square(3), b in square(3)) {
        let ab = &a * &b;
        prop_assert!(ab.rank() <= a.rank().min(b.rank()));
    }

    #[test]
    fn canonical_key_is_injective(a in any_square(), b in any_square()) {
        prop_assert_eq!(a.canonical_key() == b.canonical_key(), a == b);
    }

    #[test]
    fn trace_is_cyclic(a in square(3), b in square(3)) {
        prop_assert_eq!((&a * &b).trace().unwrap(), (&b * &a).trace().unwrap());
    }

    #[test]
    fn frobenius_is_trace_of_gram(a in any_square()) {
        let gram = (&a.adjoint() * &a).trace().unwrap();
        prop_assert_eq!(gram, GaussianRational::from_real(a.frobenius_norm_sq()));
    }

    #[test]
    fn predicates_survive_adjoint(a in any_square()) {
        let p = a.predicates().unwrap();
        let q = a.adjoint().predicates().unwrap();
        prop_assert_eq!(p.selfadjoint, q.selfadjoint);
        prop_assert_eq!(p.normal, q.normal);
        prop_assert_eq!(p.partial_isometry, q.partial_isometry);
    }

    #[test]
    fn entry_display_round_trips(z in gaussian()) {
        prop_assert_eq!(z.to_string().parse::<GaussianRational>().unwrap(), z);
    }
}

#[test]
fn power_partial_isometry_examples() {
    let ens = common::m(&[&[(1, 1), (0, 1), (0, 1)], &[(0, 1), (0, 1), (1, 1)], &[(0, 1), (0, 1), (0, 1)]]);
    assert!(ens.is_power_partial_isometry().unwrap().holds());
    let rns = common::m(&[&[(3, 5), (4, 5)], &[(0, 1), (0, 1)]]);
    assert!(rns.predicates().unwrap().partial_isometry);
    assert!(!rns.is_power_partial_isometry().unwrap().holds());
}
