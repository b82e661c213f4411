#![allow(dead_code)]

use proptest::prelude::*;
use si_lab_core::{ExactMatrix, GaussianRational};

pub fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=6, -6i64..=6, 1i64..=6)
        .prop_map(|(rn, rd, im, id)| GaussianRational::from_ratios(rn, rd, im, id))
}

/// Mostly zero entries keep ranks interesting.
pub fn sparse_gaussian() -> impl Strategy<Value = GaussianRational> {
    prop_oneof![
        2 => Just(GaussianRational::from_int(0)),
        3 => gaussian(),
    ]
}

pub fn square(dim: usize) -> impl Strategy<Value = ExactMatrix> {
    proptest::collection::vec(sparse_gaussian(), dim * dim)
        .prop_map(move |e| ExactMatrix::new(dim, dim, e).unwrap())
}

pub fn any_square() -> impl Strategy<Value = ExactMatrix> {
    (1usize..=3).prop_flat_map(square)
}

pub fn nonzero_vector(dim: usize) -> impl Strategy<Value = Vec<GaussianRational>> {
    proptest::collection::vec(gaussian(), dim).prop_filter("nonzero", |v| {
        v.iter().any(|x| *x != GaussianRational::from_int(0))
    })
}

/// `f ⊗ g` for random nonzero `f`, `g` of dimension 2 or 3.
pub fn rank_one() -> impl Strategy<Value = ExactMatrix> {
    (2usize..=3).prop_flat_map(|d| {
        (nonzero_vector(d), nonzero_vector(d))
            .prop_map(|(f, g)| si_lab_core::transforms::rank_one_from_vectors(&f, &g).unwrap())
    })
}

pub fn m(rows: &[&[(i64, i64)]]) -> ExactMatrix {
    ExactMatrix::from_real_ratios(rows).unwrap()
}
