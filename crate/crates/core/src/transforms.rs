//! Matrix constructors: rank-one tensors, exact unitaries, direct sums and
//! the similarity pair showing SI is not a similarity invariant.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{ExactMatrix, GaussianRational};
use crate::error::{Error, Result};

/// A matrix `U` with `U*U = UU* = I`, checked exactly on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactUnitary {
    matrix: ExactMatrix,
}

impl ExactUnitary {
    pub fn new(matrix: ExactMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let id = ExactMatrix::identity(matrix.rows());
        let adj = matrix.adjoint();
        if &adj * &matrix != id || &matrix * &adj != id {
            return Err(Error::Precondition(format!("{matrix} is not unitary")));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn adjoint(&self) -> ExactUnitary {
        ExactUnitary {
            matrix: self.matrix.adjoint(),
        }
    }
}

/// `f ⊗ g`, the matrix `h ↦ (h, g) f` with entries `fᵢ · conj(gⱼ)`.
pub fn rank_one_from_vectors(f: &[GaussianRational], g: &[GaussianRational]) -> Result<ExactMatrix> {
    if f.len() != g.len() {
        return Err(Error::DimensionMismatch {
            lhs_rows: f.len(),
            lhs_cols: 1,
            rhs_rows: g.len(),
            rhs_cols: 1,
        });
    }
    if f.iter().all(Zero::is_zero) || g.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let entries = f
        .iter()
        .flat_map(|fi| g.iter().map(move |gj| fi * &gj.conj()))
        .collect();
    ExactMatrix::new(f.len(), g.len(), entries)
}

const PYTHAGOREAN: [(i64, i64, i64); 5] = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29)];

fn phase(index: u64) -> GaussianRational {
    match index % 4 {
        0 => GaussianRational::one(),
        1 => GaussianRational::i(),
        2 => -GaussianRational::one(),
        _ => -GaussianRational::i(),
    }
}

fn rotation(dim: usize, j: usize, c: GaussianRational, s: GaussianRational) -> ExactMatrix {
    let mut g = ExactMatrix::identity(dim);
    g.set(j, j, c.clone());
    g.set(j + 1, j + 1, c);
    g.set(j, j + 1, s.clone());
    g.set(j + 1, j, -s);
    g
}

/// A deterministic unitary with Gaussian-rational entries.
///
/// Built as a diagonal of phases in `{1, i, -1, -i}` times a chain of planar
/// rotations with Pythagorean cosine/sine pairs; larger dimensions get a
/// second sweep of rotations so every coordinate mixes. Seed 0 in dimension
/// two is the rotation `(1/5)[[3, 4], [-4, 3]]`.
pub fn exact_unitary(dim: usize, seed: u64) -> ExactUnitary {
    assert!(dim >= 1, "unitary dimension must be positive");
    let phases: Vec<GaussianRational> = (0..dim as u64).map(|c| phase(seed * (c + 1) + seed / 4)).collect();
    let mut u = ExactMatrix::diagonal(&phases);
    let sweeps = if dim <= 2 { 1 } else { 2 };
    for sweep in 0..sweeps {
        for j in 0..dim - 1 {
            let idx = seed as usize + 3 * sweep + j;
            let (x, y, h) = PYTHAGOREAN[idx % PYTHAGOREAN.len()];
            let (x, y) = if (seed as usize / PYTHAGOREAN.len() + j) % 2 == 1 { (y, x) } else { (x, y) };
            let g = rotation(
                dim,
                j,
                GaussianRational::from_ratio(x, h),
                GaussianRational::from_ratio(y, h),
            );
            u = &u * &g;
        }
    }
    ExactUnitary::new(u).expect("products of rotations and phases are unitary")
}

/// `U T U*`.
pub fn conjugate(t: &ExactMatrix, u: &ExactUnitary) -> Result<ExactMatrix> {
    u.matrix().mat_mul(t)?.mat_mul(&u.matrix().adjoint())
}

/// Block-diagonal `A ⊕ B`.
pub fn direct_sum(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let (rows, cols) = (a.rows() + b.rows(), a.cols() + b.cols());
    let mut out = ExactMatrix::zeros(rows, cols);
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            out.set(r, c, a.get(r, c).clone());
        }
    }
    for r in 0..b.rows() {
        for c in 0..b.cols() {
            out.set(a.rows() + r, a.cols() + c, b.get(r, c).clone());
        }
    }
    out
}

/// The projection `P`, the non-SI idempotent `A` and the similarity `S` with
/// `A = S P S⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityPair {
    pub p: ExactMatrix,
    pub a: ExactMatrix,
    pub s: ExactMatrix,
    pub s_inv: ExactMatrix,
}

pub fn similarity_counterexample() -> SimilarityPair {
    let m = |rows: &[&[(i64, i64)]]| ExactMatrix::from_real_ratios(rows).expect("constant matrix");
    let pair = SimilarityPair {
        p: m(&[&[(1, 1), (0, 1)], &[(0, 1), (0, 1)]]),
        a: m(&[&[(1, 1), (-1, 1)], &[(0, 1), (0, 1)]]),
        s: m(&[&[(1, 1), (1, 1)], &[(0, 1), (1, 1)]]),
        s_inv: m(&[&[(1, 1), (-1, 1)], &[(0, 1), (1, 1)]]),
    };
    assert_eq!(&pair.s * &pair.s_inv, ExactMatrix::identity(2));
    assert_eq!(&(&pair.s * &pair.p) * &pair.s_inv, pair.a);
    pair
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize, n: usize) -> Vec<GaussianRational> {
        (0..n)
            .map(|k| if k == i { GaussianRational::one() } else { GaussianRational::zero() })
            .collect()
    }

    #[test]
    fn tensors() {
        let e12 = ExactMatrix::from_real_ratios(&[&[(0, 1), (1, 1)], &[(0, 1), (0, 1)]]).unwrap();
        assert_eq!(rank_one_from_vectors(&e(0, 2), &e(1, 2)).unwrap(), e12);
        let p = rank_one_from_vectors(&e(0, 2), &e(0, 2)).unwrap();
        assert_eq!(&p * &p, p);
        let f = [GaussianRational::one(), GaussianRational::i()];
        let g = [GaussianRational::from_ratios(1, 2, 1, 3), GaussianRational::from_int(2)];
        let t = rank_one_from_vectors(&f, &g).unwrap();
        let inner = &(&f[0] * &g[0].conj()) + &(&f[1] * &g[1].conj());
        assert_eq!(t.trace().unwrap(), inner);
        assert_eq!(t.rank(), 1);
        assert_eq!(
            rank_one_from_vectors(&e(0, 2), &[GaussianRational::zero(), GaussianRational::zero()]),
            Err(Error::ZeroVector)
        );
        assert!(rank_one_from_vectors(&e(0, 2), &e(0, 3)).is_err());
    }

    #[test]
    fn unitaries() {
        for seed in 0..4 {
            let u = exact_unitary(1, seed);
            let z = u.matrix().get(0, 0);
            assert!(z.abs_sq().is_one() && (z.is_real() || z.re().is_zero()));
        }
        let u = exact_unitary(2, 0);
        assert_eq!(
            u.matrix(),
            &ExactMatrix::from_real_ratios(&[&[(3, 5), (4, 5)], &[(-4, 5), (3, 5)]]).unwrap()
        );
        for dim in 1..=4 {
            for seed in 0..8 {
                let u = exact_unitary(dim, seed);
                assert!(u.matrix().predicates().unwrap().normal);
                assert!(ExactUnitary::new(u.matrix().clone()).is_ok());
            }
        }
        assert!(ExactUnitary::new(ExactMatrix::from_real_ratios(&[&[(1, 1), (1, 1)], &[(0, 1), (1, 1)]]).unwrap()).is_err());
    }

    #[test]
    fn unitaries_differ_across_seeds() {
        let mut seen: Vec<ExactMatrix> = Vec::new();
        for seed in 0..5 {
            let u = exact_unitary(3, seed).matrix().clone();
            assert!(!seen.contains(&u));
            seen.push(u);
        }
    }

    #[test]
    fn conjugation_invariants() {
        let t = ExactMatrix::from_rows(alloc::vec![
            alloc::vec![GaussianRational::from_ratio(4, 5), GaussianRational::from_ratios(3, 5, 3, 4)],
            alloc::vec![GaussianRational::zero(), GaussianRational::zero()],
        ])
        .unwrap();
        let id = ExactUnitary::new(ExactMatrix::identity(2)).unwrap();
        assert_eq!(conjugate(&t, &id).unwrap(), t);
        for seed in 0..5 {
            let c = conjugate(&t, &exact_unitary(2, seed)).unwrap();
            assert_eq!(c.trace().unwrap(), t.trace().unwrap());
            assert_eq!(c.frobenius_norm_sq(), t.frobenius_norm_sq());
        }
        assert!(conjugate(&t, &exact_unitary(3, 0)).is_err());
    }

    #[test]
    fn direct_sums() {
        let one = ExactMatrix::identity(1);
        let j2 = ExactMatrix::from_real_ratios(&[&[(0, 1), (1, 1)], &[(0, 1), (0, 1)]]).unwrap();
        let ens = ExactMatrix::from_real_ratios(&[
            &[(1, 1), (0, 1), (0, 1)],
            &[(0, 1), (0, 1), (1, 1)],
            &[(0, 1), (0, 1), (0, 1)],
        ])
        .unwrap();
        assert_eq!(direct_sum(&one, &j2), ens);
        let z = ExactMatrix::zeros(1, 1);
        assert!(direct_sum(&z, &z).is_zero());
        assert_eq!(
            direct_sum(&ExactMatrix::diagonal(&[GaussianRational::i()]), &one),
            ExactMatrix::diagonal(&[GaussianRational::i(), GaussianRational::one()])
        );
        assert_eq!(direct_sum(&ens, &j2).adjoint(), direct_sum(&ens.adjoint(), &j2.adjoint()));
    }

    #[test]
    fn similarity_pair() {
        let pair = similarity_counterexample();
        assert_eq!(&(&pair.s * &pair.p) * &pair.s_inv, pair.a);
        assert_eq!(&pair.a * &pair.a, pair.a);
    }
}
