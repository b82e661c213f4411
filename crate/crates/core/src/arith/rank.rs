//! Exact rank by fraction-free (Bareiss) elimination over the Gaussian
//! integers. Each row is first cleared of denominators, which does not change
//! the rank; every later division is exact in `Z[i]`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ExactMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    fn sub(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }

    /// Division known to be exact.
    fn div_exact(&self, rhs: &GaussInt) -> GaussInt {
        let norm = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        let num = self.mul(&GaussInt {
            re: rhs.re.clone(),
            im: -rhs.im.clone(),
        });
        debug_assert!(num.re.is_multiple_of(&norm) && num.im.is_multiple_of(&norm));
        GaussInt {
            re: num.re / &norm,
            im: num.im / norm,
        }
    }
}

fn integral_rows(m: &ExactMatrix) -> Vec<Vec<GaussInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let lcm = row.iter().fold(BigInt::one(), |acc, e| {
                acc.lcm(e.re().denom()).lcm(e.im().denom())
            });
            row.iter()
                .map(|e| GaussInt {
                    re: e.re().numer() * (&lcm / e.re().denom()),
                    im: e.im().numer() * (&lcm / e.im().denom()),
                })
                .collect()
        })
        .collect()
}

pub(crate) fn rank(m: &ExactMatrix) -> usize {
    let mut a = integral_rows(m);
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = GaussInt {
        re: BigInt::one(),
        im: BigInt::zero(),
    };
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let t = a[rank][col].mul(&a[i][j]).sub(&a[i][col].mul(&a[rank][j]));
                a[i][j] = t.div_exact(&prev);
            }
            a[i][col] = GaussInt {
                re: BigInt::zero(),
                im: BigInt::zero(),
            };
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}
