use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_bigint::Sign;
use num_traits::{One, Zero};

use super::{GaussianRational, Rational};
use crate::error::{Error, Result};

/// Dense matrix over the Gaussian rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

/// Structural flags computed by exact matrix identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Predicates {
    /// `A = A*`
    pub selfadjoint: bool,
    /// `A*A = AA*`
    pub normal: bool,
    /// `A = AA*A`
    pub partial_isometry: bool,
    /// `A² = A`
    pub idempotent: bool,
}

/// Outcome of checking that every power `Aⁿ` is a partial isometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerPartialIsometry {
    /// `Aⁿ ≠ Aⁿ(A*)ⁿAⁿ` for this `n`.
    FailsAt(u32),
    /// Every power up to and including `bound` passed. No finite certificate
    /// bound is known, so callers treat this as a (recorded) positive answer.
    VerifiedUpTo(u32),
}

impl PowerPartialIsometry {
    pub fn holds(self) -> bool {
        matches!(self, PowerPartialIsometry::VerifiedUpTo(_))
    }
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidShape(format!("{rows}x{cols} has no entries")));
        }
        if entries.len() != rows * cols {
            return Err(Error::InvalidShape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != n_cols) {
            return Err(Error::InvalidShape(format!(
                "row {bad} has {} entries, expected {n_cols}",
                rows[bad].len()
            )));
        }
        Self::new(n_rows, n_cols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from `(numerator, denominator)` real entries.
    pub fn from_real_ratios(rows: &[&[(i64, i64)]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&(n, d)| GaussianRational::from_ratio(n, d))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            entries: alloc::vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = GaussianRational::one();
        }
        m
    }

    pub fn diagonal(diag: &[GaussianRational]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: GaussianRational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[GaussianRational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Exact product `self · rhs`.
    pub fn mat_mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        let mut out = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            let lhs_row = self.row(i);
            for j in 0..rhs.cols {
                let mut acc = GaussianRational::zero();
                for (k, a) in lhs_row.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                out.push(acc);
            }
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries: out,
        })
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ExactMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).conj());
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn scale(&self, k: &GaussianRational) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    pub fn add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn pow(&self, n: u32) -> Result<ExactMatrix> {
        let dim = self.require_square()?;
        let mut acc = ExactMatrix::identity(dim);
        for _ in 0..n {
            acc = &acc * self;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<GaussianRational> {
        let n = self.require_square()?;
        let mut acc = GaussianRational::zero();
        for i in 0..n {
            acc += self.get(i, i);
        }
        Ok(acc)
    }

    /// `Σ |entry|²`. For a rank-one matrix this is the squared operator norm.
    pub fn frobenius_norm_sq(&self) -> Rational {
        self.entries
            .iter()
            .fold(Rational::zero(), |acc, e| acc + e.abs_sq())
    }

    pub fn rank(&self) -> usize {
        super::rank::rank(self)
    }

    pub fn predicates(&self) -> Result<Predicates> {
        self.require_square()?;
        let adj = self.adjoint();
        let selfadjoint = *self == adj;
        let a_adj_a = &(self * &adj) * self;
        let normal = selfadjoint || &adj * self == self * &adj;
        Ok(Predicates {
            selfadjoint,
            normal,
            partial_isometry: *self == a_adj_a,
            idempotent: self * self == *self,
        })
    }

    /// Checks `Aⁿ = Aⁿ(A*)ⁿAⁿ` for `n = 1..=n_max`.
    pub fn power_partial_isometry(&self, n_max: u32) -> Result<PowerPartialIsometry> {
        self.require_square()?;
        let mut power = self.clone();
        for n in 1..=n_max {
            if n > 1 {
                power = &power * self;
            }
            let check = &(&power * &power.adjoint()) * &power;
            if check != power {
                return Ok(PowerPartialIsometry::FailsAt(n));
            }
        }
        Ok(PowerPartialIsometry::VerifiedUpTo(n_max))
    }

    /// [`Self::power_partial_isometry`] with the default bound `2·dim`.
    pub fn is_power_partial_isometry(&self) -> Result<PowerPartialIsometry> {
        let bound = 2 * self.require_square()?;
        self.power_partial_isometry(bound as u32)
    }

    /// Injective byte serialization: equal matrices have equal keys and
    /// distinct matrices have distinct keys.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut key = Vec::with_capacity(8 + self.entries.len() * 16);
        key.extend_from_slice(&(self.rows as u32).to_le_bytes());
        key.extend_from_slice(&(self.cols as u32).to_le_bytes());
        for e in &self.entries {
            for part in [e.re(), e.im()] {
                push_int(&mut key, part.numer());
                push_int(&mut key, part.denom());
            }
        }
        key
    }
}

fn push_int(key: &mut Vec<u8>, n: &num_bigint::BigInt) {
    let (sign, bytes) = n.to_bytes_le();
    key.push(match sign {
        Sign::Minus => 0,
        Sign::NoSign => 1,
        Sign::Plus => 2,
    });
    key.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
    key.extend_from_slice(&bytes);
}

/// Panics on a dimension mismatch; use [`ExactMatrix::mat_mul`] for a
/// fallible product.
impl<'a> Mul<&'a ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;

    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        match self.mat_mul(rhs) {
            Ok(m) => m,
            Err(e) => panic!("{e}"),
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("; ")?;
            }
            for (c, e) in self.row(r).iter().enumerate() {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
        }
        f.write_str("]")
    }
}
