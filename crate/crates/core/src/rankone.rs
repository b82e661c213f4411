//! Rank-one operator calculus.
//!
//! Every rank-one `T` is unitarily equivalent to `[[a, b], [0, 0]] ⊕ 0` with
//! `a = tr T` and `‖T‖² = |a|² + |b|²`. The pair `(tr T, ‖T‖²)` is therefore a
//! complete unitary invariant, and it is all the classifier looks at. `b`
//! itself is usually irrational, so only `|b|²` is ever stored.

use alloc::format;

use num_traits::{One, Zero};

use crate::arith::{ExactMatrix, GaussianRational, Rational};
use crate::error::{Error, Result};

/// `(tr T, ‖T‖²)` of a rank-one matrix, plus its dimension for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankOneProfile {
    a: GaussianRational,
    s: Rational,
    dim: usize,
}

/// Unitary canonical form `[[a, b], [0, 0]] ⊕ 0`, with `b` kept as `|b|²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub a: GaussianRational,
    pub b_sq: Rational,
}

impl RankOneProfile {
    /// Builds a profile from raw invariants. `s` must be positive and at
    /// least `|a|²`.
    pub fn new(a: GaussianRational, s: Rational, dim: usize) -> Result<Self> {
        if s <= Rational::zero() {
            return Err(Error::Precondition(format!("norm squared {s} must be positive")));
        }
        if s < a.abs_sq() {
            return Err(Error::Precondition(format!(
                "norm squared {s} is below |tr|² = {}",
                a.abs_sq()
            )));
        }
        Ok(Self { a, s, dim })
    }

    /// Trace of the generator.
    pub fn a(&self) -> &GaussianRational {
        &self.a
    }

    /// Squared operator norm of the generator.
    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn b_sq(&self) -> Rational {
        &self.s - self.a.abs_sq()
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        CanonicalForm {
            a: self.a.clone(),
            b_sq: self.b_sq(),
        }
    }

    /// A rank-one matrix is normal exactly when `b = 0`.
    pub fn is_normal(&self) -> bool {
        self.s == self.a.abs_sq()
    }

    pub fn is_partial_isometry(&self) -> bool {
        self.s.is_one()
    }

    /// Power partial isometry test for a rank-one partial isometry: every
    /// power is a partial isometry iff `tr T = 0` or `|tr T| = 1`.
    pub fn is_power_partial_isometry(&self) -> Result<bool> {
        if !self.s.is_one() {
            return Err(Error::Precondition(format!(
                "power partial isometry test needs ‖T‖² = 1, got {}",
                self.s
            )));
        }
        Ok(self.a.is_zero() || self.a.abs_sq().is_one())
    }
}

/// Profile of a rank-one matrix: `a = tr T`, `s = Σ|tᵢⱼ|²`.
pub fn profile(t: &ExactMatrix) -> Result<RankOneProfile> {
    let a = t.trace()?;
    let rank = t.rank();
    if rank != 1 {
        return Err(Error::NotRankOne { rank });
    }
    Ok(RankOneProfile {
        a,
        s: t.frobenius_norm_sq(),
        dim: t.rows(),
    })
}

/// Checks the five power identities of a rank-one `T` at exponent `n`:
///
/// 1. `(T*T)ⁿ = s^(n-1) T*T` and `(T*T)^(2n) = sⁿ (T*T)ⁿ`
/// 2. `(T*T)ⁿ T* = sⁿ T*`
/// 3. `(TT*)ⁿ = s^(n-1) TT*` and `(TT*)^(2n) = sⁿ (TT*)ⁿ`
/// 4. `(TT*)ⁿ T = sⁿ T`
/// 5. `Tⁿ = a^(n-1) T`
pub fn pt3_check(t: &ExactMatrix, n: u32) -> Result<bool> {
    let prof = profile(t)?;
    if n == 0 {
        return Err(Error::Precondition("exponent must be positive".into()));
    }
    let s = GaussianRational::from_real(prof.s.clone());
    let s_pow = |k: u32| s.pow(k as u64);
    let adj = t.adjoint();
    let ata = &adj * t;
    let aat = t * &adj;
    let ata_n = ata.pow(n)?;
    let aat_n = aat.pow(n)?;

    let first = ata_n == ata.scale(&s_pow(n - 1)) && ata.pow(2 * n)? == ata_n.scale(&s_pow(n));
    let second = &ata_n * &adj == adj.scale(&s_pow(n));
    let third = aat_n == aat.scale(&s_pow(n - 1)) && aat.pow(2 * n)? == aat_n.scale(&s_pow(n));
    let fourth = &aat_n * t == t.scale(&s_pow(n));
    let fifth = t.pow(n)? == t.scale(&prof.a.pow((n - 1) as u64));
    Ok(first && second && third && fourth && fifth)
}
