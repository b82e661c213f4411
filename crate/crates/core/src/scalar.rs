//! Decision procedure for the trace-norm equation
//!
//! ```text
//! aᵐ · āⁿ · sˡ = 1,   m, n ≥ 0,  m + n ≥ 1,  l ≥ 1
//! ```
//!
//! for a nonzero Gaussian rational `a` (the trace) and a positive rational `s`
//! (the squared norm).
//!
//! Writing `p = m + n` and `d = |m - n|`, the equation splits into a modulus
//! part `|a|^(2p) · s^(2l) = 1` and an argument part "`a^d` is a positive
//! real". The modulus part is a multiplicative dependence between two
//! positive rationals and is solved through primitive roots; the argument
//! part only depends on `a / ā`, which is a root of unity exactly when it is
//! one of `±1, ±i`. Every witness is re-checked by direct evaluation before
//! it is returned.

use alloc::format;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{GaussianRational, Rational};
use crate::error::{Error, Result};

/// Solutions `(p, l)`, `p, l ≥ 1`, of `r^p · s^(2l) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModulusSolution {
    /// No solution.
    None,
    /// `r = s = 1`: every pair is a solution.
    All,
    /// The solutions are exactly `(k·p0, k·l0)` for `k ≥ 1`.
    Minimal { p0: u64, l0: u64 },
}

/// The set `D = { d ≥ 0 : a^d is a positive real }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PositivityProgression {
    /// `D = {0}`.
    ZeroOnly,
    /// `D = {0, δ, 2δ, ...}`.
    Arithmetic(u64),
}

impl PositivityProgression {
    pub fn contains(self, d: u64) -> bool {
        match self {
            PositivityProgression::ZeroOnly => d == 0,
            PositivityProgression::Arithmetic(delta) => d.is_multiple_of(delta),
        }
    }
}

/// Exponents `(m, n, l)` with `aᵐ · āⁿ · sˡ = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TraceNormWitness {
    pub m: u64,
    pub n: u64,
    pub l: u64,
}

/// The two stages of [`decide_trace_norm`] together with its answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceNormAnalysis {
    pub modulus: ModulusSolution,
    pub progression: PositivityProgression,
    pub witness: Option<TraceNormWitness>,
}

/// Largest `k` with `q = g^k` for a rational `g`, returned as `(g, k)`.
///
/// `q` must be positive and different from one; the returned `g` is then not
/// itself a perfect power.
fn primitive_root(q: &Rational) -> (Rational, u32) {
    debug_assert!(q.is_positive() && !q.is_one());
    let num = q.numer().magnitude();
    let den = q.denom().magnitude();
    let max_k = num.bits().max(den.bits()) as u32;
    let mut best = (q.clone(), 1);
    for k in 2..=max_k {
        let rn = num.nth_root(k);
        let rd = den.nth_root(k);
        if rn.pow(k) == *num && rd.pow(k) == *den {
            best = (
                Rational::new(BigInt::from(rn), BigInt::from(rd)),
                k,
            );
        }
    }
    best
}

/// Solves `r^p · s^(2l) = 1` over positive integers `p, l`.
pub fn minimal_modulus_solution(r: &Rational, s: &Rational) -> Result<ModulusSolution> {
    if !r.is_positive() || !s.is_positive() {
        return Err(Error::Precondition(format!(
            "modulus equation needs r, s > 0 (got r = {r}, s = {s})"
        )));
    }
    Ok(match (r.is_one(), s.is_one()) {
        (true, true) => ModulusSolution::All,
        (true, false) | (false, true) => ModulusSolution::None,
        (false, false) => {
            // r^p = u^l with u = s^-2.
            let u = (s * s).recip();
            let (gr, kr) = primitive_root(r);
            let (gu, ku) = primitive_root(&u);
            if gr != gu {
                ModulusSolution::None
            } else {
                let g = kr.gcd(&ku);
                ModulusSolution::Minimal {
                    p0: u64::from(ku / g),
                    l0: u64::from(kr / g),
                }
            }
        }
    })
}

/// Describes which powers of `a` are positive reals.
pub fn positivity_progression(a: &GaussianRational) -> Result<PositivityProgression> {
    if a.is_zero() {
        return Err(Error::Precondition("trace must be nonzero".into()));
    }
    let w = a.checked_div(&a.conj())?;
    let order = if w.is_one() {
        1
    } else if w == -GaussianRational::one() {
        2
    } else if w == GaussianRational::i() || w == -GaussianRational::i() {
        4
    } else {
        return Ok(PositivityProgression::ZeroOnly);
    };
    // w^t = 1 makes a^t real.
    let at = a.pow(order);
    debug_assert!(at.is_real() && !at.is_zero());
    Ok(if at.is_positive_real() {
        PositivityProgression::Arithmetic(order)
    } else {
        PositivityProgression::Arithmetic(2 * order)
    })
}

/// Exact evaluation of `aᵐ · āⁿ · sˡ = 1` with `m + n ≥ 1`, `l ≥ 1`.
pub fn verify_witness(a: &GaussianRational, s: &Rational, w: &TraceNormWitness) -> bool {
    if w.m + w.n == 0 || w.l == 0 {
        return false;
    }
    let value = &(&a.pow(w.m) * &a.conj().pow(w.n))
        * &GaussianRational::from_real(s.clone()).pow(w.l);
    value.is_one()
}

/// The polar restatement of a witness: for `m ≠ n`, `a^|m-n|` is a positive
/// real and `|a|^(2(m+n)) · s^(2l) = 1`; for `m = n`, `|a|^(2m) · s^l = 1`.
pub fn witness_matches_polar_form(a: &GaussianRational, s: &Rational, w: &TraceNormWitness) -> bool {
    let r = a.abs_sq();
    let rpow = |e: u64| num_traits::pow(r.clone(), e as usize);
    let spow = |e: u64| num_traits::pow(s.clone(), e as usize);
    if w.m == w.n {
        (rpow(w.m) * spow(w.l)).is_one()
    } else {
        a.pow(w.m.abs_diff(w.n)).is_positive_real() && (rpow(w.m + w.n) * spow(2 * w.l)).is_one()
    }
}

/// Smallest `d ∈ D` with `d ≤ p` and `d ≡ p (mod 2)`.
fn smallest_compatible_shift(progression: PositivityProgression, p: u64) -> Option<u64> {
    if p.is_multiple_of(2) {
        return Some(0);
    }
    match progression {
        PositivityProgression::Arithmetic(delta) if delta % 2 == 1 && delta <= p => Some(delta),
        _ => None,
    }
}

/// Runs both stages and returns the lexicographically smallest witness in
/// `(l, m + n, |m - n|)`, preferring `m ≥ n` on ties.
pub fn analyze_trace_norm(a: &GaussianRational, s: &Rational) -> Result<TraceNormAnalysis> {
    let progression = positivity_progression(a)?;
    let modulus = minimal_modulus_solution(&a.abs_sq(), s)?;
    let candidates: [(u64, u64); 2] = match modulus {
        ModulusSolution::None => {
            return Ok(TraceNormAnalysis {
                modulus,
                progression,
                witness: None,
            })
        }
        // l = 1 and the smallest usable p.
        ModulusSolution::All => [(1, 1), (2, 1)],
        // k = 2 always admits d = 0 because p becomes even, so larger k
        // never needs to be searched.
        ModulusSolution::Minimal { p0, l0 } => [(p0, l0), (2 * p0, 2 * l0)],
    };
    let witness = candidates.iter().find_map(|&(p, l)| {
        smallest_compatible_shift(progression, p).map(|d| TraceNormWitness {
            m: (p + d) / 2,
            n: (p - d) / 2,
            l,
        })
    });
    if let Some(w) = &witness {
        if !verify_witness(a, s, w) {
            return Err(Error::Precondition(format!(
                "internal: candidate witness {w:?} failed exact verification"
            )));
        }
        debug_assert!(witness_matches_polar_form(a, s, w));
    }
    Ok(TraceNormAnalysis {
        modulus,
        progression,
        witness,
    })
}

/// Finds exponents with `aᵐ · āⁿ · sˡ = 1`, or `None` if there are none.
///
/// `a = 0` or `s ≤ 0` never admit a witness.
pub fn decide_trace_norm(a: &GaussianRational, s: &Rational) -> Option<TraceNormWitness> {
    if a.is_zero() || !s.is_positive() {
        return None;
    }
    analyze_trace_norm(a, s).ok().and_then(|r| r.witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn w(m: u64, n: u64, l: u64) -> TraceNormWitness {
        TraceNormWitness { m, n, l }
    }

    #[test]
    fn modulus_examples() {
        assert_eq!(
            minimal_modulus_solution(&ratio(16, 25), &ratio(25, 16)).unwrap(),
            ModulusSolution::Minimal { p0: 2, l0: 1 }
        );
        assert_eq!(
            minimal_modulus_solution(&ratio(1, 1), &ratio(1, 1)).unwrap(),
            ModulusSolution::All
        );
        assert_eq!(
            minimal_modulus_solution(&ratio(25, 169), &ratio(1, 1)).unwrap(),
            ModulusSolution::None
        );
        // 8^p · (1/4)^(2l) = 1  ⇔  3p = 4l.
        assert_eq!(
            minimal_modulus_solution(&ratio(8, 1), &ratio(1, 4)).unwrap(),
            ModulusSolution::Minimal { p0: 4, l0: 3 }
        );
        // Same base on the same side of one: never cancels.
        assert_eq!(
            minimal_modulus_solution(&ratio(4, 1), &ratio(2, 1)).unwrap(),
            ModulusSolution::None
        );
        assert!(minimal_modulus_solution(&ratio(0, 1), &ratio(1, 1)).is_err());
    }

    #[test]
    fn progression_examples() {
        assert_eq!(
            positivity_progression(&GaussianRational::from_ratio(4, 5)).unwrap(),
            PositivityProgression::Arithmetic(1)
        );
        assert_eq!(
            positivity_progression(&GaussianRational::from_ratios(0, 1, 1, 2)).unwrap(),
            PositivityProgression::Arithmetic(4)
        );
        assert_eq!(
            positivity_progression(&GaussianRational::from_ratios(3, 5, 4, 5)).unwrap(),
            PositivityProgression::ZeroOnly
        );
        assert_eq!(
            positivity_progression(&GaussianRational::from_int(-3)).unwrap(),
            PositivityProgression::Arithmetic(2)
        );
        // (1+i)^8 = 16: w = i has order 4 and (1+i)^4 = -4 < 0.
        assert_eq!(
            positivity_progression(&GaussianRational::from_ratios(1, 1, 1, 1)).unwrap(),
            PositivityProgression::Arithmetic(8)
        );
        assert!(positivity_progression(&GaussianRational::zero()).is_err());
    }

    #[test]
    fn decide_examples() {
        let four_fifths = GaussianRational::from_ratio(4, 5);
        assert_eq!(decide_trace_norm(&four_fifths, &ratio(25, 16)), Some(w(1, 1, 1)));
        assert_eq!(
            decide_trace_norm(&GaussianRational::from_ratios(3, 13, 4, 13), &ratio(1, 1)),
            None
        );
        assert_eq!(decide_trace_norm(&GaussianRational::one(), &ratio(1, 1)), Some(w(1, 0, 1)));
        assert_eq!(
            decide_trace_norm(&GaussianRational::from_ratios(0, 1, 1, 2), &ratio(4, 1)),
            Some(w(1, 1, 1))
        );
        assert_eq!(decide_trace_norm(&GaussianRational::zero(), &ratio(1, 1)), None);
    }

    #[test]
    fn odd_exponent_witness_needs_real_trace() {
        // a = 2/5, s = 5/2: a·s = 1.
        let a = GaussianRational::from_ratio(2, 5);
        assert_eq!(decide_trace_norm(&a, &ratio(5, 2)), Some(w(1, 0, 1)));
        // a = i/2, s = 2: p = l is forced; odd p needs odd d, which i/2 lacks.
        let a = GaussianRational::from_ratios(0, 1, 1, 2);
        assert_eq!(decide_trace_norm(&a, &ratio(2, 1)), Some(w(1, 1, 2)));
        // a = -1/2, s = 2: a² has to appear, a itself is negative.
        let a = GaussianRational::from_ratio(-1, 2);
        assert_eq!(decide_trace_norm(&a, &ratio(2, 1)), Some(w(1, 1, 2)));
    }

    #[test]
    fn verify_examples() {
        let a = GaussianRational::from_ratio(4, 5);
        assert!(verify_witness(&a, &ratio(25, 16), &w(1, 1, 1)));
        assert!(verify_witness(&a, &ratio(25, 16), &w(2, 0, 1)));
        assert!(!verify_witness(&GaussianRational::from_ratio(3, 5), &ratio(1, 1), &w(1, 1, 1)));
        assert!(!verify_witness(&GaussianRational::one(), &ratio(1, 1), &w(0, 0, 1)));
        assert!(!verify_witness(&GaussianRational::one(), &ratio(1, 1), &w(1, 0, 0)));
    }

    #[test]
    fn polar_form_agrees_on_examples() {
        let a = GaussianRational::from_ratio(4, 5);
        assert!(witness_matches_polar_form(&a, &ratio(25, 16), &w(1, 1, 1)));
        assert!(witness_matches_polar_form(&a, &ratio(25, 16), &w(2, 0, 1)));
        let a = GaussianRational::from_ratios(0, 1, 1, 2);
        assert!(!witness_matches_polar_form(&a, &ratio(4, 1), &w(2, 0, 1)));
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(&ratio(64, 729)), (ratio(2, 3), 6));
        assert_eq!(primitive_root(&ratio(8, 1)), (ratio(2, 1), 3));
        assert_eq!(primitive_root(&ratio(12, 1)), (ratio(12, 1), 1));
        assert_eq!(primitive_root(&ratio(1, 16)), (ratio(1, 2), 4));
    }
}
