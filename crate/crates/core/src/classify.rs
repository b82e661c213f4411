//! Decision tree over exact invariants of a single generator `T`.
//!
//! Every verdict carries the list of results it rests on (`basis`) and, when
//! one exists, a witness that can be checked independently: either trace-norm
//! exponents or a word pair `X, Y` with `X T Y = T*`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{ExactMatrix, GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::rankone;
use crate::scalar::{self, TraceNormWitness};
use crate::word::{evaluate_word, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl Tri {
    pub fn from_bool(b: bool) -> Tri {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }

    pub fn is_known(self) -> bool {
        self != Tri::Unknown
    }
}

impl fmt::Display for Tri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    TraceNorm(TraceNormWitness),
    /// `left · T · right = T*`.
    Words { left: Word, right: Word },
}

/// Exact invariants of the generator. `norm_sq` is the squared Frobenius
/// norm, which equals the squared operator norm when the rank is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub dim: usize,
    pub rank: usize,
    pub trace: GaussianRational,
    pub norm_sq: Rational,
    pub selfadjoint: bool,
    pub normal: bool,
    pub partial_isometry: bool,
    pub power_partial_isometry: bool,
}

impl Invariants {
    pub fn of(t: &ExactMatrix) -> Result<Invariants> {
        let trace = t.trace()?;
        let pred = t.predicates()?;
        Ok(Invariants {
            dim: t.rows(),
            rank: t.rank(),
            trace,
            norm_sq: t.frobenius_norm_sq(),
            selfadjoint: pred.selfadjoint,
            normal: pred.normal,
            partial_isometry: pred.partial_isometry,
            power_partial_isometry: t.is_power_partial_isometry()?.holds(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub si: Tri,
    pub simple: Tri,
    pub basis: Vec<&'static str>,
    pub witness: Option<Witness>,
    pub invariants: Invariants,
}

/// Evidence that `S(T, T*)` is not SI because every element is a strict
/// contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormRejection {
    /// Squared Frobenius norm of `T`, an upper bound for `‖T‖²`.
    pub norm_sq_bound: Rational,
}

/// `T* ∈ (T)` would need `T* = X T Y` with `X` or `Y` nonempty (`T ≠ T*`),
/// and then `‖T*‖ ≤ ‖X‖ ‖T‖ ‖Y‖ < ‖T‖` whenever every letter has norm below
/// one. The Frobenius norm bounds the operator norm, so `Σ|tᵢⱼ|² < 1` is
/// enough.
pub fn quick_reject(t: &ExactMatrix) -> Result<Option<NormRejection>> {
    if t.predicates()?.selfadjoint {
        return Ok(None);
    }
    let bound = t.frobenius_norm_sq();
    Ok((bound < Rational::one()).then_some(NormRejection { norm_sq_bound: bound }))
}

fn is_idempotent(m: &ExactMatrix) -> bool {
    &(m * m) == m
}

/// `T* = T* T T*`, which holds for every partial isometry.
fn partial_isometry_certificate(t: &ExactMatrix) -> Option<Witness> {
    let (left, right): (Word, Word) = ("t".parse().ok()?, "t".parse().ok()?);
    let w: Word = "tTt".parse().ok()?;
    (evaluate_word(&w, t) == t.adjoint()).then_some(Witness::Words { left, right })
}

pub fn classify(t: &ExactMatrix) -> Result<Verdict> {
    if !t.is_square() {
        return Err(Error::NotSquare {
            rows: t.rows(),
            cols: t.cols(),
        });
    }
    let inv = Invariants::of(t)?;
    let mut v = decide(t, &inv)?;
    if v.si == Tri::No {
        v.simple = Tri::No;
    }
    if v.witness.is_none() && v.si == Tri::Yes && inv.partial_isometry && !inv.selfadjoint {
        v.witness = partial_isometry_certificate(t);
    }
    Ok(v)
}

fn decide(t: &ExactMatrix, inv: &Invariants) -> Result<Verdict> {
    let verdict = |si, simple, basis: Vec<&'static str>| Verdict {
        si,
        simple,
        basis,
        witness: None,
        invariants: inv.clone(),
    };

    if t.is_zero() {
        return Ok(verdict(Tri::Yes, Tri::Yes, vec!["zero-convention"]));
    }

    if inv.selfadjoint {
        let t2 = t * t;
        let simple = t2 == *t || &t2 * t == *t;
        let mut basis = vec!["Remark Rsa(i)", "derived-selfadjoint-criterion"];
        if inv.rank == 1 {
            basis.push("Theorem Tsa");
        }
        return Ok(verdict(Tri::Yes, Tri::from_bool(simple), basis));
    }

    if inv.normal {
        let ok = Tri::from_bool(is_idempotent(&(&t.adjoint() * t)));
        let mut basis = vec!["Theorem N2"];
        if inv.rank == 1 {
            basis.push("Theorem TN1");
        }
        return Ok(verdict(ok, ok, basis));
    }

    if inv.rank == 1 {
        let prof = rankone::profile(t)?;
        let (a, s) = (prof.a(), prof.s());
        if a.is_zero() {
            let ok = Tri::from_bool(s.is_one());
            return Ok(verdict(ok, ok, vec!["Theorem TR1"]));
        }
        if let Some(w) = scalar::decide_trace_norm(a, s) {
            let mut v = verdict(Tri::Yes, Tri::Yes, vec!["Theorem TR2 trace-norm branch"]);
            v.witness = Some(Witness::TraceNorm(w));
            return Ok(v);
        }
        if a.is_real() && s.is_one() {
            return Ok(verdict(Tri::Yes, Tri::No, vec!["Theorem Tnonsimple"]));
        }
        return Ok(verdict(Tri::No, Tri::No, vec!["Theorem TR2"]));
    }

    if inv.power_partial_isometry {
        let dim = u32::try_from(inv.dim).map_err(|_| Error::Precondition("dimension too large".into()))?;
        if !t.pow(dim)?.is_zero() {
            return Ok(verdict(Tri::Yes, Tri::No, vec!["Corollary CPP", "Example ENS"]));
        }
        if (t * t).is_zero() {
            return Ok(verdict(Tri::Yes, Tri::Yes, vec!["Corollary CPP", "derived-index-two-shift"]));
        }
        return Ok(verdict(Tri::Yes, Tri::Unknown, vec!["Corollary CPP"]));
    }

    if quick_reject(t)?.is_some() {
        return Ok(verdict(Tri::No, Tri::No, vec!["Remark R3(iii)", "Example EE"]));
    }

    Ok(verdict(Tri::Unknown, Tri::Unknown, Vec::new()))
}

/// Verdict on one factor of a direct sum, with the facts the combination
/// rules need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorVerdict {
    pub si: Tri,
    pub simple: Tri,
    /// The identity belongs to the semigroup.
    pub unital: bool,
    /// Zero does not belong to the semigroup.
    pub zero_free: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinedVerdict {
    pub si: Tri,
    pub simple: Tri,
    pub basis: Vec<&'static str>,
}

/// SI and simplicity of `S₁ ⊕ S₂` from the factors. Both factors must be
/// unital.
pub fn combine_direct_sum(v1: &FactorVerdict, v2: &FactorVerdict) -> Result<CombinedVerdict> {
    if !v1.unital || !v2.unital {
        return Err(Error::Precondition(format!(
            "direct sum rules need unital factors (unital: {}, {})",
            v1.unital, v2.unital
        )));
    }
    let si = match (v1.si, v2.si) {
        (Tri::Yes, Tri::Yes) => Tri::Yes,
        (Tri::No, _) | (_, Tri::No) => Tri::No,
        _ => Tri::Unknown,
    };
    let mut basis = vec!["Proposition TDS"];
    let simple = if si == Tri::No {
        Tri::No
    } else if v1.simple == Tri::Yes && v2.simple == Tri::Yes && v1.zero_free && v2.zero_free {
        basis.push("Proposition T3(ii)");
        Tri::Yes
    } else {
        Tri::Unknown
    };
    Ok(CombinedVerdict { si, simple, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn m(rows: &[&[(i64, i64)]]) -> ExactMatrix {
        ExactMatrix::from_real_ratios(rows).unwrap()
    }

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
        GaussianRational::from_ratios(re.0, re.1, im.0, im.1)
    }

    fn pair(t: &ExactMatrix) -> (Tri, Tri) {
        let v = classify(t).unwrap();
        (v.si, v.simple)
    }

    #[test]
    fn nilpotent() {
        let v = classify(&m(&[&[(0, 1), (1, 1)], &[(0, 1), (0, 1)]])).unwrap();
        assert_eq!((v.si, v.simple, v.basis), (Tri::Yes, Tri::Yes, vec!["Theorem TR1"]));
        assert_eq!(pair(&m(&[&[(0, 1), (2, 1)], &[(0, 1), (0, 1)]])), (Tri::No, Tri::No));
    }

    #[test]
    fn rns() {
        let v = classify(&m(&[&[(3, 5), (4, 5)], &[(0, 1), (0, 1)]])).unwrap();
        assert_eq!((v.si, v.simple), (Tri::Yes, Tri::No));
        assert_eq!(v.basis, vec!["Theorem Tnonsimple"]);
        let Some(Witness::Words { left, right }) = v.witness else { panic!() };
        assert_eq!((left.to_string(), right.to_string()), ("t".into(), "t".into()));
    }

    #[test]
    fn similarity_idempotent() {
        let v = classify(&m(&[&[(1, 1), (-1, 1)], &[(0, 1), (0, 1)]])).unwrap();
        assert_eq!((v.si, v.simple, v.basis), (Tri::No, Tri::No, vec!["Theorem TR2"]));
    }

    #[test]
    fn selfadjoint() {
        assert_eq!(pair(&m(&[&[(1, 2), (0, 1)], &[(0, 1), (0, 1)]])), (Tri::Yes, Tri::No));
        assert_eq!(pair(&m(&[&[(1, 1), (0, 1)], &[(0, 1), (0, 1)]])), (Tri::Yes, Tri::Yes));
        assert_eq!(pair(&m(&[&[(1, 1), (0, 1)], &[(0, 1), (-1, 1)]])), (Tri::Yes, Tri::Yes));
        assert_eq!(pair(&m(&[&[(-1, 1), (0, 1)], &[(0, 1), (0, 1)]])), (Tri::Yes, Tri::Yes));
        let v = classify(&m(&[&[(2, 1), (0, 1)], &[(0, 1), (0, 1)]])).unwrap();
        assert!(v.basis.contains(&"Theorem Tsa"));
        assert_eq!(v.simple, Tri::No);
    }

    #[test]
    fn normal() {
        let z = GaussianRational::zero();
        let v = classify(&ExactMatrix::diagonal(&[GaussianRational::i(), z.clone()])).unwrap();
        assert_eq!((v.si, v.simple), (Tri::Yes, Tri::Yes));
        assert_eq!(v.basis, vec!["Theorem N2", "Theorem TN1"]);
        assert_eq!(pair(&ExactMatrix::diagonal(&[g((0, 1), (2, 1)), z])), (Tri::No, Tri::No));
        assert_eq!(
            pair(&ExactMatrix::diagonal(&[GaussianRational::i(), GaussianRational::one()])),
            (Tri::Yes, Tri::Yes)
        );
    }

    #[test]
    fn trace_norm() {
        let t = ExactMatrix::from_rows(vec![
            vec![g((4, 5), (0, 1)), g((12, 20), (15, 20))],
            vec![GaussianRational::zero(), GaussianRational::zero()],
        ])
        .unwrap();
        let v = classify(&t).unwrap();
        assert_eq!((v.si, v.simple), (Tri::Yes, Tri::Yes));
        assert_eq!(v.witness, Some(Witness::TraceNorm(TraceNormWitness { m: 1, n: 1, l: 1 })));
        assert_eq!(v.basis, vec!["Theorem TR2 trace-norm branch"]);
    }

    #[test]
    fn example_e() {
        let t = ExactMatrix::from_rows(vec![
            vec![g((3, 13), (4, 13)), g((12, 13), (0, 1))],
            vec![GaussianRational::zero(), GaussianRational::zero()],
        ])
        .unwrap();
        assert_eq!(pair(&t), (Tri::No, Tri::No));
    }

    #[test]
    fn power_partial_isometries() {
        let ens = m(&[&[(1, 1), (0, 1), (0, 1)], &[(0, 1), (0, 1), (1, 1)], &[(0, 1), (0, 1), (0, 1)]]);
        let v = classify(&ens).unwrap();
        assert_eq!((v.si, v.simple), (Tri::Yes, Tri::No));
        assert_eq!(v.basis, vec!["Corollary CPP", "Example ENS"]);
        assert!(matches!(v.witness, Some(Witness::Words { .. })));

        let j3 = m(&[&[(0, 1), (1, 1), (0, 1)], &[(0, 1), (0, 1), (1, 1)], &[(0, 1), (0, 1), (0, 1)]]);
        assert_eq!(pair(&j3), (Tri::Yes, Tri::Unknown));

        let mut j2j2 = ExactMatrix::zeros(4, 4);
        j2j2.set(0, 1, GaussianRational::one());
        j2j2.set(2, 3, GaussianRational::one());
        assert_eq!(pair(&j2j2), (Tri::Yes, Tri::Yes));
    }

    #[test]
    fn unresolved_and_rejected() {
        let jordan = m(&[&[(1, 1), (1, 1)], &[(0, 1), (1, 1)]]);
        assert_eq!(pair(&jordan), (Tri::Unknown, Tri::Unknown));
        let small = m(&[&[(1, 4), (1, 4), (0, 1)], &[(0, 1), (1, 4), (1, 4)], &[(0, 1), (0, 1), (1, 4)]]);
        let v = classify(&small).unwrap();
        assert_eq!((v.si, v.simple), (Tri::No, Tri::No));
        assert!(v.basis.contains(&"Remark R3(iii)"));
    }

    #[test]
    fn quick_reject_examples() {
        let r = quick_reject(&m(&[&[(1, 4), (1, 4)], &[(0, 1), (0, 1)]])).unwrap().unwrap();
        assert_eq!(r.norm_sq_bound, crate::arith::ratio(1, 8));
        assert_eq!(quick_reject(&m(&[&[(0, 1), (1, 1)], &[(0, 1), (0, 1)]])).unwrap(), None);
        assert_eq!(quick_reject(&m(&[&[(1, 1), (-1, 1)], &[(0, 1), (0, 1)]])).unwrap(), None);
        assert_eq!(quick_reject(&m(&[&[(1, 4), (0, 1)], &[(0, 1), (0, 1)]])).unwrap(), None);
    }

    #[test]
    fn zero_and_errors() {
        let v = classify(&ExactMatrix::zeros(2, 2)).unwrap();
        assert_eq!((v.si, v.simple, v.basis), (Tri::Yes, Tri::Yes, vec!["zero-convention"]));
        assert!(classify(&ExactMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn direct_sums() {
        let f = |si, simple| FactorVerdict { si, simple, unital: true, zero_free: true };
        assert_eq!(combine_direct_sum(&f(Tri::Yes, Tri::No), &f(Tri::Yes, Tri::No)).unwrap().si, Tri::Yes);
        let c = combine_direct_sum(&f(Tri::Yes, Tri::Yes), &f(Tri::No, Tri::No)).unwrap();
        assert_eq!((c.si, c.simple), (Tri::No, Tri::No));
        let c = combine_direct_sum(&f(Tri::Yes, Tri::Yes), &f(Tri::Yes, Tri::Yes)).unwrap();
        assert_eq!((c.si, c.simple), (Tri::Yes, Tri::Yes));
        let mut with_zero = f(Tri::Yes, Tri::Yes);
        with_zero.zero_free = false;
        assert_eq!(combine_direct_sum(&with_zero, &f(Tri::Yes, Tri::Yes)).unwrap().simple, Tri::Unknown);
        let mut non_unital = f(Tri::Yes, Tri::Yes);
        non_unital.unital = false;
        assert!(combine_direct_sum(&non_unital, &f(Tri::Yes, Tri::Yes)).is_err());
    }
}
