//! Words in `T` and `T*`, and their reduction to scaled monomials when `T`
//! has rank one.
//!
//! For rank-one `T` every word collapses to `a^p · ā^q · s^k · B` where
//! `a = tr T`, `s = ‖T‖²` and `B` is one of `T`, `T*`, `TT*`, `T*T` (or the
//! word is zero when `a = 0`). The base only depends on the first and last
//! letter; the exponents count absorbed letters.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::arith::{ExactMatrix, GaussianRational};
use crate::error::{Error, Result};
use crate::rankone::{self, RankOneProfile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    XStar,
}

impl Letter {
    pub fn adjoint(self) -> Letter {
        match self {
            Letter::X => Letter::XStar,
            Letter::XStar => Letter::X,
        }
    }
}

/// Non-empty product of `T` and `T*`, read left to right.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidShape("empty word".into()));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; words have at least one letter.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn adjoint(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.adjoint()).collect())
    }

    /// All words of length `1..=max_len`, shortest first, `T` before `T*`.
    pub fn all_up_to(max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        for len in 1..=max_len {
            for bits in 0u64..(1u64 << len) {
                let letters = (0..len)
                    .map(|i| {
                        if bits >> (len - 1 - i) & 1 == 0 {
                            Letter::X
                        } else {
                            Letter::XStar
                        }
                    })
                    .collect();
                out.push(Word(letters));
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                Letter::X => "T",
                Letter::XStar => "t",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// `T` is the generator, `t` its adjoint: `"TtT"` is `TT*T`.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .char_indices()
            .map(|(i, c)| match c {
                'T' => Ok(Letter::X),
                't' => Ok(Letter::XStar),
                _ => Err(Error::Parse {
                    position: i,
                    message: alloc::format!("unexpected {c:?} in word, expected 'T' or 't'"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        if letters.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "empty word".into(),
            });
        }
        Ok(Word(letters))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Base {
    T,
    TStar,
    TTStar,
    TStarT,
    Zero,
}

impl Base {
    pub fn adjoint(self) -> Base {
        match self {
            Base::T => Base::TStar,
            Base::TStar => Base::T,
            other => other,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::T => "T",
            Base::TStar => "T*",
            Base::TTStar => "TT*",
            Base::TStarT => "T*T",
            Base::Zero => "0",
        })
    }
}

/// `a^p · ā^q · s^k · base`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScaledMonomial {
    pub p: u64,
    pub q: u64,
    pub k: u64,
    pub base: Base,
}

impl ScaledMonomial {
    pub const ZERO: ScaledMonomial = ScaledMonomial {
        p: 0,
        q: 0,
        k: 0,
        base: Base::Zero,
    };

    pub fn new(p: u64, q: u64, k: u64, base: Base) -> Self {
        if base == Base::Zero {
            return Self::ZERO;
        }
        ScaledMonomial { p, q, k, base }
    }

    /// `(a^p ā^q s^k B)* = a^q ā^p s^k B*`.
    pub fn adjoint(&self) -> ScaledMonomial {
        ScaledMonomial {
            p: self.q,
            q: self.p,
            k: self.k,
            base: self.base.adjoint(),
        }
    }

    /// Whether a word can reduce to this monomial when the trace is nonzero
    /// (`trace_zero = false`) or zero (`trace_zero = true`).
    pub fn is_reachable(&self, trace_zero: bool) -> bool {
        if self.base == Base::Zero {
            return trace_zero;
        }
        if trace_zero && (self.p > 0 || self.q > 0) {
            return false;
        }
        match self.base {
            Base::T => self.k > 0 || self.q == 0,
            Base::TStar => self.k > 0 || self.p == 0,
            _ => true,
        }
    }

    /// A word reducing to this monomial, or `None` if no word does.
    pub fn word_for(&self) -> Option<Word> {
        if !self.is_reachable(false) {
            return None;
        }
        let (p, q, k) = (self.p as usize, self.q as usize, self.k as usize);
        let rep = |l: Letter, n: usize| core::iter::repeat_n(l, n);
        let mut letters: Vec<Letter> = Vec::new();
        match self.base {
            Base::T if k == 0 => letters.extend(rep(Letter::X, p + 1)),
            Base::T => {
                letters.extend(rep(Letter::X, p + 1));
                letters.extend(rep(Letter::XStar, q + 1));
                for _ in 1..k {
                    letters.extend([Letter::X, Letter::XStar]);
                }
                letters.push(Letter::X);
            }
            Base::TTStar => {
                letters.extend(rep(Letter::X, p + 1));
                letters.extend(rep(Letter::XStar, q + 1));
                for _ in 0..k {
                    letters.extend([Letter::X, Letter::XStar]);
                }
            }
            Base::TStarT => {
                letters.extend(rep(Letter::XStar, q + 1));
                letters.extend(rep(Letter::X, p + 1));
                for _ in 0..k {
                    letters.extend([Letter::XStar, Letter::X]);
                }
            }
            Base::TStar => return self.adjoint().word_for().map(|w| w.adjoint()),
            Base::Zero => unreachable!(),
        }
        Some(Word(letters))
    }
}

impl fmt::Display for ScaledMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base == Base::Zero {
            return f.write_str("0");
        }
        let mut wrote = false;
        for (sym, e) in [("a", self.p), ("ā", self.q), ("s", self.k)] {
            if e > 0 {
                if wrote {
                    f.write_str("·")?;
                }
                if e == 1 {
                    f.write_str(sym)?;
                } else {
                    write!(f, "{sym}^{e}")?;
                }
                wrote = true;
            }
        }
        if wrote {
            f.write_str("·")?;
        }
        write!(f, "{}", self.base)
    }
}

fn step(sm: ScaledMonomial, letter: Letter, trace_zero: bool) -> ScaledMonomial {
    let ScaledMonomial { p, q, k, base } = sm;
    // Multiplying in a or ā is fatal when the trace is zero.
    let bump_p = || if trace_zero { ScaledMonomial::ZERO } else { ScaledMonomial::new(p + 1, q, k, base) };
    let bump_q = || if trace_zero { ScaledMonomial::ZERO } else { ScaledMonomial::new(p, q + 1, k, base) };
    match (base, letter) {
        (Base::Zero, _) => ScaledMonomial::ZERO,
        (Base::T, Letter::X) => bump_p(),
        (Base::T, Letter::XStar) => ScaledMonomial::new(p, q, k, Base::TTStar),
        (Base::TStar, Letter::X) => ScaledMonomial::new(p, q, k, Base::TStarT),
        (Base::TStar, Letter::XStar) => bump_q(),
        (Base::TTStar, Letter::X) => ScaledMonomial::new(p, q, k + 1, Base::T),
        (Base::TTStar, Letter::XStar) => bump_q(),
        (Base::TStarT, Letter::X) => bump_p(),
        (Base::TStarT, Letter::XStar) => ScaledMonomial::new(p, q, k + 1, Base::TStar),
    }
}

/// Reduces a word in a rank-one `T` to its scaled monomial.
pub fn reduce_rank_one(w: &Word, prof: &RankOneProfile) -> ScaledMonomial {
    let trace_zero = prof.a().is_zero();
    let mut letters = w.letters().iter();
    let first = match letters.next() {
        Some(Letter::X) => Base::T,
        Some(Letter::XStar) => Base::TStar,
        None => unreachable!("words are non-empty"),
    };
    letters.fold(ScaledMonomial::new(0, 0, 0, first), |sm, &l| step(sm, l, trace_zero))
}

/// The product obtained by substituting `T` and `T*` into the word.
pub fn evaluate_word(w: &Word, t: &ExactMatrix) -> ExactMatrix {
    let adj = t.adjoint();
    let pick = |l: &Letter| match l {
        Letter::X => t,
        Letter::XStar => &adj,
    };
    let mut letters = w.letters().iter();
    let first = pick(letters.next().expect("words are non-empty")).clone();
    letters.fold(first, |acc, l| &acc * pick(l))
}

/// The matrix `a^p · ā^q · s^k · base` for a rank-one `T`.
pub fn monomial_value(sm: &ScaledMonomial, t: &ExactMatrix) -> Result<ExactMatrix> {
    let prof = rankone::profile(t)?;
    let base = match sm.base {
        Base::Zero => return Ok(ExactMatrix::zeros(t.rows(), t.cols())),
        Base::T => t.clone(),
        Base::TStar => t.adjoint(),
        Base::TTStar => t * &t.adjoint(),
        Base::TStarT => &t.adjoint() * t,
    };
    let a = prof.a();
    let scalar = &(&a.pow(sm.p) * &a.conj().pow(sm.q))
        * &GaussianRational::from_real(prof.s().clone()).pow(sm.k);
    Ok(base.scale(&scalar))
}

/// Every reachable monomial with `p + q + k ≤ max_total_degree`; the zero
/// monomial is included when the trace is zero.
pub fn enumerate_monomials(prof: &RankOneProfile, max_total_degree: u64) -> BTreeSet<ScaledMonomial> {
    let trace_zero = prof.a().is_zero();
    let mut out = BTreeSet::new();
    if trace_zero {
        out.insert(ScaledMonomial::ZERO);
    }
    for base in [Base::T, Base::TStar, Base::TTStar, Base::TStarT] {
        for k in 0..=max_total_degree {
            for p in 0..=max_total_degree - k {
                for q in 0..=max_total_degree - k - p {
                    let sm = ScaledMonomial::new(p, q, k, base);
                    if sm.is_reachable(trace_zero) {
                        out.insert(sm);
                    }
                }
            }
        }
    }
    out
}

/// Human-readable form, e.g. `"a^2·s·T"`.
pub fn describe(sm: &ScaledMonomial) -> String {
    alloc::format!("{sm}")
}
