//! Command implementations. Each returns a report; rendering and exit codes
//! are left to the caller.

use std::fmt::Write as _;

use serde::Serialize;
use si_lab_core::classify::{classify, Verdict};
use si_lab_core::corpus;
use si_lab_core::oracle::{check_si, check_simple, generate_closure, ClosureResult};
use si_lab_core::rankone::profile;
use si_lab_core::scalar::{analyze_trace_norm, verify_witness, ModulusSolution};
use si_lab_core::transforms::{conjugate, exact_unitary};
use si_lab_core::word::{evaluate_word, monomial_value, reduce_rank_one, Word};
use si_lab_core::{ExactMatrix, GaussianRational};

use crate::document::{matrix_rows, parse_entry, parse_real, MatrixDocument};
use crate::error::CliError;
use crate::report::{
    agreement, rows_inline, Agreement, AnswerBlock, ClosureDump, InvariantsBlock, OracleBlock, Report,
    VerdictBlock,
};

/// Closure bounds for oracle runs; `max_len = 0` skips the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    pub max_len: usize,
    pub max_elems: usize,
}

fn run_oracle(t: &ExactMatrix, v: &Verdict, opts: OracleOptions) -> Result<OracleBlock, CliError> {
    if opts.max_len == 0 {
        return Ok(OracleBlock::not_run());
    }
    let s = generate_closure(std::slice::from_ref(t), true, opts.max_len, opts.max_elems)?;
    let (si, simple) = (check_si(&s), check_simple(&s));
    Ok(OracleBlock {
        used: true,
        max_len: Some(opts.max_len),
        max_elems: Some(opts.max_elems),
        saturated: Some(s.saturated()),
        element_count: Some(s.len()),
        si: Some(AnswerBlock::new(&s, &si)),
        simple: Some(AnswerBlock::new(&s, &simple)),
        agreement: agreement(v, &si, &simple),
    })
}

pub fn classify_report(doc: &MatrixDocument, opts: OracleOptions) -> Result<Report, CliError> {
    let t = doc.to_matrix()?;
    let v = classify(&t)?;
    let oracle = run_oracle(&t, &v, opts)?;
    Ok(Report {
        input: doc.clone(),
        invariants: InvariantsBlock::from(&v.invariants),
        verdict: VerdictBlock::from(&v),
        oracle,
        timing_us: None,
    })
}

pub fn oracle_dump(
    generators: &[ExactMatrix],
    include_adjoints: bool,
    opts: OracleOptions,
) -> Result<(ClosureResult, ClosureDump), CliError> {
    if opts.max_len == 0 {
        return Err(CliError::Input("--max-len must be positive".into()));
    }
    let s = generate_closure(generators, include_adjoints, opts.max_len, opts.max_elems)?;
    let dump = ClosureDump::new(&s, &check_si(&s), &check_simple(&s));
    Ok((s, dump))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReduceReport {
    pub word: String,
    pub monomial: String,
    pub p: u64,
    pub q: u64,
    pub k: u64,
    pub base: String,
    pub value: Vec<Vec<String>>,
    pub direct: Vec<Vec<String>>,
    pub verified: bool,
}

impl ReduceReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} -> {}", self.word, self.monomial);
        let _ = writeln!(out, "value: {}", rows_inline(&self.value));
        if self.verified {
            let _ = writeln!(out, "verified against direct evaluation");
        } else {
            let _ = writeln!(out, "MISMATCH: direct evaluation gives {}", rows_inline(&self.direct));
        }
        out
    }
}

pub fn reduce(word: &str, t: &ExactMatrix) -> Result<ReduceReport, CliError> {
    let w: Word = word.parse().map_err(|e| CliError::Input(format!("word {word:?}: {e}")))?;
    let prof = profile(t).map_err(|e| CliError::Input(e.to_string()))?;
    let sm = reduce_rank_one(&w, &prof);
    let value = monomial_value(&sm, t)?;
    let direct = evaluate_word(&w, t);
    Ok(ReduceReport {
        word: w.to_string(),
        monomial: sm.to_string(),
        p: sm.p,
        q: sm.q,
        k: sm.k,
        base: sm.base.to_string(),
        verified: value == direct,
        value: matrix_rows(&value),
        direct: matrix_rows(&direct),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceNormReport {
    pub a: String,
    pub s: String,
    /// `(m, n, l)` with `a^m · ā^n · s^l = 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[u64; 3]>,
    pub verified: bool,
    /// Stage that rules out a witness: `modulus` or `argument`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_stage: Option<String>,
    pub modulus: String,
    pub argument: String,
}

impl TraceNormReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "a = {}, s = {}", self.a, self.s);
        let _ = writeln!(out, "modulus stage: {}", self.modulus);
        let _ = writeln!(out, "argument stage: {}", self.argument);
        match (&self.witness, &self.failing_stage) {
            (Some([m, n, l]), _) => {
                let _ = writeln!(out, "witness: (m, n, l) = ({m}, {n}, {l}), verified {}", self.verified);
            }
            (None, stage) => {
                let _ = writeln!(out, "none ({} stage)", stage.as_deref().unwrap_or("?"));
            }
        }
        out
    }
}

pub fn trace_norm(a: &str, s: &str) -> Result<TraceNormReport, CliError> {
    let a: GaussianRational = parse_entry(a).map_err(|e| CliError::Input(format!("a = {a:?}: {e}")))?;
    let s = parse_real(s)?;
    if num_traits::Zero::is_zero(&a) {
        return Err(CliError::Input("a must be nonzero".into()));
    }
    if !num_traits::Signed::is_positive(&s) {
        return Err(CliError::Input("s must be positive".into()));
    }
    let analysis = analyze_trace_norm(&a, &s)?;
    let modulus = match analysis.modulus {
        ModulusSolution::None => "no (p, l) with |a|^(2p)·s^(2l) = 1".to_string(),
        ModulusSolution::All => "|a| = s = 1, every (p, l) solves it".to_string(),
        ModulusSolution::Minimal { p0, l0 } => format!("solutions (k·{p0}, k·{l0})"),
    };
    let argument = match analysis.progression {
        si_lab_core::scalar::PositivityProgression::ZeroOnly => "a^d > 0 only for d = 0".to_string(),
        si_lab_core::scalar::PositivityProgression::Arithmetic(d) => format!("a^d > 0 exactly for d ∈ {d}ℕ"),
    };
    let failing_stage = match (&analysis.witness, analysis.modulus) {
        (Some(_), _) => None,
        (None, ModulusSolution::None) => Some("modulus".to_string()),
        (None, _) => Some("argument".to_string()),
    };
    Ok(TraceNormReport {
        a: a.to_string(),
        s: s.to_string(),
        witness: analysis.witness.map(|w| [w.m, w.n, w.l]),
        verified: analysis.witness.is_some_and(|w| verify_witness(&a, &s, &w)),
        failing_stage,
        modulus,
        argument,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusRow {
    pub name: String,
    pub note: String,
    pub dim: usize,
    pub si: String,
    pub simple: String,
    pub basis: Vec<String>,
    pub oracle: OracleBlock,
}

pub fn corpus_rows(opts: OracleOptions) -> Result<Vec<CorpusRow>, CliError> {
    corpus::entries()
        .into_iter()
        .map(|e| {
            let v = classify(&e.matrix)?;
            Ok(CorpusRow {
                name: e.name.to_string(),
                note: e.note.to_string(),
                dim: e.matrix.rows(),
                si: v.si.to_string(),
                simple: v.simple.to_string(),
                basis: v.basis.iter().map(|s| s.to_string()).collect(),
                oracle: run_oracle(&e.matrix, &v, opts)?,
            })
        })
        .collect()
}

pub fn render_corpus_text(rows: &[CorpusRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<24} {:>3} {:<7} {:<7} {:<20} {:<10} basis",
        "name", "dim", "si", "simple", "agreement", "oracle"
    );
    for r in rows {
        let oracle = match (r.oracle.element_count, r.oracle.saturated) {
            (Some(n), Some(true)) => format!("{n} sat"),
            (Some(n), _) => format!("{n}+"),
            _ => "-".to_string(),
        };
        let _ = writeln!(
            out,
            "{:<24} {:>3} {:<7} {:<7} {:<20} {:<10} {}",
            r.name,
            r.dim,
            r.si,
            r.simple,
            r.oracle.agreement.as_str(),
            oracle,
            r.basis.join("; ")
        );
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckRow {
    pub name: String,
    pub si: String,
    pub simple: String,
    pub agreement: Agreement,
    /// Seeds whose conjugate `U T U*` got a different `(si, simple)`.
    pub unitary_mismatches: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub seed: u64,
    pub unitaries: u64,
    pub rows: Vec<CrosscheckRow>,
    pub failures: usize,
}

impl CrosscheckReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<24} si {:<7} simple {:<7} {:<20} unitary {}",
                r.name,
                r.si,
                r.simple,
                r.agreement.as_str(),
                if r.unitary_mismatches.is_empty() { "ok".to_string() } else { format!("{:?}", r.unitary_mismatches) }
            );
        }
        let _ = writeln!(
            out,
            "{} entries, seeds {}..{}, {} failure(s)",
            self.rows.len(),
            self.seed,
            self.seed + self.unitaries,
            self.failures
        );
        out
    }
}

/// Classifier against the oracle, and against itself on `U T U*` for
/// `unitaries` consecutive seeds starting at `seed`.
pub fn crosscheck(seed: u64, unitaries: u64, opts: OracleOptions) -> Result<CrosscheckReport, CliError> {
    let mut rows = Vec::new();
    for e in corpus::entries() {
        let v = classify(&e.matrix)?;
        let oracle = run_oracle(&e.matrix, &v, opts)?;
        let mut unitary_mismatches = Vec::new();
        for k in seed..seed + unitaries {
            let c = conjugate(&e.matrix, &exact_unitary(e.matrix.rows(), k))?;
            let w = classify(&c)?;
            if (w.si, w.simple) != (v.si, v.simple) {
                unitary_mismatches.push(k);
            }
        }
        rows.push(CrosscheckRow {
            name: e.name.to_string(),
            si: v.si.to_string(),
            simple: v.simple.to_string(),
            agreement: oracle.agreement,
            unitary_mismatches,
        });
    }
    let failures = rows
        .iter()
        .filter(|r| r.agreement == Agreement::Disagree || !r.unitary_mismatches.is_empty())
        .count();
    Ok(CrosscheckReport {
        seed,
        unitaries,
        rows,
        failures,
    })
}
