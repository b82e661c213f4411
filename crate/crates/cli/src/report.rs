//! Serializable reports. JSON is the machine interface; the text output is
//! rendered from the same structs.

use std::fmt::Write as _;

use serde::Serialize;
use si_lab_core::classify::{Invariants, Tri, Verdict, Witness};
use si_lab_core::oracle::{Certificate, ClosureResult, OracleAnswer, OracleValue};

use crate::document::{matrix_rows, print_entry, MatrixDocument};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Agreement {
    Agree,
    OracleInconclusive,
    NotRun,
    Disagree,
}

impl Agreement {
    pub fn as_str(self) -> &'static str {
        match self {
            Agreement::Agree => "agree",
            Agreement::OracleInconclusive => "oracle-inconclusive",
            Agreement::NotRun => "not-run",
            Agreement::Disagree => "disagree",
        }
    }
}

/// Compares a classifier verdict with the oracle. Only exact oracle answers
/// count; `Agree` needs at least one of them.
pub fn agreement(v: &Verdict, si: &OracleAnswer, simple: &OracleAnswer) -> Agreement {
    let mut confirmed = false;
    for (ours, theirs) in [(v.si, si), (v.simple, simple)] {
        let exact = match (theirs.exact, theirs.value) {
            (true, OracleValue::Yes) => Tri::Yes,
            (true, OracleValue::No) => Tri::No,
            _ => continue,
        };
        if ours.is_known() {
            if ours != exact {
                return Agreement::Disagree;
            }
            confirmed = true;
        }
    }
    if confirmed {
        Agreement::Agree
    } else {
        Agreement::OracleInconclusive
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantsBlock {
    pub dim: usize,
    pub rank: usize,
    pub trace: String,
    pub norm_sq: String,
    pub selfadjoint: bool,
    pub normal: bool,
    pub partial_isometry: bool,
    pub power_partial_isometry: bool,
}

impl From<&Invariants> for InvariantsBlock {
    fn from(i: &Invariants) -> Self {
        InvariantsBlock {
            dim: i.dim,
            rank: i.rank,
            trace: print_entry(&i.trace),
            norm_sq: i.norm_sq.to_string(),
            selfadjoint: i.selfadjoint,
            normal: i.normal,
            partial_isometry: i.partial_isometry,
            power_partial_isometry: i.power_partial_isometry,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessBlock {
    /// `a^m · ā^n · s^l = 1`.
    TraceNorm { m: u64, n: u64, l: u64 },
    /// `left · T · right = T*`.
    Words { left: String, right: String },
}

impl From<&Witness> for WitnessBlock {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::TraceNorm(w) => WitnessBlock::TraceNorm { m: w.m, n: w.n, l: w.l },
            Witness::Words { left, right } => WitnessBlock::Words {
                left: left.to_string(),
                right: right.to_string(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictBlock {
    pub si: String,
    pub simple: String,
    pub basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessBlock>,
}

impl From<&Verdict> for VerdictBlock {
    fn from(v: &Verdict) -> Self {
        VerdictBlock {
            si: v.si.to_string(),
            simple: v.simple.to_string(),
            basis: v.basis.iter().map(|s| s.to_string()).collect(),
            witness: v.witness.as_ref().map(WitnessBlock::from),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnswerBlock {
    pub value: String,
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    pub note: String,
}

impl AnswerBlock {
    pub fn new(s: &ClosureResult, a: &OracleAnswer) -> Self {
        AnswerBlock {
            value: a.value.to_string(),
            exact: a.exact,
            certificate: a.certificate.as_ref().map(|c| describe_certificate(s, c)),
            note: a.note.clone(),
        }
    }
}

fn word_at(s: &ClosureResult, idx: usize) -> String {
    s.provenance(idx).map(|w| w.to_string()).unwrap_or_else(|_| format!("#{idx}"))
}

pub fn describe_certificate(s: &ClosureResult, c: &Certificate) -> String {
    match c {
        Certificate::Words { element, left, right } => {
            format!("({left})·({})·({right}) = ({})*", word_at(s, *element), word_at(s, *element))
        }
        Certificate::AdjointMissing { element } => {
            format!("({})* is not in the ideal of {}", word_at(s, *element), word_at(s, *element))
        }
        Certificate::ProperIdeal { generator, missing } => {
            format!("{} is not in the ideal of {}", word_at(s, *missing), word_at(s, *generator))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleBlock {
    pub used: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_len: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_elems: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saturated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub si: Option<AnswerBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simple: Option<AnswerBlock>,
    pub agreement: Agreement,
}

impl OracleBlock {
    pub fn not_run() -> Self {
        OracleBlock {
            used: false,
            max_len: None,
            max_elems: None,
            saturated: None,
            element_count: None,
            si: None,
            simple: None,
            agreement: Agreement::NotRun,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub input: MatrixDocument,
    pub invariants: InvariantsBlock,
    pub verdict: VerdictBlock,
    pub oracle: OracleBlock,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

impl Report {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let name = self.input.name.as_deref().unwrap_or("(unnamed)");
        let _ = writeln!(out, "matrix {name}: {}", rows_inline(&self.input.rows));
        let i = &self.invariants;
        let _ = writeln!(
            out,
            "  dim {}  rank {}  trace {}  norm² {}",
            i.dim, i.rank, i.trace, i.norm_sq
        );
        let _ = writeln!(
            out,
            "  selfadjoint {}  normal {}  partial isometry {}  power partial isometry {}",
            i.selfadjoint, i.normal, i.partial_isometry, i.power_partial_isometry
        );
        let v = &self.verdict;
        let _ = writeln!(out, "si: {}  simple: {}", v.si, v.simple);
        if !v.basis.is_empty() {
            let _ = writeln!(out, "basis: {}", v.basis.join("; "));
        }
        match &v.witness {
            Some(WitnessBlock::TraceNorm { m, n, l }) => {
                let _ = writeln!(out, "witness: a^{m}·ā^{n}·s^{l} = 1");
            }
            Some(WitnessBlock::Words { left, right }) => {
                let _ = writeln!(out, "witness: ({left})·T·({right}) = T*");
            }
            None => {}
        }
        let o = &self.oracle;
        if o.used {
            let _ = writeln!(
                out,
                "oracle: {} elements, saturated {}, max_len {}",
                o.element_count.unwrap_or(0),
                o.saturated.unwrap_or(false),
                o.max_len.unwrap_or(0)
            );
            for (label, a) in [("si", &o.si), ("simple", &o.simple)] {
                if let Some(a) = a {
                    let exact = if a.exact { "exact" } else { "bounded" };
                    let _ = writeln!(out, "  {label}: {} ({exact}) {}", a.value, a.note);
                }
            }
        }
        let _ = writeln!(out, "agreement: {}", o.agreement.as_str());
        if let Some(us) = self.timing_us {
            let _ = writeln!(out, "time: {us} µs");
        }
        out
    }
}

pub fn rows_inline(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join(",")).collect::<Vec<_>>().join(";")
}

/// Closure dump: dims, generators, elements with provenance, verdicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureDump {
    pub dim: usize,
    pub include_adjoints: bool,
    pub generators: Vec<Vec<Vec<String>>>,
    pub saturated: bool,
    pub max_len_reached: usize,
    pub hit_elem_cap: bool,
    pub element_count: usize,
    pub elements: Vec<ElementDump>,
    pub si: AnswerBlock,
    pub simple: AnswerBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementDump {
    pub index: usize,
    pub word: String,
    pub rows: Vec<Vec<String>>,
}

impl ClosureDump {
    pub fn new(s: &ClosureResult, si: &OracleAnswer, simple: &OracleAnswer) -> Self {
        ClosureDump {
            dim: s.dim(),
            include_adjoints: s.include_adjoints(),
            generators: s.generators().iter().map(matrix_rows).collect(),
            saturated: s.saturated(),
            max_len_reached: s.max_len_reached(),
            hit_elem_cap: s.hit_elem_cap(),
            element_count: s.len(),
            elements: s
                .elements()
                .iter()
                .enumerate()
                .map(|(index, m)| ElementDump {
                    index,
                    word: word_at(s, index),
                    rows: matrix_rows(m),
                })
                .collect(),
            si: AnswerBlock::new(s, si),
            simple: AnswerBlock::new(s, simple),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "closure of {} generator(s), dim {}, adjoints {}: {} elements, saturated {}, max_len {}{}",
            self.generators.len(),
            self.dim,
            self.include_adjoints,
            self.element_count,
            self.saturated,
            self.max_len_reached,
            if self.hit_elem_cap { " (element cap hit)" } else { "" }
        );
        for e in &self.elements {
            let _ = writeln!(out, "  [{}] {} = {}", e.index, e.word, rows_inline(&e.rows));
        }
        for (label, a) in [("si", &self.si), ("simple", &self.simple)] {
            let exact = if a.exact { "exact" } else { "bounded" };
            let _ = writeln!(out, "{label}: {} ({exact}) {}", a.value, a.note);
            if let Some(c) = &a.certificate {
                let _ = writeln!(out, "  certificate: {c}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::CliError;
    use si_lab_core::classify::classify;
    use si_lab_core::ExactMatrix;

    fn answer(value: OracleValue, exact: bool) -> OracleAnswer {
        OracleAnswer { value, exact, certificate: None, note: String::new() }
    }

    #[test]
    fn agreement_counts_only_exact_answers() {
        let t = ExactMatrix::from_real_ratios(&[&[(0, 1), (1, 1)], &[(0, 1), (0, 1)]]).unwrap();
        let v = classify(&t).unwrap();
        let (yes, no) = (answer(OracleValue::Yes, true), answer(OracleValue::No, true));
        let bounded_no = answer(OracleValue::No, false);
        let open = answer(OracleValue::Inconclusive, false);
        assert_eq!(agreement(&v, &yes, &yes), Agreement::Agree);
        assert_eq!(agreement(&v, &yes, &open), Agreement::Agree);
        assert_eq!(agreement(&v, &open, &open), Agreement::OracleInconclusive);
        assert_eq!(agreement(&v, &bounded_no, &open), Agreement::OracleInconclusive);
        assert_eq!(agreement(&v, &no, &yes), Agreement::Disagree);
        assert_eq!(agreement(&v, &yes, &no), Agreement::Disagree);
        assert_eq!(CliError::Disagreement(String::new()).exit_code(), 3);
    }

    #[test]
    fn unknown_verdicts_never_disagree() {
        let jordan = ExactMatrix::from_real_ratios(&[&[(1, 1), (1, 1)], &[(0, 1), (1, 1)]]).unwrap();
        let v = classify(&jordan).unwrap();
        assert!(!v.si.is_known());
        let no = answer(OracleValue::No, true);
        assert_eq!(agreement(&v, &no, &no), Agreement::OracleInconclusive);
    }
}
