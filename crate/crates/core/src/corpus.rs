//! Built-in named matrices covering every branch of the classifier.

use alloc::vec::Vec;

use crate::arith::{ExactMatrix, GaussianRational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub note: &'static str,
    pub matrix: ExactMatrix,
}

type Raw = (&'static str, &'static str, &'static [&'static [&'static str]]);

const RAW: &[Raw] = &[
    ("nilpotent-e12", "nilpotent partial isometry", &[&["0", "1"], &["0", "0"]]),
    ("nilpotent-scaled-2", "nilpotent with norm 2", &[&["0", "2"], &["0", "0"]]),
    ("nilpotent-e13-3x3", "nilpotent partial isometry in dimension 3", &[&["0", "0", "1"], &["0", "0", "0"], &["0", "0", "0"]]),
    ("nilpotent-rotated", "(3/5, 4/5) tensor (-4/5, 3/5)", &[&["-12/25", "9/25"], &["-16/25", "12/25"]]),
    ("nilpotent-half", "nilpotent with norm 1/2", &[&["0", "1/2"], &["0", "0"]]),
    ("projection-e11", "rank-one projection", &[&["1", "0"], &["0", "0"]]),
    ("projection-pyth", "projection onto (3/5, 4/5)", &[&["9/25", "12/25"], &["12/25", "16/25"]]),
    ("scaled-projection-half", "half a projection", &[&["1/2", "0"], &["0", "0"]]),
    ("scaled-projection-neg", "negative projection", &[&["-1", "0"], &["0", "0"]]),
    ("scaled-projection-2", "twice a projection", &[&["2", "0"], &["0", "0"]]),
    ("diag-1-neg1", "selfadjoint unitary", &[&["1", "0"], &["0", "-1"]]),
    ("identity-2", "identity", &[&["1", "0"], &["0", "1"]]),
    ("zero-2", "zero", &[&["0", "0"], &["0", "0"]]),
    ("rns-3-4-5", "rank-one partial isometry with real trace 3/5", &[&["3/5", "4/5"], &["0", "0"]]),
    ("rns-neg", "rank-one partial isometry with real trace -5/13", &[&["-5/13", "12/13"], &["0", "0"]]),
    ("example-e-3-4-13", "unit norm, trace (3+4i)/13", &[&["3/13+4/13i", "12/13"], &["0", "0"]]),
    ("similarity-P", "projection similar to similarity-A", &[&["1", "0"], &["0", "0"]]),
    ("similarity-A", "non-orthogonal idempotent", &[&["1", "-1"], &["0", "0"]]),
    ("trace-norm-4-5", "trace 4/5, norm squared 25/16", &[&["4/5", "3/5+3/4i"], &["0", "0"]]),
    ("trace-norm-3-5", "trace 3/5, norm squared 25/9", &[&["3/5", "4/3+4/5i"], &["0", "0"]]),
    ("trace-norm-real", "trace 2/5, norm squared 5/2", &[&["2/5", "3/2+3/10i"], &["0", "0"]]),
    ("trace-norm-imag", "trace 3i/5, norm squared 25/9", &[&["3/5i", "4/3+4/5i"], &["0", "0"]]),
    ("unimodular-nonnormal", "trace 1, norm squared 2", &[&["1", "1"], &["0", "0"]]),
    ("pythagorean-imag-trace", "unit norm, trace 4i/5", &[&["4/5i", "3/5"], &["0", "0"]]),
    ("small-norm", "norm squared 1/8", &[&["1/4", "1/4"], &["0", "0"]]),
    ("diag-i-0", "phase times a projection", &[&["i", "0"], &["0", "0"]]),
    ("diag-2i-0", "scaled phase times a projection", &[&["2i", "0"], &["0", "0"]]),
    ("diag-i-1", "diagonal unitary", &[&["i", "0"], &["0", "1"]]),
    ("normal-phase-3-4-5", "phase of infinite order times a projection", &[&["3/5+4/5i", "0"], &["0", "0"]]),
    ("normal-i-neg1", "diagonal unitary of order 4", &[&["i", "0"], &["0", "-1"]]),
    ("ens-3x3", "[1] plus a 2x2 shift", &[&["1", "0", "0"], &["0", "0", "1"], &["0", "0", "0"]]),
    ("shift-j3", "3x3 truncated shift", &[&["0", "1", "0"], &["0", "0", "1"], &["0", "0", "0"]]),
    (
        "j2-plus-j2",
        "two 2x2 shifts",
        &[&["0", "1", "0", "0"], &["0", "0", "0", "0"], &["0", "0", "0", "1"], &["0", "0", "0", "0"]],
    ),
    ("rotation-3-4-5", "rotation of infinite order", &[&["3/5", "-4/5"], &["4/5", "3/5"]]),
    ("jordan", "unipotent Jordan block", &[&["1", "1"], &["0", "1"]]),
    ("small-jordan", "Jordan block with norm squared 3/16", &[&["1/4", "1/4"], &["0", "1/4"]]),
    ("swap", "coordinate swap", &[&["0", "1"], &["1", "0"]]),
];

fn build(rows: &[&[&str]]) -> ExactMatrix {
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| e.parse::<GaussianRational>().expect("corpus entries parse"))
                .collect()
        })
        .collect();
    ExactMatrix::from_rows(rows).expect("corpus matrices are rectangular")
}

/// All corpus entries, in a fixed order.
pub fn entries() -> Vec<CorpusEntry> {
    RAW.iter()
        .map(|&(name, note, rows)| CorpusEntry {
            name,
            note,
            matrix: build(rows),
        })
        .collect()
}

pub fn get(name: &str) -> Option<CorpusEntry> {
    entries().into_iter().find(|e| e.name == name)
}

/// Rank-one entries used to exercise word reduction.
pub const WORD_SOUNDNESS_SET: [&str; 6] = [
    "nilpotent-e12",
    "nilpotent-scaled-2",
    "rns-3-4-5",
    "trace-norm-4-5",
    "example-e-3-4-13",
    "similarity-A",
];
