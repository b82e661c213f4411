use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use si_lab::commands::{self, OracleOptions};
use si_lab::{CliError, MatrixDocument};
use si_lab_core::oracle::DEFAULT_MAX_ELEMS;
use si_lab_core::ExactMatrix;

#[derive(Parser)]
#[command(name = "si-lab", version, about = "Decide whether S(T, T*) is an SI semigroup, and whether it is simple")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A matrix given as a JSON document or inline.
#[derive(Args)]
struct MatrixInput {
    /// JSON file `{"name": ..., "rows": [[entry, ...], ...]}`.
    #[arg(required_unless_present = "inline", conflicts_with = "inline")]
    file: Option<PathBuf>,
    /// Inline matrix, rows separated by `;` and entries by `,`, e.g. "0,1;0,0".
    #[arg(long)]
    inline: Option<String>,
}

impl MatrixInput {
    fn document(&self) -> Result<MatrixDocument, CliError> {
        match (&self.inline, &self.file) {
            (Some(text), _) => Ok(MatrixDocument::from_inline(text)),
            (None, Some(path)) => MatrixDocument::read(path),
            (None, None) => Err(CliError::Input("no matrix given".into())),
        }
    }
}

#[derive(Args)]
struct Caps {
    /// Closure element cap.
    #[arg(long, env = "SI_LAB_MAX_ELEMS", default_value_t = DEFAULT_MAX_ELEMS)]
    max_elems: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one matrix, optionally checking the verdict with the oracle.
    Classify {
        #[command(flatten)]
        input: MatrixInput,
        /// Word-length bound for the oracle closure; 0 skips the oracle.
        #[arg(long, default_value_t = 0)]
        oracle_max_len: usize,
        #[command(flatten)]
        caps: Caps,
        /// Add wall-clock time to the report.
        #[arg(long)]
        timing: bool,
    },
    /// Enumerate the semigroup generated by one or more matrices.
    Oracle {
        /// JSON matrix files, one per generator.
        files: Vec<PathBuf>,
        /// Inline generator; may be repeated.
        #[arg(long)]
        inline: Vec<String>,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Do not add adjoints of the generators.
        #[arg(long)]
        no_adjoints: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Reduce a word over {T, t} for a rank-one matrix and check the result.
    Reduce {
        word: String,
        #[command(flatten)]
        input: MatrixInput,
        #[arg(long)]
        json: bool,
    },
    /// Solve a^m ā^n s^l = 1.
    TraceNorm {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify every built-in corpus matrix.
    Corpus {
        #[arg(long, default_value_t = 8)]
        oracle_max_len: usize,
        #[command(flatten)]
        caps: Caps,
    },
    /// Classifier against oracle and against unitary conjugates, on the corpus.
    Crosscheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        unitaries: u64,
        #[arg(long, default_value_t = 8)]
        oracle_max_len: usize,
        #[command(flatten)]
        caps: Caps,
    },
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) -> Result<(), CliError> {
    if json {
        let s = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.into()))?;
        println!("{s}");
    } else {
        print!("{}", text(value));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { input, oracle_max_len, caps, timing } => {
            let doc = input.document()?;
            let start = Instant::now();
            let mut report = commands::classify_report(
                &doc,
                OracleOptions { max_len: oracle_max_len, max_elems: caps.max_elems },
            )?;
            if timing {
                report.timing_us = Some(start.elapsed().as_micros() as u64);
            }
            emit(caps.json, &report, |r| r.render_text())?;
            if report.oracle.agreement == si_lab::report::Agreement::Disagree {
                return Err(CliError::Disagreement("classifier and exact oracle differ".into()));
            }
        }
        Command::Oracle { files, inline, max_len, no_adjoints, caps } => {
            let mut gens: Vec<ExactMatrix> = Vec::new();
            for f in &files {
                gens.push(MatrixDocument::read(f)?.to_matrix()?);
            }
            for text in &inline {
                gens.push(MatrixDocument::from_inline(text).to_matrix()?);
            }
            if gens.is_empty() {
                return Err(CliError::Input("no generators given".into()));
            }
            if gens.iter().any(|g| g.rows() != gens[0].rows()) {
                return Err(CliError::Input("generators have different dimensions".into()));
            }
            let (_, dump) = commands::oracle_dump(
                &gens,
                !no_adjoints,
                OracleOptions { max_len, max_elems: caps.max_elems },
            )?;
            emit(caps.json, &dump, |d| d.render_text())?;
        }
        Command::Reduce { word, input, json } => {
            let t = input.document()?.to_matrix()?;
            let report = commands::reduce(&word, &t)?;
            emit(json, &report, |r| r.render_text())?;
            if !report.verified {
                return Err(CliError::Disagreement(format!("reduction of {word} does not match evaluation")));
            }
        }
        Command::TraceNorm { a, s, json } => {
            let report = commands::trace_norm(&a, &s)?;
            emit(json, &report, |r| r.render_text())?;
        }
        Command::Corpus { oracle_max_len, caps } => {
            let rows = commands::corpus_rows(OracleOptions { max_len: oracle_max_len, max_elems: caps.max_elems })?;
            emit(caps.json, &rows, |r| commands::render_corpus_text(r))?;
            if let Some(r) = rows.iter().find(|r| r.oracle.agreement == si_lab::report::Agreement::Disagree) {
                return Err(CliError::Disagreement(format!("corpus entry {}", r.name)));
            }
        }
        Command::Crosscheck { seed, unitaries, oracle_max_len, caps } => {
            let report = commands::crosscheck(
                seed,
                unitaries,
                OracleOptions { max_len: oracle_max_len, max_elems: caps.max_elems },
            )?;
            emit(caps.json, &report, |r| r.render_text())?;
            if report.failures > 0 {
                return Err(CliError::Disagreement(format!("{} crosscheck failure(s)", report.failures)));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("si-lab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
