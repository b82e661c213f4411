//! Matrix input: JSON documents, inline literals and single entries.

use std::path::Path;

use serde::{Deserialize, Serialize};
use si_lab_core::{ExactMatrix, GaussianRational, Rational};

use crate::error::CliError;

/// `{"name": "...", "rows": [["0", "1"], ["0", "0"]]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rows: Vec<Vec<String>>,
}

impl MatrixDocument {
    pub fn from_matrix(name: Option<String>, m: &ExactMatrix) -> Self {
        MatrixDocument {
            name,
            rows: matrix_rows(m),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("matrix document: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// `"0,1;0,0"`: rows separated by `;`, entries by `,`.
    pub fn from_inline(text: &str) -> Self {
        MatrixDocument {
            name: None,
            rows: text
                .split(';')
                .map(|row| row.split(',').map(|e| e.trim().to_string()).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ExactMatrix, CliError> {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, e)| {
                        parse_entry(e).map_err(|err| CliError::Input(format!("entry ({r}, {c}) {e:?}: {err}")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let m = ExactMatrix::from_rows(rows).map_err(|e| CliError::Input(e.to_string()))?;
        if !m.is_square() {
            return Err(CliError::Input(format!("matrix must be square, got {}x{}", m.rows(), m.cols())));
        }
        Ok(m)
    }
}

pub fn parse_entry(s: &str) -> Result<GaussianRational, si_lab_core::Error> {
    s.parse()
}

pub fn print_entry(z: &GaussianRational) -> String {
    z.to_string()
}

/// A real rational in entry syntax.
pub fn parse_real(s: &str) -> Result<Rational, CliError> {
    let z = parse_entry(s).map_err(|e| CliError::Input(format!("{s:?}: {e}")))?;
    if !z.is_real() {
        return Err(CliError::Input(format!("{s:?} must be real")));
    }
    Ok(z.re().clone())
}

pub fn matrix_rows(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(print_entry).collect()).collect()
}
