//! File formats, reports and command implementations behind the `si-lab`
//! binary.

pub mod commands;
pub mod document;
pub mod error;
pub mod report;

pub use commands::OracleOptions;
pub use document::MatrixDocument;
pub use error::CliError;
