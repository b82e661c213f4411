use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed matrix, entry, word or argument.
    #[error("input error: {0}")]
    Input(String),
    /// The classifier contradicts an exact oracle answer, or a reduction
    /// disagrees with direct evaluation.
    #[error("disagreement: {0}")]
    Disagreement(String),
    #[error(transparent)]
    Core(#[from] si_lab_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Disagreement(_) => 3,
            CliError::Core(si_lab_core::Error::Parse { .. }) => 2,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}
