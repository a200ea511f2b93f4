use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ringlab_core::Error),
    #[error("cannot read or write {0}: {1}")]
    Io(String, String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("unknown suite {0}")]
    UnknownSuite(String),
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl CliError {
    /// Whether the error comes from a resource cutoff rather than bad input
    /// or a failed check.
    pub fn is_cutoff(&self) -> bool {
        matches!(
            self,
            CliError::Core(ringlab_core::Error::SizeCutoffExceeded(..))
                | CliError::Core(ringlab_core::Error::EnumerationCutoffExceeded(..))
        )
    }
}
