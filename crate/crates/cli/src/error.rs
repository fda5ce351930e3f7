use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("invalid algebra: {0}")]
    Validation(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] codimlab_core::Error),
}

impl CliError {
    /// 2 for usage and parse errors, 1 for mathematical failures.
    pub fn exit_code(&self) -> i32 {
        use codimlab_core::Error as E;
        match self {
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Core(
                E::CapExceeded { .. }
                | E::GuardExceeded(_)
                | E::InvalidPartition(_)
                | E::InconsistentBeta(_),
            ) => 2,
            CliError::Validation(_) | CliError::Core(_) => 1,
        }
    }
}
