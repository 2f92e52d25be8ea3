use std::path::PathBuf;

/// Everything that makes a run unusable. All variants map to exit code 2;
/// a relation failure is a result, not an error.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("sector with {modes} modes at level {level} has {dim} states, above the dimension cap {cap} (set QFOCK_DIM_CAP to raise it)")]
    DimensionCap { modes: usize, level: u32, dim: u128, cap: usize },
    #[error("root denominator D={given} cannot represent the exponents needed here; use a multiple of {required}")]
    InsufficientRoot { given: u32, required: u32 },
    #[error(transparent)]
    Core(#[from] qfock_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

impl From<qfock_core::ring::RingError> for CliError {
    fn from(e: qfock_core::ring::RingError) -> Self {
        CliError::Core(e.into())
    }
}

impl From<qfock_core::fock::FockError> for CliError {
    fn from(e: qfock_core::fock::FockError) -> Self {
        CliError::Core(e.into())
    }
}
