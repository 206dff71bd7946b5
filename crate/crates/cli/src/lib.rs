//! Report generation for the `torspair` command.

pub mod codec;
pub mod latex;
pub mod report;
pub mod run;

pub use report::{Artifact, Format, RunReport};
pub use run::{run_classical, run_sweep, run_twisted, Fault};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Invalid input; exit code 2.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] torspair_core::Error),
    #[error("decode error: {0}")]
    Decode(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
