//! File formats and command implementations behind the `splinedim` binary.
//!
//! Every command returns its report as a string plus an exit status, so the
//! binary is a thin wrapper and the commands can be tested in-process.

pub mod commands;
pub mod mesh;
pub mod table;

use std::io;
use std::path::PathBuf;

use splinedim_core::dimension::DimError;
use splinedim_core::oracle::OracleError;
use splinedim_core::triangulation::MeshError;

/// Exit status: success.
pub const EXIT_OK: i32 = 0;
/// Exit status: the input is well formed but outside what the theory covers.
pub const EXIT_DOMAIN: i32 = 1;
/// Exit status: unreadable or malformed input.
pub const EXIT_INPUT: i32 = 2;
/// Exit status: a closed form disagreed with the oracle.
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("IoError: {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("{0}")]
    Mesh(#[from] MeshError),
    #[error("{0}")]
    Dim(#[from] DimError),
    #[error("{0}")]
    Oracle(#[from] OracleError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Io { .. } | Self::Parse(_) => EXIT_INPUT,
            Self::Dim(DimError::Mismatch { .. }) => EXIT_MISMATCH,
            Self::Mesh(_) | Self::Dim(_) | Self::Oracle(_) => EXIT_DOMAIN,
        }
    }

    /// Stable identifier, matching the core error names where they exist.
    pub fn name(&self) -> &'static str {
        match self {
            Self::Io { .. } => "IoError",
            Self::Parse(_) => "ParseError",
            Self::Mesh(e) => e.name(),
            Self::Dim(e) => e.name(),
            Self::Oracle(e) => e.name(),
        }
    }
}

/// What a command prints on success, and the status to exit with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: EXIT_OK }
    }
}
