//! File formats, experiment plumbing and the command-line front end for
//! `rii-core`.

use std::path::Path;

pub mod cli;
pub mod config;
pub mod formats;
pub mod fuzz;
pub mod manifest;

/// Failures that abort a run before any check is evaluated. All map to exit
/// code 1; failed checks are reported through the manifest instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            source,
        }
    }

    pub fn input(e: impl std::fmt::Display) -> Self {
        Error::Input(e.to_string())
    }
}
