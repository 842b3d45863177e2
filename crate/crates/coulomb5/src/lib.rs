//! Verification suites, tables and command-line front end for the
//! five-dimensional Coulomb problem implemented in [`coulomb5_core`].
//!
//! * [`config`] — run configuration and named tolerances,
//! * [`suites`] — the residual checks behind `verify`,
//! * [`tables`] — radial, cross-section, scattering-field and basis tables,
//! * [`output`] — CSV and JSON writers,
//! * [`cli`] — argument parsing and exit codes.

#![warn(missing_debug_implementations)]

pub mod cli;
pub mod config;
pub mod output;
pub mod suites;
pub mod tables;

pub use config::{ConfigError, Format, RadialGrid, RunConfig, TolOverride, Tolerances};
pub use suites::{cmd_verify, Check, VerificationReport};
pub use tables::{Cell, Table};

/// Errors of the front end.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Core(#[from] coulomb5_core::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{env} must be a positive integer, got {0:?}", env = cli::THREADS_ENV)]
    Threads(String),
}
