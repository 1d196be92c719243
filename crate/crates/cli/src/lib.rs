//! Command-line reports for the curvegroups toolkit.
//!
//! Every subcommand produces a [`Report`]: echoed inputs, a result tree
//! and a list of checks. The process exits with 0 when no check failed,
//! 1 when some check failed and 2 on invalid input.

use thiserror::Error;

pub mod commands;
pub mod golden;
pub mod quartic;
pub mod report;
pub mod verify;

pub use report::{Basis, Check, Report, Status};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Error, Debug)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("golden data ({origin}): {msg}")]
    Golden { origin: String, msg: String },
    #[error("unknown module {0:?}; expected one of {modules}", modules = verify::SECTIONS.join(", "))]
    UnknownModule(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Zvk(#[from] curvegroups::zvk::ZvkError),
    #[error(transparent)]
    Artin(#[from] curvegroups::artin::ArtinError),
    #[error(transparent)]
    Braid(#[from] curvegroups::braid::BraidError),
    #[error(transparent)]
    Presentation(#[from] curvegroups::presentation::PresentationError),
    #[error(transparent)]
    Plucker(#[from] curvegroups::plucker::PluckerError),
    #[error(transparent)]
    Ade(#[from] curvegroups::ade::AdeError),
}

/// Exit status for a finished report.
pub fn exit_code(r: &Report) -> u8 {
    if r.passed() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}
