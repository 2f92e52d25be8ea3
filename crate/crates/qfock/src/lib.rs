//! File formats, report assembly and the batch runner for [`qfock_core`].
//!
//! The `qfock` binary is a thin clap front end over [`runner`]; everything it
//! writes is defined in [`json`] (operator bundles) and [`report`] (certification
//! reports and the merged status table).

pub mod json;
pub mod report;
pub mod runner;

mod error;

pub use error::CliError;
pub use qfock_core;
