//! File formats, reports and the command-line driver around `extshift-core`.

pub mod app;
pub mod demo;
pub mod error;
pub mod facet_file;
pub mod fuzz;
pub mod json;
pub mod matrix_file;
pub mod report;
pub mod transform;

pub use error::{CliError, ExitCode};
