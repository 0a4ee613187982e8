//! Presentation files, command dispatch and JSON reports for the `koszul`
//! binary.

mod commands;
pub mod file;

pub use commands::{run, CliError, Outcome, Report, Timing};
pub use file::{emit, parse_presentation, Body, FamilyLine, ParseError, PresentationFile, Term};
