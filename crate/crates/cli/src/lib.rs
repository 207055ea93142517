//! Library half of the `cfgen` command: input grammar, pipeline runs and
//! their text, JSON and CSV renderings.

pub mod analysis;
mod error;
pub mod input;
pub mod scan;
pub mod suites;

pub use error::CliError;
pub use input::{parse_input, render, NumberInput, ParseError};
