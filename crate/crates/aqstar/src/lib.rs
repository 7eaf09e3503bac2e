//! Command-line front end for `aqstar-core`: element syntax, reports, and dispatch.

pub mod cli;
pub mod parse;
pub mod report;

pub use cli::{run, Outcome};
