//! Library half of the `spreadlab` command-line tool: value-grammar
//! parsing, report rendering, and the verification sweeps.

pub mod app;
pub mod parse;
pub mod report;
pub mod verify;
