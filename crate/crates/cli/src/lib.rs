//! Parser, renderer and command runner behind the `fqzeta` binary.

pub mod args;
pub mod parse;
pub mod run;

pub use parse::{parse_elem, parse_modulus, parse_poly, render_elem, render_poly, ParseError};
pub use run::{execute, CliError, Outcome};
