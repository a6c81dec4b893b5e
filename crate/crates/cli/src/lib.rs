//! Command line front end: ring/ideal expressions, command dispatch and
//! report rendering.

pub mod build;
pub mod commands;
pub mod dsl;

pub use build::{build, ring_from_text, Built, CliError};
pub use commands::{run, Cli, Output};
pub use dsl::{parse_ideal, parse_ring, IdealExpr, Lit, ParseError, RingExpr};
