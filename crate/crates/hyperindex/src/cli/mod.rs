//! Game file parsing, the end-to-end analysis pipeline, report emission,
//! and the bundled corpus.

pub mod corpus;
pub mod parser;

pub use parser::{parse_game, write_game, ParseError};

/// Command-line entry point (filled in by the pipeline module).
pub fn main() {
    todo!("cli pipeline")
}
