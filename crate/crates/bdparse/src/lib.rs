//! Bidirectional macro-scheme parsing.
//!
//! A bidirectional parse partitions a string into phrases that are either
//! explicit characters or copies of a substring found elsewhere in the same
//! string, on either side. This crate implements the greedy longest-valid-
//! phrase parser with right references (lzrr) alongside the classic
//! comparison factorizations (lz77, its right-to-left twin lzp, the
//! right-reference-only lzor, and lex-parse), plus a validator and decoder
//! for arbitrary parses and the batch machinery behind the CLI.
//!
//! Positions are 1-based on every public surface.
//!
//! ```
//! use bdparse::{lzrr, decode, validate, Text};
//!
//! let text = Text::from("abababaababa");
//! let parse = lzrr(&text);
//! assert!(validate(&parse, &text).is_ok());
//! assert_eq!(decode(&parse).unwrap(), text);
//! ```

pub mod batch;
pub mod forest;
pub mod format;
pub mod index;
pub mod parse;
pub mod parsers;
mod sais;
pub mod text;
pub mod words;

pub use forest::{CycleUnion, ScratchOverlay, SourceForest};
pub use index::{lnf, lpf_prime, SuffixNeighborhood, TextIndex};
pub use parse::{decode, source_of, validate, Parse, ParseError, Phrase};
pub use parsers::{
    best_of_reverse, lex_parse, lz77, lz_prime, lzor, lzrr, lzrr_with_index, Algorithm,
    BestOfReverse, LzrrSession,
};
pub use text::Text;
