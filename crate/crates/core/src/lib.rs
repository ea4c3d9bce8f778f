//! Unique decodability of strings from their bigram counts.
//!
//! A word `w` is read with a delimiter `$` on both sides; its bigram map
//! counts every adjacent pair of `$w$`. The word is uniquely decodable when
//! no other word has the same counts. This crate decides that property with
//! a finite automaton built from obstruction languages, checks it against an
//! exhaustive decoder, and computes the canonical DFA of uniquely decodable
//! words.
//!
//! ```
//! use bigram_uniq::{Alphabet, Word, is_uniquely_decodable};
//!
//! let sigma = Alphabet::from_chars("aknt").unwrap();
//! assert!(is_uniquely_decodable(&Word::parse(&sigma, "katan").unwrap()).unique);
//! assert!(!is_uniquely_decodable(&Word::parse(&sigma, "katana").unwrap()).unique);
//! ```

pub mod algebra;
pub mod alphabet;
pub mod automaton;
pub mod bigram;
pub mod decide;
mod error;
pub mod obstructions;
pub mod oracle;
pub mod regex;

pub use alphabet::{Alphabet, Symbol, Word, DELIMITER_CHAR};
pub use automaton::{Dfa, Nfa, StateId};
pub use bigram::{bigram_graph, phi, BigramCounts, BigramGraph, Flows};
pub use decide::{
    is_obstruction, is_uniquely_decodable, shortest_bad_prefix, Decider, Decision, WitnessMode,
};
pub use error::{Error, Result};
pub use obstructions::{obstruction_triples, ObstructionTriple};
