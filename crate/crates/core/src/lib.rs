//! Minimal forbidden factors (minimal absent words) of linear and circular
//! words.
//!
//! The crate covers the full round trip between a word and its antidictionary:
//!
//! * [`factor_automaton`] builds the minimal factor automaton of a linear word
//!   together with its failure function, on top of an online suffix automaton.
//! * [`mfw`] computes minimal forbidden factors of linear words (from the
//!   suffix automaton) and of circular words, with brute-force oracles that
//!   apply the definition directly.
//! * [`l_automaton`] turns the trie of an antifactorial set into a DFA for the
//!   words avoiding it, and composes the circular factor automaton.
//! * [`reconstruction`] recovers a word or a circular word from its set of
//!   minimal forbidden factors.
//! * [`fibonacci`] generates Fibonacci words and checks the structure of the
//!   antidictionaries of circular Fibonacci words.
//!
//! Words are sequences of symbol indices into an explicit [`Alphabet`]; the
//! alphabet order is the lexicographic order used everywhere.

pub mod automata;
pub mod corpus;
mod error;
pub mod factor_automaton;
pub mod fibonacci;
pub mod l_automaton;
pub mod mfw;
pub mod reconstruction;
pub mod verify;
pub mod words;

pub use automata::{Dfa, StateId, Trie};
pub use error::{Error, Result};
pub use mfw::{MfwSet, SourceKind};
pub use words::{Alphabet, CircularWord, Symbol, Word};
