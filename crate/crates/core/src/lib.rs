//! Repetition factorizations of factors of automatic sequences.
//!
//! A word is a *repetition* when it has a period `p` with `2p <= |w|`; a
//! *repetition factorization* splits a word into consecutive repetitions and
//! its *width* is the number of blocks. This crate generates the classical
//! automatic sequences (Fibonacci, Thue-Morse, paperfolding, Rudin-Shapiro),
//! computes shortest and longest factorization widths by dynamic programming,
//! and builds deterministic finite automata with output (DFAOs) that compute
//! those widths from the index and length written in a numeration system.
//!
//! The [`claims`] module bundles desk-scale checks of the known bounds
//! (e.g. every factorizable Thue-Morse factor has width at most 7).

pub mod automata;
pub mod claims;
mod error;
pub mod factorize;
pub mod numeration;
pub mod repetition;
pub mod synthesis;
pub mod words;

pub use automata::{combine, Dfao};
pub use error::{Error, Result};
pub use factorize::{
    longest_factorization, profile_all_factors, shortest_factorization,
    two_first_term_factorizations, width_profile, Factorization, WidthProfile,
};
pub use numeration::{Base, DigitOrder, DigitString, NumerationSystem};
pub use repetition::{is_repetition, periods, RepetitionTable};
pub use synthesis::{guess_dfao, OracleSpec};
pub use words::{
    paperfolding_word, sequence_prefix, MorphismSpec, SequenceId, UnfoldingInstructions, Word,
};
