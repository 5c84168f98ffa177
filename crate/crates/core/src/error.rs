use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("morphism is not prolongable on seed {seed}: {reason}")]
    NotProlongable { seed: u8, reason: String },

    #[error("factor [{start}, {start}+{len}) is outside a word of length {word_len}")]
    OutOfRange {
        start: usize,
        len: usize,
        word_len: usize,
    },

    #[error("invalid digit string: {0}")]
    InvalidDigits(String),

    #[error("input tuple {0} is outside the automaton alphabet")]
    SymbolOutsideAlphabet(String),

    #[error("incompatible automata: {0}")]
    SignatureMismatch(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("synthesis failed: {0}")]
    Synthesis(String),

    #[error("invalid unfolding instructions: {0}")]
    InvalidInstructions(String),

    #[error("unknown claim `{id}`; available: {}", available.join(", "))]
    UnknownClaim { id: String, available: Vec<String> },

    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),
}
