use thiserror::Error;

/// Errors raised when parsing the text forms of words, antimorphisms,
/// directive bi-sequences and morphisms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("illegal character {found:?} at offset {offset} (expected one of {expected})")]
    IllegalCharacter {
        found: char,
        offset: usize,
        expected: &'static str,
    },
    #[error("missing '(' introducing the period")]
    MissingPeriod,
    #[error("unbalanced parentheses")]
    Unbalanced,
    #[error("the period must not be empty")]
    EmptyPeriod,
    #[error("unexpected trailing input {0:?}")]
    Trailing(String),
    #[error("malformed morphism {0:?} (expected \"0>IMAGE,1>IMAGE\")")]
    MalformedMorphism(String),
    #[error("morphism images must be nonempty")]
    ErasingMorphism,
}

/// Errors raised by the generation, normalization and morphism operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("closure recurrence did not grow at step {step}")]
    NonIncreasingChain { step: usize },
    #[error("fewer than two pseudopalindromic prefixes fit the confirmation window of length {len}")]
    WindowTooShort { len: usize },
    #[error("normalization transducer found no cycle within {boundaries} period boundaries")]
    CycleNotFound { boundaries: usize },
    #[error("morphism is not prolongable on {0}")]
    NotProlongable(char),
    #[error("k must be a positive integer")]
    ZeroK,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
