use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet size {0}: must be between 1 and 255")]
    InvalidAlphabet(usize),

    #[error("parse error at position {position} in {input:?}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("letter {letter} is outside the alphabet 1..{size}")]
    LetterOutOfRange { letter: usize, size: u8 },

    #[error("arithmetic overflow in 64-bit coefficient computation; use the arbitrary-precision path (binom_big / rle_binom)")]
    Overflow,

    #[error("unsupported order {order}: at most {max} is supported here")]
    UnsupportedOrder { order: usize, max: usize },

    #[error("unsupported alphabet: {0}")]
    UnsupportedAlphabet(String),

    #[error("enumeration budget exceeded: {required} words required, budget is {budget}")]
    BudgetExceeded { required: String, budget: u64 },

    #[error("empty word: {0}")]
    EmptyWord(&'static str),

    #[error("sequence has {available} terms, {required} required")]
    InsufficientTerms { available: usize, required: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
