//! k-binomial equivalence of finite words.
//!
//! Two words are k-binomially equivalent when every word of length at most
//! `k` occurs equally often as a scattered subword of both. This crate
//! computes the coefficients, tests the equivalence, generates 2-binomial
//! classes, maps words to nil-2 group coordinates, enumerates class
//! censuses and the associated languages, builds an explicit family of
//! singletons and estimates automaticity.

pub mod automaticity;
pub mod census;
pub mod classgen;
pub mod enumerate;
pub mod equivalence;
pub mod error;
pub mod nil2;
pub mod singletons;
pub mod word;

pub use enumerate::Budget;
pub use error::{Error, Result};
pub use word::{
    binom, binom_big, parikh, rle_binom, signature, Alphabet, BinomialSignature, ParikhVector,
    RleWord, Word,
};
