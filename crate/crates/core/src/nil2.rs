//! Signed words over `Σ ∪ Σ⁻¹`, bracket coefficients and the integer
//! coordinates of the free nil-2 group.
//!
//! Text syntax for signed words: tokens separated by `.`, each a letter
//! optionally followed by `'` for its inverse, e.g. `1.2.3'.2.3.1'`.
//!
//! Equal coordinates are a necessary condition for two signed words to
//! represent the same group element. Within `Σ*` the condition is also
//! sufficient; for arbitrary signed words no such claim is made.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{binom_letters, Alphabet, ParikhVector, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedLetter {
    pub letter: u8,
    pub inverse: bool,
}

impl SignedLetter {
    pub fn pos(letter: u8) -> Self {
        SignedLetter {
            letter,
            inverse: false,
        }
    }

    pub fn neg(letter: u8) -> Self {
        SignedLetter {
            letter,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        SignedLetter {
            letter: self.letter,
            inverse: !self.inverse,
        }
    }

    // Letter in the doubled alphabet: a -> a, a^{-1} -> m + a.
    fn code(self, m: usize) -> u8 {
        if self.inverse {
            self.letter + m as u8
        } else {
            self.letter
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedWord {
    alphabet: Alphabet,
    tokens: Vec<SignedLetter>,
}

impl SignedWord {
    pub fn new(alphabet: Alphabet, tokens: Vec<SignedLetter>) -> Result<Self> {
        for t in &tokens {
            alphabet.check(t.letter as usize)?;
        }
        Ok(SignedWord { alphabet, tokens })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        SignedWord {
            alphabet,
            tokens: Vec::new(),
        }
    }

    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(SignedWord::empty(alphabet));
        }
        let mut tokens = Vec::new();
        for (i, tok) in text.split('.').enumerate() {
            let err = |message: String| Error::Parse {
                input: text.to_string(),
                position: i + 1,
                message,
            };
            let tok = tok.trim();
            let (digits, inverse) = match tok.strip_suffix('\'') {
                Some(rest) => (rest, true),
                None => (tok, false),
            };
            let value: usize = digits
                .parse()
                .map_err(|_| err(format!("malformed token {tok:?}")))?;
            if value == 0 || value > alphabet.size() {
                return Err(err(format!(
                    "letter {value} is outside the alphabet 1..{}",
                    alphabet.size()
                )));
            }
            tokens.push(SignedLetter {
                letter: value as u8,
                inverse,
            });
        }
        Ok(SignedWord { alphabet, tokens })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn tokens(&self) -> &[SignedLetter] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&other.tokens);
        SignedWord {
            alphabet: self.alphabet.max(other.alphabet),
            tokens,
        }
    }

    /// The group inverse: reversed, with every sign flipped.
    pub fn inverse(&self) -> SignedWord {
        SignedWord {
            alphabet: self.alphabet,
            tokens: self.tokens.iter().rev().map(|t| t.inverted()).collect(),
        }
    }

    /// The commutator `[x, y] = x⁻¹ y⁻¹ x y`.
    pub fn commutator(x: &SignedWord, y: &SignedWord) -> SignedWord {
        x.inverse().concat(&y.inverse()).concat(x).concat(y)
    }

    fn codes(&self) -> Vec<u8> {
        let m = self.alphabet.size();
        self.tokens.iter().map(|t| t.code(m)).collect()
    }
}

impl From<&Word> for SignedWord {
    fn from(w: &Word) -> Self {
        SignedWord {
            alphabet: w.alphabet(),
            tokens: w.letters().iter().map(|&a| SignedLetter::pos(a)).collect(),
        }
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{}", t.letter)?;
            if t.inverse {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}

/// Signed sum over the sign patterns of `v` of ordinary coefficients in the
/// doubled alphabet. Only `1 <= |v| <= 2` is supported.
pub fn bracket(u: &SignedWord, v: &[u8]) -> Result<i64> {
    if v.is_empty() || v.len() > 2 {
        return Err(Error::UnsupportedOrder {
            order: v.len(),
            max: 2,
        });
    }
    let m = u.alphabet.size();
    for &a in v {
        u.alphabet.check(a as usize)?;
    }
    let codes = u.codes();
    let mut total: i64 = 0;
    for pattern in 0u32..(1 << v.len()) {
        let mut x = Vec::with_capacity(v.len());
        let mut sign = 1i64;
        for (i, &a) in v.iter().enumerate() {
            if pattern & (1 << i) != 0 {
                x.push(a + m as u8);
                sign = -sign;
            } else {
                x.push(a);
            }
        }
        let c = i64::try_from(binom_letters(&codes, &x)?).map_err(|_| Error::Overflow)?;
        total = total.checked_add(sign * c).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// Coordinates in `Z^{m²}`: the `m` single-letter brackets, then the brackets
/// of the two-distinct-letter words in lexicographic order (12, 13, ..., 21, 23, ...).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhiVector(pub Vec<i64>);

/// The index words of [`PhiVector`] in order.
pub fn phi_index(alphabet: Alphabet) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = alphabet.letters().map(|a| vec![a]).collect();
    for a in alphabet.letters() {
        for b in alphabet.letters().filter(|&b| b != a) {
            out.push(vec![a, b]);
        }
    }
    out
}

pub fn phi(w: &SignedWord) -> Result<PhiVector> {
    let index = phi_index(w.alphabet);
    let mut out = Vec::with_capacity(index.len());
    // Single pass: a token b^{±1} adds its sign times the signed count of
    // earlier a-tokens to the (a, b) bracket.
    let m = w.alphabet.size();
    let mut singles = vec![0i64; m];
    let mut pairs = vec![0i64; m * m];
    for t in &w.tokens {
        let b = t.letter as usize - 1;
        let s: i64 = if t.inverse { -1 } else { 1 };
        for a in 0..m {
            if a != b {
                let cross = singles[a].checked_mul(s).ok_or(Error::Overflow)?;
                pairs[a * m + b] = pairs[a * m + b].checked_add(cross).ok_or(Error::Overflow)?;
            }
        }
        singles[b] += s;
    }
    for x in &index {
        match x.as_slice() {
            [a] => out.push(singles[*a as usize - 1]),
            [a, b] => out.push(pairs[(*a as usize - 1) * m + (*b as usize - 1)]),
            _ => unreachable!(),
        }
    }
    Ok(PhiVector(out))
}

/// Normal form of the image of a plain word in the nil-2 submonoid:
/// `1^{n_1} ... m^{n_m}` followed by the central commutators `[b, a]`
/// (`a < b`) raised to `binom(w, ba)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NilNormalForm {
    pub parikh: ParikhVector,
    /// `(b, a) -> binom(w, ba)` for all `a < b`, ordered by `(b, a)`.
    pub exponents: BTreeMap<(u8, u8), u64>,
}

pub fn nil_normal_form(w: &Word) -> Result<NilNormalForm> {
    let mut exponents = BTreeMap::new();
    for a in w.alphabet().letters() {
        for b in w.alphabet().letters().filter(|&b| b > a) {
            exponents.insert((b, a), binom_letters(w.letters(), &[b, a])?);
        }
    }
    Ok(NilNormalForm {
        parikh: w.parikh(),
        exponents,
    })
}
