//! Alphabets, dense and run-length-encoded words, Parikh vectors and
//! subword binomial coefficients.
//!
//! Letters are 1-based (`1..=m`) everywhere in the public API. The derived
//! ordering on [`Word`] is the lexicographic order induced by the integer
//! order on letters.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A totally ordered alphabet `{1 < 2 < ... < m}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet(u8);

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 || size > u8::MAX as usize {
            return Err(Error::InvalidAlphabet(size));
        }
        Ok(Alphabet(size as u8))
    }

    pub fn size(self) -> usize {
        self.0 as usize
    }

    pub fn letters(self) -> impl Iterator<Item = u8> + Clone {
        1..=self.0
    }

    pub fn contains(self, letter: u8) -> bool {
        letter >= 1 && letter <= self.0
    }

    pub fn check(self, letter: usize) -> Result<u8> {
        if letter >= 1 && letter <= self.0 as usize {
            Ok(letter as u8)
        } else {
            Err(Error::LetterOutOfRange {
                letter,
                size: self.0,
            })
        }
    }

    /// Number of words of length `n`, or `None` when it does not fit in a `u64`.
    pub fn words_of_length(self, n: usize) -> Option<u64> {
        let n: u32 = n.try_into().ok()?;
        (self.0 as u64).checked_pow(n)
    }
}

/// A finite word over an [`Alphabet`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    // `letters` comes first so that the derived `Ord` is lexicographic.
    letters: Vec<u8>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&a| !alphabet.contains(a)) {
            return Err(Error::LetterOutOfRange {
                letter: bad as usize,
                size: alphabet.0,
            });
        }
        Ok(Word { letters, alphabet })
    }

    pub(crate) fn from_raw(alphabet: Alphabet, letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&a| alphabet.contains(a)));
        Word { letters, alphabet }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            letters: Vec::new(),
            alphabet,
        }
    }

    /// Parses a word. For `m <= 9` the text is a digit string (`"1223312"`),
    /// otherwise a comma-separated list of integers (`"10,2,11"`).
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let text = text.trim();
        let err = |position: usize, message: String| Error::Parse {
            input: text.to_string(),
            position,
            message,
        };
        let mut letters = Vec::with_capacity(text.len());
        if text.is_empty() {
            return Ok(Word::empty(alphabet));
        }
        if alphabet.size() <= 9 {
            for (i, ch) in text.chars().enumerate() {
                let d = ch
                    .to_digit(10)
                    .ok_or_else(|| err(i + 1, format!("expected a digit, found {ch:?}")))?;
                if !alphabet.contains(d as u8) {
                    return Err(err(
                        i + 1,
                        format!("letter {d} is outside the alphabet 1..{}", alphabet.size()),
                    ));
                }
                letters.push(d as u8);
            }
        } else {
            for (i, tok) in text.split(',').enumerate() {
                let tok = tok.trim();
                let value: usize = tok
                    .parse()
                    .map_err(|_| err(i + 1, format!("expected an integer, found {tok:?}")))?;
                if value == 0 || value > alphabet.size() {
                    return Err(err(
                        i + 1,
                        format!(
                            "letter {value} is outside the alphabet 1..{}",
                            alphabet.size()
                        ),
                    ));
                }
                letters.push(value as u8);
            }
        }
        Ok(Word { letters, alphabet })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word {
            letters,
            alphabet: self.alphabet.max(other.alphabet),
        }
    }

    pub fn count(&self, letter: u8) -> u64 {
        self.letters.iter().filter(|&&a| a == letter).count() as u64
    }

    pub fn parikh(&self) -> ParikhVector {
        parikh(self)
    }

    /// Letterwise image under `f`, which must map into `target`.
    pub fn map_letters(&self, target: Alphabet, f: impl Fn(u8) -> u8) -> Result<Word> {
        Word::new(target, self.letters.iter().map(|&a| f(a)).collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_letters(&self.letters, self.alphabet, f)
    }
}

pub(crate) fn format_letters(
    letters: &[u8],
    alphabet: Alphabet,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    if alphabet.size() <= 9 {
        for &a in letters {
            write!(f, "{a}")?;
        }
    } else {
        for (i, &a) in letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
    }
    Ok(())
}

/// Letter counts `(|w|_1, ..., |w|_m)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParikhVector(Vec<u64>);

impl ParikhVector {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() || counts.len() > u8::MAX as usize {
            return Err(Error::InvalidAlphabet(counts.len()));
        }
        Ok(ParikhVector(counts))
    }

    pub fn zero(alphabet: Alphabet) -> Self {
        ParikhVector(vec![0; alphabet.size()])
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet(self.0.len() as u8)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// Count of a 1-based letter.
    pub fn get(&self, letter: u8) -> u64 {
        self.0[letter as usize - 1]
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// The lexicographically least word with these counts, `1^{n_1} ... m^{n_m}`.
    pub fn sorted_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.total() as usize);
        for (i, &c) in self.0.iter().enumerate() {
            letters.extend(std::iter::repeat_n((i + 1) as u8, c as usize));
        }
        Word::from_raw(self.alphabet(), letters)
    }

    /// Size of the abelian class, the multinomial coefficient `n! / (n_1! ... n_m!)`.
    pub fn class_size(&self) -> BigUint {
        let mut total = BigUint::one();
        let mut seen = 0u64;
        for &c in &self.0 {
            for i in 1..=c {
                seen += 1;
                total = total * BigUint::from(seen) / BigUint::from(i);
            }
        }
        total
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

pub fn parikh(w: &Word) -> ParikhVector {
    let mut counts = vec![0u64; w.alphabet.size()];
    for &a in &w.letters {
        counts[a as usize - 1] += 1;
    }
    ParikhVector(counts)
}

/// Number of occurrences of `v` as a scattered subword of `u`, with checked
/// 64-bit arithmetic. Works on raw letter slices of any alphabet.
pub fn binom_letters(u: &[u8], v: &[u8]) -> Result<u64> {
    // Row j of the prefix table holds binom(u[..i], v[..j]); only the
    // current column over j is kept.
    let mut row = vec![0u64; v.len() + 1];
    row[0] = 1;
    for &a in u {
        for j in (1..=v.len()).rev() {
            if v[j - 1] == a {
                row[j] = row[j].checked_add(row[j - 1]).ok_or(Error::Overflow)?;
            }
        }
    }
    Ok(row[v.len()])
}

/// Binomial coefficient `binom(u, v)` of two words.
pub fn binom(u: &Word, v: &Word) -> Result<u64> {
    binom_letters(&u.letters, &v.letters)
}

/// Arbitrary-precision binomial coefficient.
pub fn binom_big(u: &[u8], v: &[u8]) -> BigUint {
    let mut row = vec![BigUint::zero(); v.len() + 1];
    row[0] = BigUint::one();
    for &a in u {
        for j in (1..=v.len()).rev() {
            if v[j - 1] == a {
                let prev = row[j - 1].clone();
                row[j] += prev;
            }
        }
    }
    row.pop().unwrap_or_default()
}

/// All coefficients `binom(w, x)` for `1 <= |x| <= k`, ordered by length
/// and then lexicographically. The first `m` entries are the Parikh vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinomialSignature {
    alphabet_size: u8,
    order: u8,
    coefficients: Vec<u64>,
}

impl BinomialSignature {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet(self.alphabet_size)
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Coefficient for the word `x` (1-based letters, `1 <= |x| <= k`).
    pub fn get(&self, x: &[u8]) -> Option<u64> {
        let idx = signature_index(self.alphabet_size as usize, self.order as usize, x)?;
        self.coefficients.get(idx).copied()
    }
}

/// Number of signature entries, `m + m^2 + ... + m^k`.
pub fn signature_len(m: usize, k: usize) -> Option<usize> {
    let mut total = 0usize;
    let mut power = 1usize;
    for _ in 0..k {
        power = power.checked_mul(m)?;
        total = total.checked_add(power)?;
    }
    Some(total)
}

/// Position of `x` in the canonical signature order.
pub fn signature_index(m: usize, k: usize, x: &[u8]) -> Option<usize> {
    if x.is_empty() || x.len() > k || x.iter().any(|&a| a == 0 || a as usize > m) {
        return None;
    }
    let offset = signature_len(m, x.len() - 1)?;
    let rank = x.iter().fold(0usize, |acc, &a| acc * m + (a as usize - 1));
    Some(offset + rank)
}

/// Incrementally maintained signature: appending a letter `c` adds
/// `binom(w, y)` to `binom(w, yc)` for every `y` with `|y| < k`.
#[derive(Debug, Clone)]
pub struct SignatureAccumulator {
    m: usize,
    k: usize,
    offsets: Vec<usize>,
    coefficients: Vec<u64>,
}

impl SignatureAccumulator {
    pub fn new(alphabet: Alphabet, k: usize) -> Result<Self> {
        let m = alphabet.size();
        if k == 0 {
            return Err(Error::InvalidArgument("order k must be at least 1".into()));
        }
        let mut offsets = Vec::with_capacity(k + 1);
        for len in 0..=k {
            offsets.push(signature_len(m, len).ok_or(Error::Overflow)?);
        }
        Ok(SignatureAccumulator {
            m,
            k,
            coefficients: vec![0; offsets[k]],
            offsets,
        })
    }

    pub fn push(&mut self, letter: u8) -> Result<()> {
        let m = self.m;
        let c = letter as usize - 1;
        for len in (2..=self.k).rev() {
            let src = self.offsets[len - 2];
            let dst = self.offsets[len - 1];
            let count = self.offsets[len - 1] - self.offsets[len - 2];
            for r in 0..count {
                let add = self.coefficients[src + r];
                if add != 0 {
                    let slot = &mut self.coefficients[dst + r * m + c];
                    *slot = slot.checked_add(add).ok_or(Error::Overflow)?;
                }
            }
        }
        self.coefficients[c] = self.coefficients[c].checked_add(1).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Overwrites this accumulator with `other` (same alphabet and order).
    pub fn copy_from(&mut self, other: &SignatureAccumulator) {
        self.coefficients.copy_from_slice(&other.coefficients);
    }

    pub fn to_signature(&self) -> BinomialSignature {
        BinomialSignature {
            alphabet_size: self.m as u8,
            order: self.k as u8,
            coefficients: self.coefficients.clone(),
        }
    }
}

pub fn signature(w: &Word, k: usize) -> Result<BinomialSignature> {
    if k > u8::MAX as usize {
        return Err(Error::UnsupportedOrder {
            order: k,
            max: u8::MAX as usize,
        });
    }
    let mut acc = SignatureAccumulator::new(w.alphabet, k)?;
    for &a in &w.letters {
        acc.push(a)?;
    }
    Ok(acc.to_signature())
}

/// One maximal block `letter^exponent` of a run-length-encoded word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Run {
    pub letter: u8,
    pub exponent: BigUint,
}

/// A word stored as canonical runs: adjacent runs carry distinct letters and
/// every exponent is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RleWord {
    alphabet: Alphabet,
    runs: Vec<Run>,
}

impl RleWord {
    /// Builds the canonical form of the given runs. Zero exponents are
    /// dropped and neighbouring runs of the same letter are merged.
    pub fn from_runs<I, E>(alphabet: Alphabet, runs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u8, E)>,
        E: Into<BigUint>,
    {
        let mut out = RleWord {
            alphabet,
            runs: Vec::new(),
        };
        for (letter, exponent) in runs {
            alphabet.check(letter as usize)?;
            out.push_run(letter, exponent.into());
        }
        Ok(out)
    }

    pub fn from_word(w: &Word) -> Self {
        let mut out = RleWord {
            alphabet: w.alphabet,
            runs: Vec::new(),
        };
        for &a in &w.letters {
            out.push_run(a, BigUint::one());
        }
        out
    }

    fn push_run(&mut self, letter: u8, exponent: BigUint) {
        if exponent.is_zero() {
            return;
        }
        match self.runs.last_mut() {
            Some(last) if last.letter == letter => last.exponent += exponent,
            _ => self.runs.push(Run { letter, exponent }),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    /// Number of blocks (maximal runs).
    pub fn block_count(&self) -> usize {
        self.runs.len()
    }

    pub fn len(&self) -> BigUint {
        self.runs.iter().map(|r| &r.exponent).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn parikh_big(&self) -> Vec<BigUint> {
        let mut counts = vec![BigUint::zero(); self.alphabet.size()];
        for r in &self.runs {
            counts[r.letter as usize - 1] += &r.exponent;
        }
        counts
    }

    /// Dense expansion; refuses words longer than `max_len`.
    pub fn to_word(&self, max_len: usize) -> Result<Word> {
        let len = self.len();
        match len.to_usize() {
            Some(n) if n <= max_len => {
                let mut letters = Vec::with_capacity(n);
                for r in &self.runs {
                    let e = r.exponent.to_usize().unwrap_or(0);
                    letters.extend(std::iter::repeat_n(r.letter, e));
                }
                Ok(Word::from_raw(self.alphabet, letters))
            }
            _ => Err(Error::BudgetExceeded {
                required: len.to_string(),
                budget: max_len as u64,
            }),
        }
    }

    /// Suffix obtained by deleting the first `count` letters.
    pub fn drop_prefix(&self, count: &BigUint) -> Result<RleWord> {
        let mut remaining = count.clone();
        let mut out = RleWord {
            alphabet: self.alphabet,
            runs: Vec::new(),
        };
        for r in &self.runs {
            if remaining.is_zero() {
                out.push_run(r.letter, r.exponent.clone());
            } else if remaining >= r.exponent {
                remaining -= &r.exponent;
            } else {
                out.push_run(r.letter, &r.exponent - &remaining);
                remaining = BigUint::zero();
            }
        }
        if !remaining.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "cannot drop {count} letters from a word of length {}",
                self.len()
            )));
        }
        Ok(out)
    }

    /// Letterwise image under `f`; runs are re-canonicalised.
    pub fn map_letters(&self, target: Alphabet, f: impl Fn(u8) -> u8) -> Result<RleWord> {
        RleWord::from_runs(
            target,
            self.runs.iter().map(|r| (f(r.letter), r.exponent.clone())),
        )
    }
}

impl fmt::Display for RleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}^{}", r.letter, r.exponent)?;
        }
        Ok(())
    }
}

/// Exact `binom(w, v)` for `|v| <= 2`, computed run by run.
pub fn rle_binom(w: &RleWord, v: &[u8]) -> Result<BigUint> {
    match v.len() {
        0 => Ok(BigUint::one()),
        1 => {
            let a = v[0];
            Ok(w.runs
                .iter()
                .filter(|r| r.letter == a)
                .map(|r| &r.exponent)
                .sum())
        }
        2 => {
            let (a, b) = (v[0], v[1]);
            let mut seen_a = BigUint::zero();
            let mut total = BigUint::zero();
            for r in &w.runs {
                if r.letter == b {
                    if a == b {
                        // C(q, 2) pairs inside the run plus pairs with earlier copies.
                        let q = &r.exponent;
                        if *q > BigUint::one() {
                            total += q * (q - 1u32) / 2u32;
                        }
                    }
                    total += &seen_a * &r.exponent;
                }
                if r.letter == a {
                    seen_a += &r.exponent;
                }
            }
            Ok(total)
        }
        order => Err(Error::UnsupportedOrder { order, max: 2 }),
    }
}
