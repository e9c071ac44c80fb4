//! A family of 2-binomial singletons over `{1, 2, 3}`.
//!
//! A growth sequence `(s_n)` must satisfy, for every `n` (empty sums are 0):
//!
//! * D1: `sqrt(s_n / 2)` is a natural number;
//! * D2: `s_n > (sqrt(s_n / 2) + s_1 + ... + s_{n-1})^2`;
//! * D3: `sqrt(s_n / 2) > (s_1 + ... + s_{n-1}) * (s_1 + ... + s_{n-3})`.
//!
//! Given such a sequence, `rho(p, n) = 1^p 2^{s_{n-1}} 3^{s_{n-2}} 1^{s_{n-3}} ... a^{s_1}`
//! with `a ≡ n (mod 3)`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, Ordering};

use crate::enumerate::{Budget, WordEnumerator};
use crate::error::{Error, Result};
use crate::word::{binom_letters, Alphabet, ParikhVector, RleWord, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthSequence(pub Vec<BigUint>);

impl GrowthSequence {
    pub fn terms(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `s_n` with 1-based `n`.
    pub fn term(&self, n: usize) -> Option<&BigUint> {
        n.checked_sub(1).and_then(|i| self.0.get(i))
    }

    // s_1 + ... + s_n, zero for n <= 0.
    fn partial_sum(&self, n: isize) -> BigUint {
        if n <= 0 {
            return BigUint::zero();
        }
        self.0.iter().take(n as usize).sum()
    }
}

/// The sequence `s_n = 2 * 8^{8^n}`, first `count` terms.
pub fn power_tower_sequence(count: usize) -> GrowthSequence {
    let eight = BigUint::from(8u32);
    GrowthSequence(
        (1..=count as u32)
            .map(|n| BigUint::from(2u32) * eight.pow(8u32.pow(n)))
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermCheck {
    pub n: usize,
    pub d1: bool,
    pub d2: bool,
    pub d3: bool,
}

impl TermCheck {
    pub fn passes(&self) -> bool {
        self.d1 && self.d2 && self.d3
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceReport {
    pub terms: Vec<TermCheck>,
}

impl SequenceReport {
    pub fn passes(&self) -> bool {
        self.terms.iter().all(TermCheck::passes)
    }
}

fn exact_half_root(s: &BigUint) -> Option<BigUint> {
    if (s % 2u32) != BigUint::zero() {
        return None;
    }
    let half = s / 2u32;
    let r = half.sqrt();
    (&r * &r == half).then_some(r)
}

pub fn validate_sequence(s: &GrowthSequence) -> SequenceReport {
    let mut terms = Vec::with_capacity(s.len());
    for (i, term) in s.0.iter().enumerate() {
        let n = i + 1;
        let root = exact_half_root(term);
        let prev = s.partial_sum(n as isize - 1);
        let prev3 = s.partial_sum(n as isize - 3);
        let (d2, d3) = match &root {
            Some(r) => {
                let t = r + &prev;
                (*term > &t * &t, *r > &prev * &prev3)
            }
            None => (false, false),
        };
        terms.push(TermCheck {
            n,
            d1: root.is_some() && !term.is_zero(),
            d2,
            d3,
        });
    }
    SequenceReport { terms }
}

/// Greedy least sequence: each `s_n = 2t^2` with the smallest positive `t`
/// meeting D2 and D3 given the earlier terms.
pub fn minimal_sequence(count: usize) -> GrowthSequence {
    let mut seq = GrowthSequence(Vec::with_capacity(count));
    for n in 1..=count {
        let prev = seq.partial_sum(n as isize - 1);
        let prev3 = seq.partial_sum(n as isize - 3);
        // D2 reads t^2 - 2·S·t - S^2 > 0, i.e. t > S(1 + √2). For S > 0 the
        // root is irrational, so the least such t is floor(S + √(2S²)) + 1.
        let d2_min = if prev.is_zero() {
            BigUint::one()
        } else {
            &prev + (BigUint::from(2u32) * &prev * &prev).sqrt() + 1u32
        };
        let d3_min = &prev * &prev3 + 1u32;
        let t = d2_min.max(d3_min);
        seq.0.push(BigUint::from(2u32) * &t * &t);
    }
    seq
}

/// `rho(p, n)` as a run-length word over `{1, 2, 3}`.
pub fn rho(p: &BigUint, n: usize, s: &GrowthSequence) -> Result<RleWord> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("rho needs n >= 2, got {n}")));
    }
    if p.is_zero() {
        return Err(Error::InvalidArgument("rho needs p >= 1".into()));
    }
    if s.len() < n - 1 {
        return Err(Error::InsufficientTerms {
            available: s.len(),
            required: n - 1,
        });
    }
    let alphabet = Alphabet::new(3)?;
    let mut runs = vec![(1u8, p.clone())];
    for i in 1..n {
        runs.push(((i % 3) as u8 + 1, s.0[n - 1 - i].clone()));
    }
    RleWord::from_runs(alphabet, runs)
}

/// Maximal-run decomposition of a non-empty word.
pub fn letter_factorization(w: &Word) -> Result<RleWord> {
    if w.is_empty() {
        return Err(Error::EmptyWord(
            "the letter factorization is defined for non-empty words",
        ));
    }
    Ok(RleWord::from_word(w))
}

/// Number of blocks of a non-empty word.
pub fn nb(w: &Word) -> Result<usize> {
    Ok(letter_factorization(w)?.block_count())
}

/// The cyclic letter permutation `1 -> 3, 2 -> 1, 3 -> 2`.
pub fn sigma_letter(a: u8) -> u8 {
    match a {
        1 => 3,
        2 => 1,
        3 => 2,
        other => other,
    }
}

fn require_ternary(alphabet: Alphabet) -> Result<()> {
    if alphabet.size() != 3 {
        return Err(Error::UnsupportedAlphabet(format!(
            "the permutation sigma acts on the ternary alphabet, got m = {}",
            alphabet.size()
        )));
    }
    Ok(())
}

pub fn apply_sigma(w: &Word) -> Result<Word> {
    require_ternary(w.alphabet())?;
    w.map_letters(w.alphabet(), sigma_letter)
}

pub fn apply_sigma_rle(w: &RleWord) -> Result<RleWord> {
    require_ternary(w.alphabet())?;
    w.map_letters(w.alphabet(), sigma_letter)
}

/// True iff no other word with the same Parikh vector shares the
/// order-`k` signature of `w`.
pub fn is_singleton(w: &Word, k: usize, budget: Budget) -> Result<bool> {
    let x = w.parikh();
    budget.check(&x.class_size())?;
    let target = crate::word::signature(w, k)?;
    let target = target.coefficients();
    let enumerator = WordEnumerator::abelian(&x, k);
    let found = AtomicBool::new(false);
    enumerator
        .shards(4 * rayon::current_num_threads().max(1))
        .par_iter()
        .try_for_each(|prefix| {
            enumerator
                .run_with_prefix(prefix, |u, sig| {
                    if found.load(Ordering::Relaxed) {
                        return false;
                    }
                    if sig == target && u != w.letters() {
                        found.store(true, Ordering::Relaxed);
                        return false;
                    }
                    true
                })
                .map(|_| ())
        })?;
    Ok(!found.load(Ordering::Relaxed))
}

/// Outcome of exhaustively checking that no competitor dominates `rho` on
/// the coefficients of 12, 23 and 31 simultaneously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop54Report {
    pub competitors: u64,
    pub counterexample: Option<String>,
}

impl Prop54Report {
    pub fn passes(&self) -> bool {
        self.counterexample.is_none()
    }
}

pub fn check_prop54(rho_word: &RleWord, budget: Budget) -> Result<Prop54Report> {
    require_ternary(rho_word.alphabet())?;
    let counts: Vec<u64> = rho_word
        .parikh_big()
        .iter()
        .map(|c| c.to_u64().ok_or(Error::Overflow))
        .collect::<Result<_>>()?;
    let x = ParikhVector::new(counts)?;
    let total = budget.check(&x.class_size())?;
    let dense = rho_word.to_word(x.total() as usize)?;
    let pairs: [[u8; 2]; 3] = [[1, 2], [2, 3], [3, 1]];
    let mut reference = [0u64; 3];
    for (r, p) in reference.iter_mut().zip(&pairs) {
        *r = binom_letters(dense.letters(), p)?;
    }
    let enumerator = WordEnumerator::abelian(&x, 2);
    let offending: Vec<Option<Vec<u8>>> = enumerator
        .shards(4 * rayon::current_num_threads().max(1))
        .par_iter()
        .map(|prefix| {
            let mut bad = None;
            // Order-2 signature layout: m singles, then 11, 12, 13, 21, ...
            let idx = |a: u8, b: u8| 3 + (a as usize - 1) * 3 + (b as usize - 1);
            enumerator.run_with_prefix(prefix, |u, sig| {
                if u == dense.letters() {
                    return true;
                }
                let dominated = pairs
                    .iter()
                    .zip(&reference)
                    .all(|(p, &r)| sig[idx(p[0], p[1])] >= r);
                if dominated {
                    bad = Some(u.to_vec());
                    return false;
                }
                true
            })?;
            Ok(bad)
        })
        .collect::<Result<_>>()?;
    let counterexample = offending
        .into_iter()
        .flatten()
        .min()
        .map(|u| Word::new(dense.alphabet(), u).map(|w| w.to_string()))
        .transpose()?;
    Ok(Prop54Report {
        competitors: total - 1,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn seq(v: &[u64]) -> GrowthSequence {
        GrowthSequence(v.iter().map(|&x| big(x)).collect())
    }

    #[test]
    fn validate_examples() {
        assert!(validate_sequence(&power_tower_sequence(2)).passes());
        assert!(validate_sequence(&seq(&[2, 50, 31752])).passes());
        let r = validate_sequence(&seq(&[2, 8]));
        assert!(r.terms[0].passes());
        assert!(r.terms[1].d1);
        assert!(!r.terms[1].d2);
        let r = validate_sequence(&seq(&[3]));
        assert!(!r.terms[0].d1);
    }

    #[test]
    fn minimal_examples() {
        assert_eq!(minimal_sequence(3), seq(&[2, 50, 31752]));
        assert_eq!(minimal_sequence(1), seq(&[2]));
        for n in 1..=6 {
            assert!(validate_sequence(&minimal_sequence(n)).passes());
        }
    }

    #[test]
    fn rho_examples() {
        let s = minimal_sequence(3);
        let r = rho(&big(3), 4, &s).unwrap();
        let runs: Vec<(u8, BigUint)> = r
            .runs()
            .iter()
            .map(|r| (r.letter, r.exponent.clone()))
            .collect();
        assert_eq!(
            runs,
            vec![(1, big(3)), (2, big(31752)), (3, big(50)), (1, big(2))]
        );
        let r = rho(&big(1), 2, &s).unwrap();
        assert_eq!(r.to_string(), "1^1 2^2");
        assert!(matches!(
            rho(&big(1), 5, &s),
            Err(Error::InsufficientTerms {
                available: 3,
                required: 4
            })
        ));
        assert!(rho(&big(0), 3, &s).is_err());
        assert!(rho(&big(1), 1, &s).is_err());
    }

    #[test]
    fn factorization_examples() {
        let a3 = Alphabet::new(3).unwrap();
        let w = Word::parse("112333122132", a3).unwrap();
        let f = letter_factorization(&w).unwrap();
        let q: Vec<u64> = f
            .runs()
            .iter()
            .map(|r| r.exponent.to_u64().unwrap())
            .collect();
        assert_eq!(q, vec![2, 1, 3, 1, 2, 1, 1, 1]);
        assert_eq!(nb(&w).unwrap(), 8);
        assert_eq!(nb(&Word::parse("1111", a3).unwrap()).unwrap(), 1);
        assert_eq!(nb(&Word::parse("121212", a3).unwrap()).unwrap(), 6);
        assert!(matches!(nb(&Word::empty(a3)), Err(Error::EmptyWord(_))));
    }

    #[test]
    fn sigma_examples() {
        let a3 = Alphabet::new(3).unwrap();
        let w = Word::parse("123", a3).unwrap();
        assert_eq!(apply_sigma(&w).unwrap().to_string(), "312");
        let w = Word::parse("3121332", a3).unwrap();
        let back = apply_sigma(&apply_sigma(&apply_sigma(&w).unwrap()).unwrap()).unwrap();
        assert_eq!(back, w);
        let a2 = Alphabet::new(2).unwrap();
        assert!(apply_sigma(&Word::parse("12", a2).unwrap()).is_err());
    }

    #[test]
    fn singleton_examples() {
        let a3 = Alphabet::new(3).unwrap();
        let b = Budget::default();
        assert!(!is_singleton(&Word::parse("1223312", a3).unwrap(), 2, b).unwrap());
        assert!(is_singleton(&Word::parse("11111", a3).unwrap(), 2, b).unwrap());
        assert!(is_singleton(&Word::parse("11111", a3).unwrap(), 3, b).unwrap());
        assert!(is_singleton(&Word::parse("1212", a3).unwrap(), 2, b).unwrap());
        assert!(matches!(
            is_singleton(&Word::parse("123123123123", a3).unwrap(), 2, Budget(100)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn prop54_small() {
        let s = minimal_sequence(2);
        let r = rho(&big(2), 2, &s).unwrap();
        let report = check_prop54(&r, Budget::default()).unwrap();
        assert!(report.passes());
        assert_eq!(report.competitors, 5);
    }

    #[test]
    fn prop54_detects_dominated_word() {
        // 1231 matches or beats 2131 on 12, 23 and 31.
        let a3 = Alphabet::new(3).unwrap();
        let w = RleWord::from_word(&Word::parse("2131", a3).unwrap());
        let report = check_prop54(&w, Budget::default()).unwrap();
        assert!(!report.passes());
    }
}
