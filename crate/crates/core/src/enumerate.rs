//! Lexicographic depth-first enumeration of `Σ^n` or of a single abelian
//! class, carrying the binomial signature of the current prefix.

use std::env;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::word::{Alphabet, ParikhVector, SignatureAccumulator};

/// Environment variable overriding [`Budget::default`].
pub const BUDGET_ENV: &str = "KBINOMIAL_BUDGET";

/// Upper bound on the number of words an enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(20_000_000)
    }
}

impl Budget {
    /// Default budget, overridden by `KBINOMIAL_BUDGET` when set to a positive integer.
    pub fn from_env() -> Self {
        env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&v| v > 0)
            .map(Budget)
            .unwrap_or_default()
    }

    pub fn check(self, required: &BigUint) -> Result<u64> {
        match required.to_u64() {
            Some(r) if r <= self.0 => Ok(r),
            _ => Err(Error::BudgetExceeded {
                required: required.to_string(),
                budget: self.0,
            }),
        }
    }

    pub fn check_words(self, alphabet: Alphabet, n: usize) -> Result<u64> {
        self.check(&BigUint::from(alphabet.size()).pow(n as u32))
    }
}

enum Supply {
    Free,
    Counts(Vec<u64>),
}

/// Visits every word of the chosen set in lexicographic order together with
/// its order-`k` signature. The visitor returns `false` to stop early.
pub struct WordEnumerator {
    alphabet: Alphabet,
    k: usize,
    len: usize,
    supply: Supply,
}

impl WordEnumerator {
    /// All words of length `n`.
    pub fn all(alphabet: Alphabet, n: usize, k: usize) -> Self {
        WordEnumerator {
            alphabet,
            k,
            len: n,
            supply: Supply::Free,
        }
    }

    /// All words with Parikh vector `x`.
    pub fn abelian(x: &ParikhVector, k: usize) -> Self {
        WordEnumerator {
            alphabet: x.alphabet(),
            k,
            len: x.total() as usize,
            supply: Supply::Counts(x.counts().to_vec()),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Runs the enumeration restricted to words starting with `prefix`.
    /// Returns `Ok(false)` if the visitor stopped early.
    pub fn run_with_prefix<F>(&self, prefix: &[u8], mut visit: F) -> Result<bool>
    where
        F: FnMut(&[u8], &[u64]) -> bool,
    {
        if prefix.len() > self.len {
            return Ok(true);
        }
        let mut remaining = match &self.supply {
            Supply::Free => None,
            Supply::Counts(c) => Some(c.clone()),
        };
        let mut accs = Vec::with_capacity(self.len + 1);
        accs.push(SignatureAccumulator::new(self.alphabet, self.k)?);
        let mut word = Vec::with_capacity(self.len);
        for &a in prefix {
            if let Some(r) = remaining.as_mut() {
                let slot = &mut r[a as usize - 1];
                if *slot == 0 {
                    return Ok(true);
                }
                *slot -= 1;
            }
            let mut next = accs.last().unwrap().clone();
            next.push(a)?;
            accs.push(next);
            word.push(a);
        }
        for _ in prefix.len()..self.len {
            accs.push(accs[0].clone());
        }
        let mut state = DfsState {
            m: self.alphabet.size() as u8,
            len: self.len,
            remaining,
            accs,
            word,
        };
        state.dfs(&mut visit)
    }

    pub fn run<F>(&self, visit: F) -> Result<bool>
    where
        F: FnMut(&[u8], &[u64]) -> bool,
    {
        self.run_with_prefix(&[], visit)
    }

    /// Prefixes of a common length that split the work into at least
    /// `min_shards` pieces (or as many as possible), in lexicographic order.
    pub fn shards(&self, min_shards: usize) -> Vec<Vec<u8>> {
        let m = self.alphabet.size();
        let mut depth = 0;
        let mut count = 1usize;
        while count < min_shards && depth < self.len {
            depth += 1;
            count = count.saturating_mul(m);
        }
        let mut out = vec![Vec::new()];
        for _ in 0..depth {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (1..=m as u8).map(move |a| {
                        let mut q = p.clone();
                        q.push(a);
                        q
                    })
                })
                .filter(|p| match &self.supply {
                    Supply::Free => true,
                    Supply::Counts(c) => (1..=m as u8)
                        .all(|a| p.iter().filter(|&&x| x == a).count() as u64 <= c[a as usize - 1]),
                })
                .collect();
        }
        out
    }
}

struct DfsState {
    m: u8,
    len: usize,
    remaining: Option<Vec<u64>>,
    accs: Vec<SignatureAccumulator>,
    word: Vec<u8>,
}

impl DfsState {
    fn dfs<F>(&mut self, visit: &mut F) -> Result<bool>
    where
        F: FnMut(&[u8], &[u64]) -> bool,
    {
        let depth = self.word.len();
        if depth == self.len {
            return Ok(visit(&self.word, self.accs[depth].coefficients()));
        }
        for a in 1..=self.m {
            if let Some(r) = self.remaining.as_mut() {
                if r[a as usize - 1] == 0 {
                    continue;
                }
                r[a as usize - 1] -= 1;
            }
            let (lo, hi) = self.accs.split_at_mut(depth + 1);
            hi[0].copy_from(&lo[depth]);
            hi[0].push(a)?;
            self.word.push(a);
            let keep_going = self.dfs(visit)?;
            self.word.pop();
            if let Some(r) = self.remaining.as_mut() {
                r[a as usize - 1] += 1;
            }
            if !keep_going {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
