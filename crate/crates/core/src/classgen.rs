//! Generating 2-binomial classes by adjacent exchanges starting from the
//! sorted word `1^{n_1} 2^{n_2} ... m^{n_m}`.
//!
//! An exchange `ab -> ba` with `a < b` lowers `binom(., ab)` by one and
//! leaves every other `binom(., cd)`, `c < d`, unchanged. Reaching `w` from
//! the sorted word therefore takes exactly `binom(w, ba)` exchanges of each
//! type, and those budgets pin down the class of `w`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::Result;
use crate::word::{binom_letters, Word};

pub fn sorted_representative(w: &Word) -> Word {
    w.parikh().sorted_word()
}

/// One adjacent exchange: the pair `ab` at `position, position + 1` becomes `ba`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExchangeStep {
    pub position: usize,
    pub a: u8,
    pub b: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExchangeTrace {
    pub steps: Vec<ExchangeStep>,
    pub totals: BTreeMap<(u8, u8), u64>,
}

impl ExchangeTrace {
    /// Applies the recorded steps to `start`, checking that each step really
    /// swaps the pair it claims to.
    pub fn replay(&self, start: &Word) -> Option<Word> {
        let mut letters = start.letters().to_vec();
        for s in &self.steps {
            if s.position + 1 >= letters.len()
                || letters[s.position] != s.a
                || letters[s.position + 1] != s.b
            {
                return None;
            }
            letters.swap(s.position, s.position + 1);
        }
        Some(Word::from_raw(start.alphabet(), letters))
    }

    pub fn total(&self, a: u8, b: u8) -> u64 {
        self.totals.get(&(a, b)).copied().unwrap_or(0)
    }
}

/// Rebuilds `w` from its sorted representative: extend the common prefix,
/// then bubble the leftmost needed letter `d` to the front of the
/// disagreeing suffix one adjacent exchange at a time.
pub fn exchange_trace(w: &Word) -> ExchangeTrace {
    let target = w.letters();
    let mut cur = sorted_representative(w).into_letters();
    let mut trace = ExchangeTrace::default();
    let mut p = 0;
    loop {
        while p < cur.len() && cur[p] == target[p] {
            p += 1;
        }
        if p == cur.len() {
            break;
        }
        let d = target[p];
        // cur[p..] is the least word of its abelian class, so every letter
        // before the first d is smaller than d.
        let pos = p + cur[p..]
            .iter()
            .position(|&x| x == d)
            .expect("abelian equivalent suffixes share letters");
        for j in (p..pos).rev() {
            debug_assert!(cur[j] < d);
            trace.steps.push(ExchangeStep {
                position: j,
                a: cur[j],
                b: d,
            });
            *trace.totals.entry((cur[j], d)).or_insert(0) += 1;
            cur.swap(j, j + 1);
        }
    }
    trace
}

/// Edge of the exchange tree: `child` is `parent` with one `ab -> ba` applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeEdge {
    pub parent: String,
    pub child: String,
    pub a: u8,
    pub b: u8,
}

fn pair_index(m: usize, a: u8, b: u8) -> usize {
    // Pairs a < b in lexicographic order: 12, 13, ..., 1m, 23, ...
    let (a, b) = (a as usize - 1, b as usize - 1);
    a * (2 * m - a - 1) / 2 + (b - a - 1)
}

fn budgets(w: &Word) -> Result<Vec<u64>> {
    let m = w.alphabet().size();
    let mut out = vec![0; m * (m - 1) / 2];
    for a in 1..=m as u8 {
        for b in a + 1..=m as u8 {
            out[pair_index(m, a, b)] = binom_letters(w.letters(), &[b, a])?;
        }
    }
    Ok(out)
}

fn search(w: &Word, mut on_edge: impl FnMut(&[u8], &[u8], u8, u8)) -> Result<BTreeSet<Word>> {
    let m = w.alphabet().size();
    let budget = budgets(w)?;
    let depth: u64 = budget.iter().sum();
    let root = sorted_representative(w).into_letters();

    // Spent exchanges are a function of the word, so deduplicating by word
    // within a level is enough.
    let mut level: Vec<(Vec<u8>, Vec<u64>)> = vec![(root, vec![0; budget.len()])];
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    for _ in 0..depth {
        let mut next = Vec::new();
        for (word, spent) in &level {
            for i in 0..word.len().saturating_sub(1) {
                let (a, b) = (word[i], word[i + 1]);
                if a >= b {
                    continue;
                }
                let idx = pair_index(m, a, b);
                if spent[idx] >= budget[idx] {
                    continue;
                }
                let mut child = word.clone();
                child.swap(i, i + 1);
                on_edge(word, &child, a, b);
                if seen.insert(child.clone()) {
                    let mut s = spent.clone();
                    s[idx] += 1;
                    next.push((child, s));
                }
            }
        }
        level = next;
    }
    Ok(level
        .into_iter()
        .filter(|(_, spent)| *spent == budget)
        .map(|(word, _)| Word::from_raw(w.alphabet(), word))
        .collect())
}

/// The full 2-binomial class of `w`.
pub fn class2(w: &Word) -> Result<BTreeSet<Word>> {
    search(w, |_, _, _, _| {})
}

/// Like [`class2`], also returning every explored edge in the order visited.
pub fn class2_with_tree(w: &Word) -> Result<(BTreeSet<Word>, Vec<TreeEdge>)> {
    let alphabet = w.alphabet();
    let mut edges = Vec::new();
    let class = search(w, |p, c, a, b| {
        edges.push(TreeEdge {
            parent: Word::from_raw(alphabet, p.to_vec()).to_string(),
            child: Word::from_raw(alphabet, c.to_vec()).to_string(),
            a,
            b,
        })
    })?;
    Ok((class, edges))
}
