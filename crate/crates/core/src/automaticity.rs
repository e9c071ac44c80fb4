//! Lower approximations of automaticity: a Nerode-style congruence computed
//! from the finitely many words of a language up to a cutoff length.
//!
//! For a slice `S = L ∩ Σ^{≤C}` and a depth `t`, two words `u, v` are
//! identified when their left quotients agree on suffixes of length at most
//! `C - t`. Two conventions are supported for which words are classified and
//! whether the empty word counts as a member; see [`NerodeConvention`].

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::census::census;
use crate::enumerate::Budget;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LanguageKind {
    /// Lexicographically least element of every `~_k` class.
    LeastRepresentatives,
    /// Words whose `~_k` class is a singleton.
    Singletons,
}

/// All words of `L` with length at most `cutoff`.
#[derive(Debug, Clone)]
pub struct LanguageSlice {
    pub alphabet: Alphabet,
    pub kind: LanguageKind,
    pub k: usize,
    pub cutoff: usize,
    members: HashSet<Vec<u8>>,
    per_length: Vec<usize>,
}

impl LanguageSlice {
    pub fn contains(&self, w: &[u8]) -> bool {
        w.len() <= self.cutoff && self.members.contains(w)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Number of members of each length `0..=cutoff`.
    pub fn counts_by_length(&self) -> &[usize] {
        &self.per_length
    }

    pub fn words_of_length(&self, n: usize) -> BTreeSet<Word> {
        self.members
            .iter()
            .filter(|w| w.len() == n)
            .map(|w| Word::from_raw(self.alphabet, w.clone()))
            .collect()
    }
}

/// Materialises `L ∩ Σ^{≤C}` through the census.
pub fn build_slice(
    kind: LanguageKind,
    alphabet: Alphabet,
    k: usize,
    cutoff: usize,
    budget: Budget,
) -> Result<LanguageSlice> {
    let mut members = HashSet::new();
    let mut per_length = Vec::with_capacity(cutoff + 1);
    for n in 0..=cutoff {
        let c = census(alphabet, n, k, budget)?;
        let words = match kind {
            LanguageKind::LeastRepresentatives => c.least_representatives(),
            LanguageKind::Singletons => c.singletons(),
        };
        per_length.push(words.len());
        members.extend(words.into_iter().map(Word::into_letters));
    }
    Ok(LanguageSlice {
        alphabet,
        kind,
        k,
        cutoff,
        members,
        per_length,
    })
}

/// Which words are classified at depth `t`, and how the empty word is treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NerodeConvention {
    /// Classify every `u` with `|u| <= t`; the slice is used as given.
    Literal,
    /// Classify every `u` with `|u| < t` against the slice with the empty
    /// word removed. This is the convention under which the published
    /// tables for `LL(~_3, {1,2})`, `C = 15` and `LL(~_2, {1,2,3})`, `C = 9`
    /// are reproduced exactly.
    Published,
}

impl NerodeConvention {
    pub fn describe(self) -> &'static str {
        match self {
            NerodeConvention::Literal => {
                "classified words: |u| <= t; quotients truncated to |x| <= C - t; empty word kept in L"
            }
            NerodeConvention::Published => {
                "classified words: |u| <= t - 1; quotients truncated to |x| <= C - t; empty word excluded from L"
            }
        }
    }

    fn max_domain_len(self, t: usize) -> Option<usize> {
        match self {
            NerodeConvention::Literal => Some(t),
            NerodeConvention::Published => t.checked_sub(1),
        }
    }

    fn excludes_empty(self) -> bool {
        matches!(self, NerodeConvention::Published)
    }
}

/// Lexicographic enumeration of `Σ^{≤max}` in length-then-lexicographic order.
pub fn words_up_to(alphabet: Alphabet, max: usize) -> Vec<Vec<u8>> {
    let m = alphabet.size() as u8;
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|p| {
                (1..=m).map(move |a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// The truncated left quotient `{ x : |x| <= max_suffix, ux ∈ S }` as a
/// sorted word list.
pub fn quotient(
    slice: &LanguageSlice,
    u: &[u8],
    max_suffix: usize,
    convention: NerodeConvention,
) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut buf = u.to_vec();
    collect_quotient(slice, &mut buf, u.len(), max_suffix, convention, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn collect_quotient(
    slice: &LanguageSlice,
    buf: &mut Vec<u8>,
    base: usize,
    remaining: usize,
    convention: NerodeConvention,
    out: &mut Vec<Vec<u8>>,
) {
    if buf.len() > slice.cutoff {
        return;
    }
    let member = slice.contains(buf) && !(buf.is_empty() && convention.excludes_empty());
    if member {
        out.push(buf[base..].to_vec());
    }
    if remaining == 0 {
        return;
    }
    for a in slice.alphabet.letters() {
        buf.push(a);
        collect_quotient(slice, buf, base, remaining - 1, convention, out);
        buf.pop();
    }
}

/// Number of classes of the approximate Nerode congruence at depth `t`.
pub fn approx_nerode_count(
    slice: &LanguageSlice,
    t: usize,
    convention: NerodeConvention,
) -> Result<usize> {
    if t > slice.cutoff {
        return Err(Error::InvalidArgument(format!(
            "depth t = {t} exceeds the cutoff C = {}",
            slice.cutoff
        )));
    }
    let Some(max_len) = convention.max_domain_len(t) else {
        return Ok(0);
    };
    let max_suffix = slice.cutoff - t;
    let mut classes: HashMap<Vec<Vec<u8>>, usize> = HashMap::new();
    for u in words_up_to(slice.alphabet, max_len) {
        let q = quotient(slice, &u, max_suffix, convention);
        *classes.entry(q).or_default() += 1;
    }
    Ok(classes.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerodeRow {
    pub t: usize,
    pub classes: usize,
}

pub fn approx_nerode_table(
    slice: &LanguageSlice,
    depths: impl IntoIterator<Item = usize>,
    convention: NerodeConvention,
) -> Result<Vec<NerodeRow>> {
    depths
        .into_iter()
        .map(|t| {
            Ok(NerodeRow {
                t,
                classes: approx_nerode_count(slice, t, convention)?,
            })
        })
        .collect()
}
