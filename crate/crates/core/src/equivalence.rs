//! k-binomial equivalence, binary Parikh matrices and the 2-switch relation.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::word::{binom_big, binom_letters, signature, signature_len, Word};

/// `u ~_k v`: equal coefficients for every `x` with `1 <= |x| <= k`.
pub fn equivalent(u: &Word, v: &Word, k: usize) -> bool {
    if u.len() != v.len() || u.parikh() != v.parikh() {
        return false;
    }
    if k <= 1 {
        return true;
    }
    match (signature(u, k), signature(v, k)) {
        (Ok(su), Ok(sv)) => su == sv,
        // Fall back to exact arithmetic, word by word.
        _ => {
            let m = u.alphabet().size().max(v.alphabet().size());
            let total = signature_len(m, k).unwrap_or(usize::MAX);
            let mut x = vec![1u8];
            for _ in 0..total {
                if binom_big(u.letters(), &x) != binom_big(v.letters(), &x) {
                    return false;
                }
                if !next_word(&mut x, m, k) {
                    break;
                }
            }
            true
        }
    }
}

// Advances `x` in length-then-lexicographic order; false after the last word of length k.
fn next_word(x: &mut Vec<u8>, m: usize, k: usize) -> bool {
    for i in (0..x.len()).rev() {
        if (x[i] as usize) < m {
            x[i] += 1;
            for y in x.iter_mut().skip(i + 1) {
                *y = 1;
            }
            return true;
        }
    }
    if x.len() == k {
        return false;
    }
    *x = vec![1; x.len() + 1];
    true
}

/// The binary Parikh matrix, stored by its three non-trivial entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParikhMatrix {
    pub n1: u64,
    pub n2: u64,
    pub c12: u64,
}

impl ParikhMatrix {
    /// The full upper unitriangular 3x3 matrix.
    pub fn to_rows(self) -> [[u64; 3]; 3] {
        [[1, self.n1, self.c12], [0, 1, self.n2], [0, 0, 1]]
    }
}

pub fn parikh_matrix(w: &Word) -> Result<ParikhMatrix> {
    if w.alphabet().size() != 2 {
        return Err(Error::UnsupportedAlphabet(format!(
            "Parikh matrices are defined here for the binary alphabet only, got m = {}",
            w.alphabet().size()
        )));
    }
    Ok(ParikhMatrix {
        n1: w.count(1),
        n2: w.count(2),
        c12: binom_letters(w.letters(), &[1, 2])?,
    })
}

/// All `v` with `w = x ab y ba z` and `v = x ba y ab z` for letters `a != b`.
/// Both orientations are covered because the scan ranges over ordered pairs.
pub fn switch_neighbors(w: &Word) -> BTreeSet<Word> {
    let s = w.letters();
    let mut out = BTreeSet::new();
    if s.len() < 4 {
        return out;
    }
    for i in 0..s.len() - 3 {
        let (a, b) = (s[i], s[i + 1]);
        if a == b {
            continue;
        }
        for j in i + 2..s.len() - 1 {
            if s[j] == b && s[j + 1] == a {
                let mut v = s.to_vec();
                v.swap(i, i + 1);
                v.swap(j, j + 1);
                out.insert(Word::from_raw(w.alphabet(), v));
            }
        }
    }
    out
}

/// The class of `w` under the reflexive-transitive closure of the switch relation.
pub fn switch_class(w: &Word) -> BTreeSet<Word> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(cur) = queue.pop_front() {
        for next in switch_neighbors(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}
