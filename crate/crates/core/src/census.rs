//! Exhaustive class census over `Σ^n`: class counts, lexicographically
//! least representatives, singletons, Parikh-fibred counts and the finite
//! ingredients of the polynomial growth bounds.

use std::collections::{BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::enumerate::{Budget, WordEnumerator};
use crate::error::{Error, Result};
use crate::word::{binom_letters, Alphabet, ParikhVector, Word};

/// One `~_k` class of `Σ^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    pub signature: Vec<u64>,
    pub representative: Word,
    pub size: u64,
}

#[derive(Debug, Clone)]
pub struct ClassCensus {
    pub alphabet: Alphabet,
    pub k: usize,
    pub n: usize,
    pub words_enumerated: u64,
    /// Sorted by representative.
    pub classes: Vec<ClassRecord>,
}

impl ClassCensus {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn least_representatives(&self) -> BTreeSet<Word> {
        self.classes
            .iter()
            .map(|c| c.representative.clone())
            .collect()
    }

    pub fn singletons(&self) -> BTreeSet<Word> {
        self.classes
            .iter()
            .filter(|c| c.size == 1)
            .map(|c| c.representative.clone())
            .collect()
    }
}

type ShardMap = HashMap<Vec<u64>, (Vec<u8>, u64)>;

fn merge(mut into: ShardMap, from: ShardMap) -> ShardMap {
    for (sig, (rep, size)) in from {
        into.entry(sig)
            .and_modify(|e| {
                if rep < e.0 {
                    e.0 = rep.clone();
                }
                e.1 += size;
            })
            .or_insert((rep, size));
    }
    into
}

fn collect_classes(enumerator: &WordEnumerator) -> Result<ShardMap> {
    let shards = enumerator.shards(4 * rayon::current_num_threads().max(1));
    let maps: Vec<ShardMap> = shards
        .par_iter()
        .map(|prefix| {
            let mut map: ShardMap = HashMap::new();
            enumerator.run_with_prefix(prefix, |w, sig| {
                // Lexicographic order: the first word seen per signature is least.
                map.entry(sig.to_vec())
                    .and_modify(|e| e.1 += 1)
                    .or_insert_with(|| (w.to_vec(), 1));
                true
            })?;
            Ok(map)
        })
        .collect::<Result<_>>()?;
    Ok(maps.into_iter().fold(HashMap::new(), merge))
}

pub fn census(alphabet: Alphabet, n: usize, k: usize, budget: Budget) -> Result<ClassCensus> {
    let words = budget.check_words(alphabet, n)?;
    let map = collect_classes(&WordEnumerator::all(alphabet, n, k))?;
    let mut classes: Vec<ClassRecord> = map
        .into_iter()
        .map(|(signature, (rep, size))| ClassRecord {
            signature,
            representative: Word::from_raw(alphabet, rep),
            size,
        })
        .collect();
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(ClassCensus {
        alphabet,
        k,
        n,
        words_enumerated: words,
        classes,
    })
}

/// Number of `~_k` classes of words of length `n`.
pub fn count_classes(alphabet: Alphabet, n: usize, k: usize, budget: Budget) -> Result<usize> {
    Ok(census(alphabet, n, k, budget)?.class_count())
}

pub fn ll_language(
    alphabet: Alphabet,
    n: usize,
    k: usize,
    budget: Budget,
) -> Result<BTreeSet<Word>> {
    Ok(census(alphabet, n, k, budget)?.least_representatives())
}

pub fn sing_language(
    alphabet: Alphabet,
    n: usize,
    k: usize,
    budget: Budget,
) -> Result<BTreeSet<Word>> {
    Ok(census(alphabet, n, k, budget)?.singletons())
}

/// Number of `~_k` classes among the words with Parikh vector `x`.
pub fn f_parikh_k(x: &ParikhVector, k: usize, budget: Budget) -> Result<usize> {
    budget.check(&x.class_size())?;
    Ok(collect_classes(&WordEnumerator::abelian(x, k))?.len())
}

/// Number of 2-binomial classes with Parikh vector `x`.
pub fn f_parikh(x: &ParikhVector, budget: Budget) -> Result<usize> {
    f_parikh_k(x, 2, budget)
}

/// `{ binom(u, ab) : |u|_a = i, |u|_b = j, u over {a, b} }`.
pub fn coefficient_range(a: u8, b: u8, i: u64, j: u64, budget: Budget) -> Result<BTreeSet<u64>> {
    if a == b || a == 0 || b == 0 {
        return Err(Error::InvalidArgument(format!(
            "coefficient_range needs two distinct letters, got {a} and {b}"
        )));
    }
    let m = a.max(b) as usize;
    let mut counts = vec![0u64; m];
    counts[a as usize - 1] = i;
    counts[b as usize - 1] = j;
    let x = ParikhVector::new(counts)?;
    budget.check(&x.class_size())?;
    let mut values = BTreeSet::new();
    let mut failure = None;
    WordEnumerator::abelian(&x, 1).run(|w, _| match binom_letters(w, &[a, b]) {
        Ok(v) => {
            values.insert(v);
            true
        }
        Err(e) => {
            failure = Some(e);
            false
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(values),
    }
}

/// Both sides of the finite inequalities bracketing `f(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthReport {
    pub parikh: Vec<u64>,
    pub f: u64,
    /// `prod_{a<b} (floor(x_a/(m-1)) * floor(x_b/(m-1)) + 1)`.
    pub lower: BigUint,
    /// `prod_{a<b} (x_a * x_b + 1)`.
    pub upper: BigUint,
    /// `prod_{a<b} x_a * x_b`, the bound as originally stated; fails at `(2, 2)`.
    pub upper_uncorrected: BigUint,
    pub lower_holds: bool,
    pub upper_holds: bool,
    pub upper_uncorrected_holds: bool,
}

impl GrowthReport {
    pub fn passes(&self) -> bool {
        self.lower_holds && self.upper_holds
    }
}

pub fn growth_lower_bound(x: &ParikhVector) -> BigUint {
    let m = x.counts().len() as u64;
    let c = x.counts();
    let mut prod = BigUint::one();
    if m < 2 {
        return prod;
    }
    for a in 0..c.len() {
        for b in a + 1..c.len() {
            prod *= BigUint::from((c[a] / (m - 1)) * (c[b] / (m - 1)) + 1);
        }
    }
    prod
}

pub fn growth_upper_bound(x: &ParikhVector) -> BigUint {
    let c = x.counts();
    let mut prod = BigUint::one();
    for a in 0..c.len() {
        for b in a + 1..c.len() {
            prod *= BigUint::from(c[a]) * BigUint::from(c[b]) + 1u32;
        }
    }
    prod
}

fn growth_upper_bound_uncorrected(x: &ParikhVector) -> BigUint {
    let c = x.counts();
    let mut prod = BigUint::one();
    for a in 0..c.len() {
        for b in a + 1..c.len() {
            prod *= BigUint::from(c[a]) * BigUint::from(c[b]);
        }
    }
    prod
}

pub fn check_growth_bounds(x: &ParikhVector, budget: Budget) -> Result<GrowthReport> {
    let f = f_parikh(x, budget)? as u64;
    let fb = BigUint::from(f);
    let lower = growth_lower_bound(x);
    let upper = growth_upper_bound(x);
    let upper_uncorrected = growth_upper_bound_uncorrected(x);
    Ok(GrowthReport {
        parikh: x.counts().to_vec(),
        f,
        lower_holds: lower <= fb,
        upper_holds: fb <= upper,
        upper_uncorrected_holds: fb <= upper_uncorrected,
        lower,
        upper,
        upper_uncorrected,
    })
}

/// All Parikh vectors over `alphabet` with coordinate sum `n`, in lexicographic order.
pub fn compositions(alphabet: Alphabet, n: u64) -> Vec<ParikhVector> {
    fn rec(m: usize, n: u64, cur: &mut Vec<u64>, out: &mut Vec<ParikhVector>) {
        if cur.len() + 1 == m {
            cur.push(n);
            out.push(ParikhVector::new(cur.clone()).expect("non-empty"));
            cur.pop();
            return;
        }
        for v in 0..=n {
            cur.push(v);
            rec(m, n - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(alphabet.size(), n, &mut Vec::new(), &mut out);
    out
}

/// `(n^3 + 5n + 6) / 6`, the number of 2-binomial classes of binary words of length `n`.
pub fn cake_count(n: u64) -> BigUint {
    let n = BigUint::from(n);
    (&n * &n * &n + BigUint::from(5u32) * &n + BigUint::from(6u32)) / BigUint::from(6u32)
}

/// `(n^k + 1)^{k m^k}`, a crude polynomial bound on the number of `~_k` classes.
pub fn polynomial_class_bound(m: usize, n: u64, k: usize) -> BigUint {
    let base = BigUint::from(n).pow(k as u32) + 1u32;
    let exp = k * m.pow(k as u32);
    base.pow(exp as u32)
}

/// Value at `x = values.len()` of the unique polynomial of degree below
/// `values.len()` through the points `(i, values[i])`.
pub fn extrapolate_polynomial(values: &[BigInt]) -> BigInt {
    // Newton forward differences: P(N) = sum_j C(N, j) * Δ^j f(0).
    let n = values.len();
    let mut diffs = values.to_vec();
    let mut leading = Vec::with_capacity(n);
    for _ in 0..n {
        leading.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut total = BigInt::zero();
    let mut choose = BigInt::one();
    for (j, d) in leading.iter().enumerate() {
        total += &choose * d;
        choose = choose * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    total
}
