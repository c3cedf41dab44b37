//! Exhaustive searches over canonical tuples, ranked by certified score.
//!
//! Candidates are generated in lexicographic order and scored in parallel
//! batches. A coarse minimization prunes candidates that cannot enter the
//! current top-k; the pruning threshold is frozen at the start of each batch,
//! so the output does not depend on the number of worker threads.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trigmin::{certified_min, certified_min_modulus, CertifiedMinimum};
use crate::trigpoly::TrigPoly;
use crate::tuple::{gcd_all, CosineTuple, NewmanTuple};

const BATCH: usize = 1024;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub tol: f64,
    /// Tolerance of the pruning pass.
    pub coarse_tol: f64,
    pub top: usize,
    /// Maximum number of raw candidates before the search refuses to run.
    pub budget: u64,
    /// Worker threads; 0 picks the number of CPUs.
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { tol: 1e-9, coarse_tol: 1e-3, top: 20, budget: 10_000_000, threads: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub tuple: Vec<u64>,
    /// Minimum of the cosine sum, or minimum modulus of the Newman polynomial.
    pub score: CertifiedMinimum,
    /// 1-based.
    pub rank: usize,
}

/// Lexicographic `k`-subsets of `lo..=hi`.
#[derive(Debug, Clone)]
pub struct Combinations {
    hi: u64,
    current: Option<Vec<u64>>,
}

impl Combinations {
    pub fn new(k: usize, lo: u64, hi: u64) -> Self {
        let fits = hi >= lo && (hi - lo + 1) as u128 >= k as u128;
        let current = fits.then(|| (0..k as u64).map(|i| lo + i).collect());
        Self { hi, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            let limit = self.hi - (k - 1 - i) as u64;
            if next[i] < limit {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// `C(n, k)` saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[derive(Clone)]
struct Entry {
    key: i64,
    tuple: Vec<u64>,
    score: CertifiedMinimum,
}

/// Best scores first; ties on the quantized score go to the smaller tuple.
fn rank_order(a: &Entry, b: &Entry) -> Ordering {
    b.key.cmp(&a.key).then_with(|| a.tuple.cmp(&b.tuple))
}

/// Bounded top-k set. Merging two accumulators is associative and
/// commutative, which keeps parallel reductions deterministic.
struct TopK {
    cap: usize,
    entries: Vec<Entry>,
}

impl TopK {
    fn new(cap: usize) -> Self {
        Self { cap, entries: Vec::new() }
    }

    fn merge(&mut self, more: impl IntoIterator<Item = Entry>) {
        self.entries.extend(more);
        self.entries.sort_by(rank_order);
        self.entries.truncate(self.cap);
    }

    /// Lowest certified lower bound among retained entries once full.
    fn threshold(&self) -> Option<f64> {
        if self.entries.len() < self.cap {
            return None;
        }
        self.entries.iter().map(|e| e.score.lo).reduce(f64::min)
    }
}

fn run_search<I, F>(candidates: I, opts: &SearchOptions, score: F) -> Result<Vec<SearchResult>>
where
    I: Iterator<Item = Vec<u64>>,
    F: Fn(&[u64], f64) -> Result<CertifiedMinimum> + Sync,
{
    if [opts.tol, opts.coarse_tol].iter().any(|t| t.is_nan() || *t <= 0.0) {
        return Err(Error::InvalidInput("search tolerances must be positive".into()));
    }
    if opts.top == 0 {
        return Err(Error::InvalidInput("top must be ≥ 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    let tol = opts.tol;
    let mut top = TopK::new(opts.top);
    let mut candidates = candidates.peekable();
    while candidates.peek().is_some() {
        let batch: Vec<Vec<u64>> = candidates.by_ref().take(BATCH).collect();
        let threshold = top.threshold();
        let scored: Vec<Option<Entry>> = pool.install(|| {
            batch
                .into_par_iter()
                .map(|tuple| -> Result<Option<Entry>> {
                    if let Some(th) = threshold {
                        let coarse = score(&tuple, opts.coarse_tol)?;
                        if coarse.hi + 2.0 * tol < th {
                            return Ok(None);
                        }
                    }
                    let s = score(&tuple, tol)?;
                    let key = (s.midpoint() / tol).round() as i64;
                    Ok(Some(Entry { key, tuple, score: s }))
                })
                .collect::<Result<_>>()
        })?;
        top.merge(scored.into_iter().flatten());
    }
    Ok(top
        .entries
        .into_iter()
        .enumerate()
        .map(|(i, e)| SearchResult { tuple: e.tuple, score: e.score, rank: i + 1 })
        .collect())
}

fn check_budget(count: u128, budget: u64) -> Result<()> {
    if count > budget as u128 {
        return Err(Error::BudgetExceeded { count, budget });
    }
    Ok(())
}

/// Canonical cosine tuples of length `n` with frequencies `≤ max_freq`.
pub fn canonical_cosine_tuples(n: usize, max_freq: u64) -> impl Iterator<Item = Vec<u64>> {
    Combinations::new(n, 1, max_freq).filter(|c| gcd_all(c) == 1)
}

/// Canonical Newman tuples (ℕ″ₙ) of length `n` with exponents `≤ max_exp`.
pub fn canonical_newman_tuples(n: usize, max_exp: u64) -> impl Iterator<Item = Vec<u64>> {
    Combinations::new(n - 1, 1, max_exp).filter_map(|rest| {
        let mut v = Vec::with_capacity(rest.len() + 1);
        v.push(0);
        v.extend(rest);
        let t = NewmanTuple::new(v).ok()?;
        t.is_canonical().then(|| t.into())
    })
}

/// Ranks every `(a₁,…,aₙ) ∈ ℕ′ₙ` with `aₙ ≤ max_freq` by its certified
/// minimum, largest first.
pub fn search_lambda(n: usize, max_freq: u64, opts: &SearchOptions) -> Result<Vec<SearchResult>> {
    if n == 0 || n as u64 > max_freq {
        return Err(Error::InvalidInput(format!(
            "need 1 ≤ n ≤ max_freq, got n = {n}, max_freq = {max_freq}"
        )));
    }
    check_budget(binomial(max_freq, n as u64), opts.budget)?;
    run_search(canonical_cosine_tuples(n, max_freq), opts, |t, tol| {
        let t = CosineTuple::new(t.to_vec())?;
        certified_min(&TrigPoly::from_cosine_tuple(&t), tol)
    })
}

/// Ranks every `(0,a₂,…,aₙ) ∈ ℕ″ₙ` with `aₙ ≤ max_exp` by its certified
/// minimum modulus, largest first.
pub fn search_mu(n: usize, max_exp: u64, opts: &SearchOptions) -> Result<Vec<SearchResult>> {
    if n < 2 || (n - 1) as u64 > max_exp {
        return Err(Error::InvalidInput(format!(
            "need n ≥ 2 and n − 1 ≤ max_exp, got n = {n}, max_exp = {max_exp}"
        )));
    }
    check_budget(binomial(max_exp, n as u64 - 1), opts.budget)?;
    run_search(canonical_newman_tuples(n, max_exp), opts, |t, tol| {
        certified_min_modulus(&NewmanTuple::new(t.to_vec())?, tol)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn opts() -> SearchOptions {
        SearchOptions { tol: 1e-6, ..Default::default() }
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<Vec<u64>> = Combinations::new(2, 1, 4).collect();
        assert_eq!(
            all,
            vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        assert_eq!(Combinations::new(3, 1, 2).count(), 0);
        assert_eq!(Combinations::new(5, 1, 9).count() as u128, binomial(9, 5));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(8, 5), 56);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(200, 100), u128::MAX);
    }

    #[test]
    fn newman_enumeration_matches_canonicalized_raw() {
        for n in 2..=5usize {
            let max = 8;
            let fast: BTreeSet<Vec<u64>> = canonical_newman_tuples(n, max).collect();
            let raw: BTreeSet<Vec<u64>> = Combinations::new(n, 0, max)
                .map(|c| NewmanTuple::new(c).unwrap().canonicalize().unwrap().into())
                .collect();
            assert_eq!(fast, raw, "n = {n}");
        }
    }

    #[test]
    fn cosine_enumeration_matches_canonicalized_raw() {
        for n in 1..=4usize {
            let fast: BTreeSet<Vec<u64>> = canonical_cosine_tuples(n, 9).collect();
            let raw: BTreeSet<Vec<u64>> = Combinations::new(n, 1, 9)
                .map(|c| CosineTuple::new(c).unwrap().canonicalize().into())
                .collect();
            assert_eq!(fast, raw);
        }
    }

    #[test]
    fn lambda_two() {
        let r = search_lambda(2, 8, &opts()).unwrap();
        assert_eq!(r[0].tuple, vec![1, 2]);
        assert!(r[0].score.contains(-1.125, 1e-12));
        assert!(r.windows(2).all(|w| w[0].score.midpoint() >= w[1].score.midpoint() - 1e-6));
    }

    #[test]
    fn mu_two_is_all_zero() {
        let r = search_mu(2, 6, &opts()).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].tuple, vec![0, 1]);
        assert_eq!(r[0].score.lo, 0.0);
    }

    #[test]
    fn budget_is_enforced() {
        let o = SearchOptions { budget: 10, ..opts() };
        assert!(matches!(search_lambda(3, 8, &o), Err(Error::BudgetExceeded { count: 56, .. })));
    }

    #[test]
    fn bad_arguments() {
        assert!(search_lambda(0, 8, &opts()).is_err());
        assert!(search_lambda(9, 8, &opts()).is_err());
        assert!(search_mu(1, 8, &opts()).is_err());
        assert!(search_mu(5, 3, &opts()).is_err());
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let one = search_lambda(3, 10, &SearchOptions { threads: 1, top: 5, ..opts() }).unwrap();
        let four = search_lambda(3, 10, &SearchOptions { threads: 4, top: 5, ..opts() }).unwrap();
        assert_eq!(one, four);
    }
}
