//! Explicit constructions: cosine sums built from Sidon sets, whose minimum
//! is at least `−√(2n) − ½`, and products of Newman polynomials whose
//! minimum modulus is at least the product of the factors' minimum moduli.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trigmin::{certified_min, CertifiedMinimum};
use crate::trigpoly::TrigPoly;
use crate::tuple::{CosineTuple, NewmanTuple};

/// Strictly increasing nonnegative integers with pairwise distinct
/// positive differences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SidonSet(Vec<u64>);

impl SidonSet {
    pub fn new(elems: Vec<u64>) -> Result<Self> {
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput("Sidon set must be strictly increasing".into()));
        }
        let mut seen = BTreeSet::new();
        for (i, &x) in elems.iter().enumerate() {
            for &y in &elems[i + 1..] {
                if !seen.insert(y - x) {
                    return Err(Error::InvalidInput(format!("difference {} occurs twice", y - x)));
                }
            }
        }
        Ok(Self(elems))
    }

    pub fn elems(&self) -> &[u64] {
        &self.0
    }

    /// All `C(k, 2)` positive differences, ascending.
    pub fn differences(&self) -> Vec<u64> {
        let mut d: Vec<u64> = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(i, &x)| self.0[i + 1..].iter().map(move |&y| y - x))
            .collect();
        d.sort_unstable();
        d
    }
}

/// Source of Sidon sets of a requested size.
pub trait SidonGenerator {
    fn generate(&self, k: usize) -> Result<SidonSet>;
}

/// `{1, 2, 4, …, 2^{k−1}}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct PowersOfTwo;

impl SidonGenerator for PowersOfTwo {
    fn generate(&self, k: usize) -> Result<SidonSet> {
        sidon_powers(k)
    }
}

pub fn sidon_powers(k: usize) -> Result<SidonSet> {
    if k == 0 {
        return Err(Error::InvalidInput("Sidon set size must be ≥ 1".into()));
    }
    if k > 62 {
        return Err(Error::OutOfRange(format!("2^{} does not fit the frequency range", k - 1)));
    }
    SidonSet::new((0..k).map(|j| 1u64 << j).collect())
}

/// Smallest `k` with `k² ≥ 2n`, i.e. `⌈√(2n)⌉`.
pub fn ceil_sqrt_2n(n: u64) -> u64 {
    let target = 2 * n as u128;
    let mut k = (target as f64).sqrt() as u128;
    while k * k < target {
        k += 1;
    }
    while k > 0 && (k - 1) * (k - 1) >= target {
        k -= 1;
    }
    k as u64
}

/// The `f64` value of `−√(2n) − ½`.
pub fn chowla_bound(n: u64) -> f64 {
    -(2.0 * n as f64).sqrt() - 0.5
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChowlaConstruction {
    pub tuple: CosineTuple,
    pub sidon: SidonSet,
    pub minimum: CertifiedMinimum,
    pub bound: f64,
}

/// Length-`n` cosine sum from the differences of a Sidon set of size
/// `⌈√(2n)⌉`, trimmed (largest differences dropped) or padded (smallest
/// unused frequencies added) to exactly `n` terms.
pub fn chowla_construction(n: u64, tol: f64) -> Result<ChowlaConstruction> {
    chowla_construction_with(&PowersOfTwo, n, tol)
}

pub fn chowla_construction_with<G: SidonGenerator>(
    generator: &G,
    n: u64,
    tol: f64,
) -> Result<ChowlaConstruction> {
    if n == 0 {
        return Err(Error::InvalidInput("length must be ≥ 1".into()));
    }
    let k = ceil_sqrt_2n(n);
    let sidon = generator.generate(k as usize)?;
    let mut freqs = sidon.differences();
    let target = n as usize;
    if freqs.len() > target {
        freqs.truncate(target);
    } else {
        let present: BTreeSet<u64> = freqs.iter().copied().collect();
        let extra: Vec<u64> =
            (1u64..).filter(|f| !present.contains(f)).take(target - freqs.len()).collect();
        freqs.extend(extra);
        freqs.sort_unstable();
    }
    let tuple = CosineTuple::new(freqs)?;
    let minimum = certified_min(&TrigPoly::from_cosine_tuple(&tuple), tol)?;
    Ok(ChowlaConstruction { tuple, sidon, minimum, bound: chowla_bound(n) })
}

/// Exponents of `f(z^k)·g(z)` with `k = max(g) + 1`, which keeps all
/// `len(f)·len(g)` exponents distinct.
pub fn newman_product(f: &NewmanTuple, g: &NewmanTuple) -> Result<NewmanTuple> {
    let overflow = || Error::OutOfRange("product exponent overflows".into());
    let k = g.max_exp().checked_add(1).ok_or_else(overflow)?;
    let mut exps = Vec::with_capacity(f.len() * g.len());
    for &a in f.exps() {
        let base = a.checked_mul(k).ok_or_else(overflow)?;
        for &b in g.exps() {
            exps.push(base.checked_add(b).ok_or_else(overflow)?);
        }
    }
    exps.sort_unstable();
    if exps.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Internal("product exponents collide".into()));
    }
    NewmanTuple::new(exps)
}

/// The length-9 polynomial `1 + z + z² + z³ + z⁴ + z⁷ + z⁸ + z¹⁰ + z¹²`.
pub fn b9() -> NewmanTuple {
    NewmanTuple::new(vec![0, 1, 2, 3, 4, 7, 8, 10, 12]).expect("valid tuple")
}
