//! Frequency and exponent tuples and their canonical forms.
//!
//! A [`CosineTuple`] `(a₁,…,aₙ)` stands for `cos a₁θ + ⋯ + cos aₙθ`; a
//! [`NewmanTuple`] `(a₁,…,aₙ)` stands for `z^a₁ + ⋯ + z^aₙ`. Canonicalization
//! removes the symmetries that leave the minimum (resp. minimum modulus on
//! the unit circle) unchanged.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest entry accepted in any tuple: every pairwise sum must fit in `u64`.
pub const MAX_ENTRY: u64 = u64::MAX / 2;

fn check_strictly_increasing(values: &[u64], what: &str) -> Result<()> {
    if let Some(w) = values.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(format!(
            "{what} must be strictly increasing, found {} then {}",
            w[0], w[1]
        )));
    }
    if let Some(&last) = values.last() {
        if last > MAX_ENTRY {
            return Err(Error::OutOfRange(format!(
                "{what} entry {last} is too large (pairwise sums overflow 64 bits)"
            )));
        }
    }
    Ok(())
}

pub(crate) fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0u64, |g, &v| g.gcd(&v))
}

/// Strictly increasing positive frequencies `a₁ < ⋯ < aₙ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct CosineTuple(Vec<u64>);

impl CosineTuple {
    pub fn new(freqs: Vec<u64>) -> Result<Self> {
        if freqs.is_empty() {
            return Err(Error::InvalidInput("cosine tuple is empty".into()));
        }
        if freqs[0] == 0 {
            return Err(Error::InvalidInput("frequencies must be positive".into()));
        }
        check_strictly_increasing(&freqs, "frequencies")?;
        Ok(Self(freqs))
    }

    pub fn freqs(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_freq(&self) -> u64 {
        *self.0.last().expect("nonempty")
    }

    /// Membership in ℕ′ₙ: gcd of the frequencies is 1.
    pub fn is_canonical(&self) -> bool {
        gcd_all(&self.0) == 1
    }

    /// Divides every frequency by their gcd.
    pub fn canonicalize(&self) -> CosineTuple {
        let g = gcd_all(&self.0);
        CosineTuple(self.0.iter().map(|&a| a / g).collect())
    }
}

impl TryFrom<Vec<u64>> for CosineTuple {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<CosineTuple> for Vec<u64> {
    fn from(t: CosineTuple) -> Self {
        t.0
    }
}

impl fmt::Display for CosineTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Strictly increasing nonnegative exponents `a₁ < ⋯ < aₙ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct NewmanTuple(Vec<u64>);

impl NewmanTuple {
    pub fn new(exps: Vec<u64>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::InvalidInput("Newman tuple is empty".into()));
        }
        check_strictly_increasing(&exps, "exponents")?;
        Ok(Self(exps))
    }

    pub fn exps(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_exp(&self) -> u64 {
        *self.0.last().expect("nonempty")
    }

    /// Membership in ℕ″ₙ: starts at 0, nonzero exponents coprime, and
    /// `a_{n-1} ≥ aₙ − a₂` when `n ≥ 3`. For `n = 2` the only canonical tuple
    /// is `(0, 1)`.
    pub fn is_canonical(&self) -> bool {
        let e = &self.0;
        if e.len() < 2 || e[0] != 0 || gcd_all(&e[1..]) != 1 {
            return false;
        }
        let n = e.len();
        n == 2 || e[n - 2] >= e[n - 1] - e[1]
    }

    /// Shift to start at 0, divide by the gcd of the nonzero exponents, then
    /// apply the reversal `aⱼ ↦ aₙ − a_{n+1−j}` if `a_{n-1} < aₙ − a₂`.
    pub fn canonicalize(&self) -> Result<NewmanTuple> {
        let e = &self.0;
        if e.len() < 2 {
            return Err(Error::InvalidInput(
                "canonical Newman tuples need at least 2 exponents".into(),
            ));
        }
        let shifted: Vec<u64> = e.iter().map(|&a| a - e[0]).collect();
        let g = gcd_all(&shifted[1..]);
        let mut out: Vec<u64> = shifted.iter().map(|&a| a / g).collect();
        let n = out.len();
        if n >= 3 && out[n - 2] < out[n - 1] - out[1] {
            out = reversed(&out);
        }
        Ok(NewmanTuple(out))
    }

    /// The exponents of `z^{aₙ} f(1/z)` for a tuple starting at 0.
    pub fn reversal(&self) -> NewmanTuple {
        let shifted: Vec<u64> = self.0.iter().map(|&a| a - self.0[0]).collect();
        NewmanTuple(reversed(&shifted))
    }
}

fn reversed(e: &[u64]) -> Vec<u64> {
    let top = *e.last().expect("nonempty");
    e.iter().rev().map(|&a| top - a).collect()
}

impl TryFrom<Vec<u64>> for NewmanTuple {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<NewmanTuple> for Vec<u64> {
    fn from(t: NewmanTuple) -> Self {
        t.0
    }
}

impl fmt::Display for NewmanTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[u64]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// Checks membership of `(a₁,…,aₙ)` in ℕ′ₙ, returning a descriptive error.
pub(crate) fn require_cosine_canonical(values: &[u64]) -> Result<CosineTuple> {
    let t =
        CosineTuple::new(values.to_vec()).map_err(|e| Error::NonCanonicalInput(e.to_string()))?;
    if !t.is_canonical() {
        return Err(Error::NonCanonicalInput(format!(
            "gcd of {t} is {}, expected 1",
            gcd_all(t.freqs())
        )));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(v: &[u64]) -> CosineTuple {
        CosineTuple::new(v.to_vec()).unwrap()
    }

    fn nt(v: &[u64]) -> NewmanTuple {
        NewmanTuple::new(v.to_vec()).unwrap()
    }

    #[test]
    fn cosine_canonical_forms() {
        assert_eq!(ct(&[2, 4, 6]).canonicalize(), ct(&[1, 2, 3]));
        assert_eq!(ct(&[1, 2]).canonicalize(), ct(&[1, 2]));
        assert_eq!(ct(&[3, 6, 15]).canonicalize(), ct(&[1, 2, 5]));
    }

    #[test]
    fn cosine_rejects_bad_tuples() {
        assert!(matches!(CosineTuple::new(vec![]), Err(Error::InvalidInput(_))));
        assert!(matches!(CosineTuple::new(vec![0, 1]), Err(Error::InvalidInput(_))));
        assert!(matches!(CosineTuple::new(vec![2, 2]), Err(Error::InvalidInput(_))));
        assert!(matches!(CosineTuple::new(vec![1, u64::MAX]), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn newman_canonical_forms() {
        assert_eq!(nt(&[0, 1, 3]).canonicalize().unwrap(), nt(&[0, 2, 3]));
        assert_eq!(nt(&[2, 4, 8]).canonicalize().unwrap(), nt(&[0, 2, 3]));
        assert_eq!(nt(&[0, 1, 2, 6, 9]).canonicalize().unwrap(), nt(&[0, 3, 7, 8, 9]));
        assert_eq!(nt(&[3, 7]).canonicalize().unwrap(), nt(&[0, 1]));
        assert!(matches!(nt(&[4]).canonicalize(), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn canonical_newman_is_fixed_point() {
        for t in [nt(&[0, 2, 3]), nt(&[0, 3, 7, 8, 9]), nt(&[0, 1])] {
            assert!(t.is_canonical());
            assert_eq!(t.canonicalize().unwrap(), t);
        }
        assert!(!nt(&[0, 1, 3]).is_canonical());
    }

    #[test]
    fn serde_validates() {
        let t: CosineTuple = serde_json::from_str("[1,2,3]").unwrap();
        assert_eq!(t, ct(&[1, 2, 3]));
        assert!(serde_json::from_str::<CosineTuple>("[3,2]").is_err());
    }
}
