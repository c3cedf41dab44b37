//! Exact cosine polynomials `c₀ + Σ cₖ cos kθ` with rational coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::serde_util;
use crate::tuple::{CosineTuple, NewmanTuple};

/// `c0 + Σ terms[k]·cos kθ`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrigPoly {
    #[serde(with = "serde_util::big_rational")]
    c0: BigRational,
    #[serde(with = "serde_util::big_rational_map")]
    terms: BTreeMap<u64, BigRational>,
}

pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Default for TrigPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl TrigPoly {
    pub fn zero() -> Self {
        Self { c0: BigRational::zero(), terms: BTreeMap::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self { c0: c, terms: BTreeMap::new() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    /// `coeff · cos kθ`; `k = 0` gives a constant.
    pub fn cos(k: u64, coeff: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(k, coeff);
        p
    }

    /// `cos kθ` with unit coefficient.
    pub fn cos1(k: u64) -> Self {
        Self::cos(k, BigRational::from_integer(1.into()))
    }

    /// Builds a polynomial from `(frequency, integer coefficient)` pairs.
    pub fn from_terms(c0: i64, terms: &[(u64, i64)]) -> Self {
        let mut p = Self::from_int(c0);
        for &(k, c) in terms {
            p.add_term(k, BigRational::from_integer(c.into()));
        }
        p
    }

    pub fn from_cosine_tuple(t: &CosineTuple) -> Self {
        let mut p = Self::zero();
        for &k in t.freqs() {
            p.add_term(k, BigRational::from_integer(1.into()));
        }
        p
    }

    pub fn c0(&self) -> &BigRational {
        &self.c0
    }

    pub fn terms(&self) -> &BTreeMap<u64, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, k: u64) -> BigRational {
        if k == 0 {
            return self.c0.clone();
        }
        self.terms.get(&k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn max_freq(&self) -> u64 {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.terms.is_empty()
    }

    /// Adds `coeff · cos kθ`, dropping the entry if it cancels.
    pub fn add_term(&mut self, k: u64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        if k == 0 {
            self.c0 += coeff;
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(BigRational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn scale(&self, s: &BigRational) -> TrigPoly {
        if s.is_zero() {
            return TrigPoly::zero();
        }
        TrigPoly { c0: &self.c0 * s, terms: self.terms.iter().map(|(&k, c)| (k, c * s)).collect() }
    }

    /// Exact product via `cos A·cos B = ½cos(A+B) + ½cos(A−B)`.
    pub fn try_mul(&self, other: &TrigPoly) -> Result<TrigPoly> {
        let half = rat(1, 2);
        let mut out = TrigPoly::constant(&self.c0 * &other.c0);
        for (&k, c) in &other.terms {
            out.add_term(k, &self.c0 * c);
        }
        for (&k, c) in &self.terms {
            out.add_term(k, c * &other.c0);
        }
        for (&k, c) in &self.terms {
            for (&l, d) in &other.terms {
                let prod = c * d * &half;
                let sum = k
                    .checked_add(l)
                    .ok_or_else(|| Error::OutOfRange(format!("frequency {k} + {l} overflows")))?;
                out.add_term(sum, prod.clone());
                out.add_term(k.abs_diff(l), prod);
            }
        }
        Ok(out)
    }

    /// Evaluates at θ in floating point.
    pub fn eval(&self, theta: f64) -> f64 {
        let mut s = self.c0.to_f64().unwrap_or(f64::NAN);
        for (&k, c) in &self.terms {
            s += c.to_f64().unwrap_or(f64::NAN) * (k as f64 * theta).cos();
        }
        s
    }

    /// Σ k·|cₖ|, a bound on |p′(θ)|.
    pub fn lipschitz(&self) -> f64 {
        self.terms.iter().map(|(&k, c)| k as f64 * c.abs().to_f64().unwrap_or(f64::INFINITY)).sum()
    }

    /// The polynomial in `x = cos θ` (ascending coefficients) obtained by
    /// substituting `cos kθ = T_k(cos θ)`.
    pub fn to_chebyshev_power_basis(&self) -> Vec<BigRational> {
        let degree = self.max_freq() as usize;
        let cheb = chebyshev_t(degree);
        let mut out = vec![BigRational::zero(); degree + 1];
        out[0] = self.c0.clone();
        for (&k, c) in &self.terms {
            for (i, t) in cheb[k as usize].iter().enumerate() {
                if !t.is_zero() {
                    out[i] += c * BigRational::from_integer(t.clone());
                }
            }
        }
        out
    }
}

/// Chebyshev polynomials `T_0 … T_degree` as ascending integer coefficient
/// vectors, from `T_{k+1} = 2x·T_k − T_{k−1}`.
pub fn chebyshev_t(degree: usize) -> Vec<Vec<BigInt>> {
    let mut ts: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    if degree >= 1 {
        ts.push(vec![BigInt::from(0), BigInt::from(1)]);
    }
    for k in 2..=degree {
        let mut next = vec![BigInt::from(0); k + 1];
        for (i, c) in ts[k - 1].iter().enumerate() {
            next[i + 1] += c * 2;
        }
        for (i, c) in ts[k - 2].iter().enumerate() {
            next[i] -= c;
        }
        ts.push(next);
    }
    ts
}

impl Add for &TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: &TrigPoly) -> TrigPoly {
        let mut out = self.clone();
        out.c0 += &rhs.c0;
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Neg for &TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        self.scale(&rat(-1, 1))
    }
}

impl Sub for &TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: &TrigPoly) -> TrigPoly {
        self + &(-rhs)
    }
}

/// Panics if a product frequency overflows `u64`; use
/// [`TrigPoly::try_mul`] when that is possible.
impl Mul for &TrigPoly {
    type Output = TrigPoly;
    fn mul(self, rhs: &TrigPoly) -> TrigPoly {
        self.try_mul(rhs).expect("frequency overflow in TrigPoly product")
    }
}

pub fn trigpoly_mul(p: &TrigPoly, q: &TrigPoly) -> Result<TrigPoly> {
    p.try_mul(q)
}

/// `|f(e^{iθ})|²` for `f = Σ z^{aⱼ}`: the constant `n` plus
/// `2cos((aⱼ−aᵢ)θ)` for every pair `i < j`.
pub fn newman_abs_square(t: &NewmanTuple) -> TrigPoly {
    let e = t.exps();
    let mut p = TrigPoly::from_int(e.len() as i64);
    let two = BigRational::from_integer(2.into());
    for (i, &ai) in e.iter().enumerate() {
        for &aj in &e[i + 1..] {
            p.add_term(aj - ai, two.clone());
        }
    }
    p
}
