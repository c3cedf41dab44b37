//! Bounds on μ(5), the largest minimum modulus of a five-term Newman
//! polynomial.
//!
//! For `(0,a,b,c,d) ∈ ℕ″₅` write `α(z) = 1 + z^a + z^b + z^c + z^d`. Averaging
//! over `{dθ = π}` gives `|α| ≤ √3` somewhere. Sharper, `|α| ≤ 1 + π/m`
//! unless six ratios of the form `gcd(·,·)/d` and `gcd(·,·)/c` all exceed
//! `1/m`, which forces `(r,s,t,u,v,w)` into a finite set of fractions with
//! denominators `< m`. Each surviving `(r,s,u)` determines at most one
//! candidate `(a,b,c,d)`, checked here by certified minimization.

use std::f64::consts::PI;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certlab::nearest_equispaced_pair;
use crate::equispaced::{fold_angle, EquispacedSet};
use crate::error::{Error, Result};
use crate::serde_util;
use crate::trigmin::{certified_min_modulus, newman_modulus, CertifiedMinimum};
use crate::tuple::NewmanTuple;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModulusWitness {
    pub theta: f64,
    pub value: f64,
    pub bound: f64,
}

fn require_canonical_five(t: &NewmanTuple) -> Result<()> {
    if t.len() != 5 || !t.is_canonical() {
        return Err(Error::NonCanonicalInput(format!("{t} is not in ℕ″₅")));
    }
    Ok(())
}

/// Scans `S = {dθ = π}`, where `|α(z)| = |z^a + z^b + z^c|` and the mean of
/// `|z^a + z^b + z^c|²` is 3, and returns the best point.
pub fn sqrt3_witness(t: &NewmanTuple) -> Result<ModulusWitness> {
    require_canonical_five(t)?;
    let d = t.max_exp();
    let s = EquispacedSet::solutions(d, PI)?;
    let (theta, value) = s
        .points()
        .map(|th| (th, newman_modulus(t.exps(), th)))
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .expect("d ≥ 1");
    let bound = 3f64.sqrt();
    if value > bound + 1e-12 {
        return Err(Error::Internal(format!("√3 witness for {t} has modulus {value}")));
    }
    Ok(ModulusWitness { theta: fold_angle(theta), value, bound })
}

/// For distinct `k, ℓ, m` with `ℓ < m`: a θ with
/// `|1 + z^k + z^ℓ + z^m| ≤ πg/k`, `g = gcd(k, m − ℓ)`, taken from the
/// nearest pair of `{kθ = π}` and `{(m − ℓ)θ = π}`.
pub fn three_term_witness(k: u64, l: u64, m: u64) -> Result<ModulusWitness> {
    if k == 0 || l == 0 || m == 0 {
        return Err(Error::InvalidInput("k, ℓ, m must be positive".into()));
    }
    if k == l || k == m || l >= m {
        return Err(Error::InvalidInput(format!(
            "need distinct k, ℓ, m with ℓ < m, got ({k},{l},{m})"
        )));
    }
    let s1 = EquispacedSet::solutions(k, PI)?;
    let s2 = EquispacedSet::solutions(m - l, PI)?;
    let pair = nearest_equispaced_pair(&s1, &s2);
    let theta = pair.theta1;
    let value = newman_modulus(&[0, k, l, m], theta);
    let bound = PI * k.gcd(&(m - l)) as f64 / k as f64;
    if value > bound + 1e-12 {
        return Err(Error::Internal(format!(
            "three-term witness for ({k},{l},{m}) has modulus {value} > {bound}"
        )));
    }
    Ok(ModulusWitness { theta: fold_angle(theta), value, bound })
}

/// One admissible assignment of the six ratios
/// `rd = b−a, sd = c−b, td = c−a, uc = b−a, vc = d−b, wc = d−a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseTuple {
    #[serde(with = "serde_util::rational64")]
    pub r: Rational64,
    #[serde(with = "serde_util::rational64")]
    pub s: Rational64,
    #[serde(with = "serde_util::rational64")]
    pub t: Rational64,
    #[serde(with = "serde_util::rational64")]
    pub u: Rational64,
    #[serde(with = "serde_util::rational64")]
    pub v: Rational64,
    #[serde(with = "serde_util::rational64")]
    pub w: Rational64,
    pub candidate: Option<[u64; 4]>,
}

impl CaseTuple {
    /// Builds the tuple from `(r, s, u, v)`, deriving `t = r + s`,
    /// `w = u + v` and the candidate.
    pub fn from_rsuv(r: Rational64, s: Rational64, u: Rational64, v: Rational64) -> Self {
        let mut ct = CaseTuple { r, s, t: r + s, u, v, w: u + v, candidate: None };
        ct.candidate = solve_case_tuple(&ct);
        ct
    }

    /// Checks every constraint for case parameter `m`.
    pub fn is_admissible(&self, m: i64) -> bool {
        let one = Rational64::one();
        let open = |x: &Rational64| *x > Rational64::zero() && *x < one && *x.denom() < m;
        open(&self.r)
            && open(&self.s)
            && open(&self.t)
            && open(&self.u)
            && open(&self.v)
            && (open(&self.w) || self.w == one)
            && self.r + self.s == self.t
            && self.u + self.v == self.w
            && self.u > self.r
            && self.v > self.s
            && self.r * (one + self.v) == self.u * (one + self.s)
    }
}

/// Reduced fractions in `(0, 1)` with denominator `< m`, ascending.
fn fractions_below(m: i64) -> Vec<Rational64> {
    let mut out: Vec<Rational64> = (2..m)
        .flat_map(|q| (1..q).filter(move |p| p.gcd(&q) == 1).map(move |p| Rational64::new(p, q)))
        .collect();
    out.sort();
    out
}

/// Every `(r,s,t,u,v,w)` with denominators `< m` satisfying
/// `r + s = t`, `u + v = w`, `u > r`, `v > s`, `r(1+v) = u(1+s)`, where
/// `w ∈ (0, 1]` and the others lie in `(0, 1)`. Sorted by `(r, s, u, v)`.
pub fn enumerate_case_fractions(m: u64) -> Result<Vec<CaseTuple>> {
    if m < 2 {
        return Err(Error::InvalidInput("case parameter m must be ≥ 2".into()));
    }
    let m = i64::try_from(m)
        .ok()
        .filter(|&m| m <= 1 << 20)
        .ok_or_else(|| Error::OutOfRange(format!("case parameter {m} is too large")))?;
    let fr = fractions_below(m);
    let one = Rational64::one();
    let member = |x: &Rational64| fr.binary_search(x).is_ok();
    let mut out = Vec::new();
    for &r in &fr {
        for &s in &fr {
            if !member(&(r + s)) {
                continue;
            }
            for &u in fr.iter().filter(|&&u| u > r) {
                // r(1+v) = u(1+s) fixes v.
                let v = u * (one + s) / r - one;
                let w = u + v;
                if v > s && member(&v) && (member(&w) || w == one) {
                    out.push(CaseTuple::from_rsuv(r, s, u, v));
                }
            }
        }
    }
    Ok(out)
}

/// The unique coprime positive-integer multiple of
/// `(r/u − r − s, r/u − s, r/u, 1)`, if it is strictly increasing.
pub fn solve_case_tuple(ct: &CaseTuple) -> Option<[u64; 4]> {
    if ct.u.is_zero() {
        return None;
    }
    let q = ct.r / ct.u;
    let vec = [q - ct.r - ct.s, q - ct.s, q, Rational64::one()];
    if vec.iter().any(|x| *x <= Rational64::zero()) {
        return None;
    }
    let lcm = vec.iter().fold(1i64, |l, x| l.lcm(x.denom()));
    let ints: Vec<i64> = vec.iter().map(|x| x.numer() * (lcm / x.denom())).collect();
    let g = ints.iter().fold(0i64, |g, x| g.gcd(x));
    let out: Vec<u64> = ints.iter().map(|x| (x / g) as u64).collect();
    if out.windows(2).any(|w| w[0] >= w[1]) {
        return None;
    }
    Some([out[0], out[1], out[2], out[3]])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub case: CaseTuple,
    pub minimum: Option<CertifiedMinimum>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProofStatus {
    Proven,
    Failed([u64; 4]),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Mu5Proof {
    pub m: u64,
    pub bound: f64,
    pub cases: Vec<CaseResult>,
    pub status: ProofStatus,
}

impl Mu5Proof {
    /// Distinct candidates in case order.
    pub fn candidates(&self) -> Vec<[u64; 4]> {
        let mut out: Vec<[u64; 4]> = Vec::new();
        for c in self.cases.iter().filter_map(|c| c.case.candidate) {
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }
}

/// Runs the case engine for `μ(5) ≤ 1 + π/m`: every candidate
/// `(0,a,b,c,d)` must have a certified minimum modulus with `hi ≤ 1 + π/m`.
pub fn verify_mu5_bound(m: u64, tol: f64) -> Result<Mu5Proof> {
    let cases = enumerate_case_fractions(m)?;
    let bound = 1.0 + PI / m as f64;
    let results: Vec<CaseResult> = cases
        .into_par_iter()
        .map(|case| {
            let minimum = match case.candidate {
                Some([a, b, c, d]) => {
                    let t = NewmanTuple::new(vec![0, a, b, c, d])?;
                    Some(certified_min_modulus(&t, tol)?)
                }
                None => None,
            };
            Ok(CaseResult { case, minimum })
        })
        .collect::<Result<_>>()?;
    let status = results
        .iter()
        .find_map(|r| match (&r.case.candidate, &r.minimum) {
            (Some(c), Some(min)) if min.hi > bound => Some(ProofStatus::Failed(*c)),
            _ => None,
        })
        .unwrap_or(ProofStatus::Proven);
    Ok(Mu5Proof { m, bound, cases: results, status })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn nt(v: &[u64]) -> NewmanTuple {
        NewmanTuple::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sqrt3_examples() {
        for t in [&[0, 3, 7, 8, 9][..], &[0, 1, 2, 3, 4], &[0, 2, 3, 4, 5]] {
            let w = sqrt3_witness(&nt(t)).unwrap();
            assert!(w.value <= 3f64.sqrt() + 1e-12);
            let d = *t.last().unwrap() as f64;
            assert!(((d * w.theta).cos() + 1.0).abs() < 1e-9);
        }
        assert!(matches!(sqrt3_witness(&nt(&[0, 1, 2, 6, 9])), Err(Error::NonCanonicalInput(_))));
    }

    #[test]
    fn three_term_examples() {
        let w = three_term_witness(4, 1, 3).unwrap();
        assert!((w.bound - PI / 2.0).abs() < 1e-15);
        assert!(w.value <= w.bound + 1e-12);
        let w = three_term_witness(5, 1, 2).unwrap();
        assert!((w.bound - PI / 5.0).abs() < 1e-15);
        let w = three_term_witness(3, 1, 4).unwrap();
        assert!((w.bound - PI).abs() < 1e-15);
        assert!(w.value < 1e-12);
        assert!(three_term_witness(3, 4, 4).is_err());
        assert!(three_term_witness(3, 3, 4).is_err());
    }

    #[test]
    fn enumerate_small_m() {
        assert!(enumerate_case_fractions(2).unwrap().is_empty());
        let five = enumerate_case_fractions(5).unwrap();
        assert_eq!(five.len(), 1);
        assert_eq!(
            (five[0].r, five[0].s, five[0].u, five[0].v),
            (q(1, 4), q(1, 4), q(1, 3), q(2, 3))
        );
        assert_eq!(five[0].candidate, Some([1, 2, 3, 4]));
        assert!(enumerate_case_fractions(1).is_err());
    }

    #[test]
    fn enumerate_six_matches_table() {
        let got: Vec<_> = enumerate_case_fractions(6)
            .unwrap()
            .into_iter()
            .map(|c| (c.r, c.s, c.u, c.v))
            .collect();
        let mut want = vec![
            (q(1, 3), q(1, 3), q(2, 5), q(3, 5)),
            (q(1, 4), q(1, 4), q(1, 3), q(2, 3)),
            (q(1, 5), q(1, 5), q(1, 4), q(1, 2)),
            (q(1, 5), q(2, 5), q(1, 4), q(3, 4)),
            (q(2, 5), q(1, 5), q(1, 2), q(1, 2)),
            (q(3, 5), q(1, 5), q(2, 3), q(1, 3)),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn solve_examples() {
        let solve = |r, s, u, v| CaseTuple::from_rsuv(r, s, u, v).candidate;
        assert_eq!(solve(q(1, 4), q(1, 4), q(1, 3), q(2, 3)), Some([1, 2, 3, 4]));
        assert_eq!(solve(q(1, 3), q(1, 3), q(2, 5), q(3, 5)), Some([1, 3, 5, 6]));
        assert_eq!(solve(q(1, 5), q(2, 5), q(1, 4), q(3, 4)), Some([1, 2, 4, 5]));
        assert_eq!(solve(q(3, 5), q(1, 5), q(2, 3), q(1, 3)), Some([1, 7, 9, 10]));
        // r/u − r − s ≤ 0
        assert_eq!(solve(q(1, 2), q(1, 2), q(1, 2), q(1, 2)), None);
    }

    #[test]
    fn verify_small_m() {
        let p = verify_mu5_bound(2, 1e-9).unwrap();
        assert!(p.cases.is_empty());
        assert_eq!(p.status, ProofStatus::Proven);

        let p = verify_mu5_bound(5, 1e-9).unwrap();
        assert_eq!(p.candidates(), vec![[1, 2, 3, 4]]);
        assert_eq!(p.status, ProofStatus::Proven);
        let min = p.cases[0].minimum.as_ref().unwrap();
        assert!(min.lo == 0.0 && min.hi < 1e-9);
    }
}
