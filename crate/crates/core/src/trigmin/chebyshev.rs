//! Exact minimization through the substitution `x = cos θ`.
//!
//! A cosine polynomial of degree ≤ 64 becomes an ordinary polynomial `P(x)`
//! on `[−1, 1]`. Critical points are the real roots of `P′`, isolated with a
//! Sturm sequence of its square-free part and refined by exact bisection.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{CertifiedMinimum, Method};
use crate::error::{Error, Result};
use crate::trigpoly::TrigPoly;

const MAX_DEGREE: u64 = 64;
/// Bound on `|P(root) − P(left end)|` for each isolated critical point.
const VALUE_SLACK: f64 = 1e-14;

type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn derivative(p: &[BigRational]) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn sign_at(p: &[BigRational], x: &BigRational) -> i8 {
    let v = eval(p, x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn make_monic(p: Poly) -> Poly {
    match p.last().cloned() {
        Some(lead) if !lead.is_zero() => p.into_iter().map(|c| c / &lead).collect(),
        _ => p,
    }
}

/// Remainder of `a` divided by `b` (b nonzero).
fn rem(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b.last().expect("nonzero divisor");
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let q = r.last().expect("nonempty") / lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &q * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Quotient of an exact division `a / b`.
fn div_exact(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b.last().expect("nonzero divisor");
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(db)];
    while r.len() > db && !trim(r.clone()).is_empty() {
        let shift = r.len() - 1 - db;
        let c = r.last().expect("nonempty") / lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        q[shift] = c;
        r.pop();
    }
    trim(q)
}

fn gcd(a: &[BigRational], b: &[BigRational]) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = make_monic(rem(&a, &b));
        a = b;
        b = r;
    }
    make_monic(a)
}

struct Sturm {
    chain: Vec<Poly>,
}

impl Sturm {
    fn new(p: Poly) -> Self {
        let mut chain = vec![p.clone()];
        let mut prev = p.clone();
        let mut cur = derivative(&p);
        while !cur.is_empty() {
            chain.push(cur.clone());
            let r: Poly = rem(&prev, &cur).into_iter().map(|c| -c).collect();
            let r = trim(r);
            // Positive rescaling keeps the sign pattern intact.
            let r = match r.last() {
                Some(lead) => {
                    let s = lead.abs();
                    r.into_iter().map(|c| c / &s).collect()
                }
                None => r,
            };
            prev = cur;
            cur = r;
        }
        Sturm { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.chain {
            let s = sign_at(p, x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// A critical point known to lie in `[left, right]`, or exactly at `left`
/// when `exact` is set.
struct Isolated {
    left: BigRational,
    right: BigRational,
    exact: bool,
}

fn isolate(sturm: &Sturm, a: BigRational, b: BigRational, out: &mut Vec<Isolated>) {
    let mut stack = vec![(a, b)];
    let two = BigRational::from_integer(2.into());
    while let Some((l, r)) = stack.pop() {
        match sturm.count(&l, &r) {
            0 => {}
            1 => out.push(Isolated { left: l, right: r, exact: false }),
            _ => {
                let mid = (&l + &r) / &two;
                stack.push((mid.clone(), r));
                stack.push((l, mid));
            }
        }
    }
}

/// Bisects a single-root interval of the square-free polynomial `p` until
/// its width is at most `width`.
fn refine(p: &[BigRational], iso: &mut Isolated, width: &BigRational) {
    let two = BigRational::from_integer(2.into());
    if sign_at(p, &iso.right) == 0 {
        iso.left = iso.right.clone();
        iso.exact = true;
        return;
    }
    let s_right = sign_at(p, &iso.right);
    while &iso.right - &iso.left > *width {
        let mid = (&iso.left + &iso.right) / &two;
        let s = sign_at(p, &mid);
        if s == 0 {
            iso.left = mid.clone();
            iso.right = mid;
            iso.exact = true;
            return;
        }
        if s == s_right {
            iso.right = mid;
        } else {
            iso.left = mid;
        }
    }
}

fn round_down(x: &BigRational) -> f64 {
    let f = x.to_f64().unwrap_or(f64::NEG_INFINITY);
    match BigRational::from_float(f) {
        Some(exact) if &exact <= x => f,
        _ => f.next_down(),
    }
}

fn round_up(x: &BigRational) -> f64 {
    let f = x.to_f64().unwrap_or(f64::INFINITY);
    match BigRational::from_float(f) {
        Some(exact) if &exact >= x => f,
        _ => f.next_up(),
    }
}

/// Exact global minimum of a cosine polynomial with frequencies ≤ 64,
/// returned as an enclosure of width ≤ 1e−12.
pub fn exact_min_chebyshev(p: &TrigPoly) -> Result<CertifiedMinimum> {
    if let Some(&k) = p.terms().keys().find(|&&k| k > MAX_DEGREE) {
        return Err(Error::UnsupportedDegree(k));
    }
    let poly = trim(p.to_chebyshev_power_basis());
    let lipschitz = p.lipschitz();
    let one = BigRational::one();
    let minus_one = -BigRational::one();

    // Candidates as (lower, upper, x).
    let mut candidates: Vec<(BigRational, BigRational, BigRational)> = Vec::new();
    for x in [minus_one.clone(), one.clone()] {
        let v = eval(&poly, &x);
        candidates.push((v.clone(), v, x));
    }

    let deriv = derivative(&poly);
    if deriv.len() >= 2 {
        let square_free = make_monic(div_exact(&deriv, &gcd(&deriv, &derivative(&deriv))));
        let sturm = Sturm::new(square_free.clone());
        let mut roots = Vec::new();
        isolate(&sturm, minus_one.clone(), one.clone(), &mut roots);

        // |P″| ≤ Σ|coeffs| on [−1, 1]; near a root of P′ this gives
        // |P(x) − P(root)| ≤ B·|x − root|².
        let second = derivative(&deriv);
        let bound: f64 =
            second.iter().map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY)).sum::<f64>().max(1.0);
        let mut width = BigRational::one();
        let quarter_slack = VALUE_SLACK / bound;
        while width.to_f64().unwrap_or(0.0).powi(2) > quarter_slack {
            width /= BigRational::from_integer(2.into());
        }
        let slack = BigRational::from_float(bound).expect("finite") * &width * &width;

        for mut iso in roots {
            refine(&square_free, &mut iso, &width);
            let v = eval(&poly, &iso.left);
            if iso.exact {
                candidates.push((v.clone(), v, iso.left));
            } else {
                let x = (&iso.left + &iso.right) / BigRational::from_integer(2.into());
                candidates.push((&v - &slack, &v + &slack, x));
            }
        }
    }

    let lo =
        candidates.iter().map(|c| &c.0).min().cloned().expect("endpoints are always candidates");
    let (_, hi, x) = candidates
        .iter()
        .min_by(|a, b| a.1.cmp(&b.1))
        .cloned()
        .expect("endpoints are always candidates");

    let c = x.to_f64().unwrap_or(0.0).clamp(-1.0, 1.0);
    let witness = c.acos();
    let hi = round_up(&hi).max(p.eval(witness));
    Ok(CertifiedMinimum {
        lo: round_down(&lo),
        hi,
        witness,
        method: Method::ChebyshevExact,
        grid_points: 0,
        lipschitz,
    })
}
