//! Equispaced-set machinery and machine checks of the λ(2), λ(3) case
//! analyses and the λ(4) classifier.
//!
//! The recurring argument: pick an equispaced set `S` on which one cosine
//! is pinned (e.g. `cos cθ = −1` on `{θ : cθ = π}`), then either find a
//! second equispaced set close to `S` or average a weighted expression over
//! `S` to show it is `≤ 0` at some point of `S`.

use std::f64::consts::{FRAC_PI_3, PI, TAU};
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::equispaced::{fold_angle, EquispacedSet};
use crate::error::{Error, Result};
use crate::trigmin::{certified_min, exact_min_chebyshev};
use crate::trigpoly::{rat, TrigPoly};
use crate::tuple::{gcd_all, require_cosine_canonical};

/// Slack for floating comparisons against proof thresholds.
pub const SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseLabel {
    /// The minimum was computed outright.
    Direct,
    /// Witness from two nearby equispaced sets (λ(2), `b ≥ 3`).
    Paired,
    M0,
    M1,
    M2,
    M3,
}

/// A verified inequality `value ≤ threshold` at `witness`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub case_label: CaseLabel,
    /// Set for the finitely many tuples the generic argument does not cover.
    pub exceptional: bool,
    pub witness: f64,
    pub value: f64,
    pub threshold: f64,
}

impl WitnessReport {
    fn checked(
        case_label: CaseLabel,
        exceptional: bool,
        witness: f64,
        value: f64,
        threshold: f64,
    ) -> Result<Self> {
        if value.is_nan() || value > threshold + SLACK {
            return Err(Error::Internal(format!(
                "{case_label:?} witness value {value} exceeds threshold {threshold}"
            )));
        }
        Ok(Self { case_label, exceptional, witness: fold_angle(witness), value, threshold })
    }
}

/// A nearest pair between two equispaced sets.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquispacedPair {
    pub theta1: f64,
    pub theta2: f64,
    /// Circular distance between the two points.
    pub dist: f64,
}

/// `(g, x, y)` with `a·x + b·y = g = gcd(a, b)`.
fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a.rem_euclid(b));
        (g, y, x - (a / b) * y)
    }
}

fn circular_distance(x: f64, y: f64) -> f64 {
    let d = (x - y).rem_euclid(TAU);
    d.min(TAU - d)
}

/// Points `θ₁ ∈ S₁`, `θ₂ ∈ S₂` with `|θ₁ − θ₂| ≤ πg/(m₁m₂)`, `g = gcd(m₁, m₂)`.
///
/// Rounds `m₁m₂(ξ₁ − ξ₂)/2π` to a multiple `ag` of `g`, writes
/// `ag = k·m₁ − ℓ·m₂` by Bézout and takes `θ₁ = ξ₁ + 2πℓ/m₁`,
/// `θ₂ = ξ₂ + 2πk/m₂`.
pub fn nearest_equispaced_pair(s1: &EquispacedSet, s2: &EquispacedSet) -> EquispacedPair {
    let (m1, m2) = (s1.order() as i128, s2.order() as i128);
    let (g, x, y) = extended_gcd(m1, m2);
    let scaled = (m1 * m2) as f64 * (s1.offset() - s2.offset()) / TAU;
    let a = (scaled / g as f64).round() as i128;
    // a·g = (a·x)·m₁ + (a·y)·m₂ = k·m₁ − ℓ·m₂
    let k = (a * x).rem_euclid(m2);
    let l = (-a * y).rem_euclid(m1);
    let theta1 = s1.point(l as u64);
    let theta2 = s2.point(k as u64);
    EquispacedPair {
        theta1: crate::equispaced::normalize_angle(theta1),
        theta2: crate::equispaced::normalize_angle(theta2),
        dist: circular_distance(theta1, theta2),
    }
}

/// The bound `πg/(m₁m₂)` guaranteed by [`nearest_equispaced_pair`].
pub fn pair_distance_bound(m1: u64, m2: u64) -> f64 {
    PI * m1.gcd(&m2) as f64 / (m1 as f64 * m2 as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Center {
    Pi,
    TwoPiThirds,
    FourPiThirds,
}

impl Center {
    pub fn angle(self) -> f64 {
        match self {
            Center::Pi => PI,
            Center::TwoPiThirds => 2.0 * FRAC_PI_3,
            Center::FourPiThirds => 4.0 * FRAC_PI_3,
        }
    }
}

/// Upper bound on `cos θ` when `|θ − center| = ε`: `−1 + ε²/2` around π and
/// `−½ + 3ε/π` around `2π/3` or `4π/3` (the latter for `ε ≤ π/6`).
pub fn cosine_upper_bound(center: Center, eps: f64) -> Result<f64> {
    if !eps.is_finite() || eps < 0.0 {
        return Err(Error::InvalidInput(format!("ε must be a nonnegative number, got {eps}")));
    }
    match center {
        Center::Pi => Ok(-1.0 + 0.5 * eps * eps),
        Center::TwoPiThirds | Center::FourPiThirds => {
            if eps > PI / 6.0 {
                return Err(Error::OutOfDomain(format!("ε = {eps} exceeds π/6")));
            }
            Ok(-0.5 + 3.0 * eps / PI)
        }
    }
}

/// Average of a cosine polynomial over an equispaced set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Average {
    Exact(#[serde(with = "crate::serde_util::big_rational")] BigRational),
    Numeric(f64),
}

impl Average {
    pub fn to_f64(&self) -> f64 {
        match self {
            Average::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Average::Numeric(x) => *x,
        }
    }
}

/// `(1/m) Σ_{θ∈S} p(θ)`: each `cos kθ` averages to `cos kθ₀` when `m | k`
/// and to 0 otherwise.
pub fn equispaced_average(p: &TrigPoly, s: &EquispacedSet) -> Average {
    let m = s.order();
    let surviving: Vec<(u64, &BigRational)> =
        p.terms().iter().filter(|(&k, _)| k % m == 0).map(|(&k, c)| (k, c)).collect();
    if surviving.is_empty() {
        return Average::Exact(p.c0().clone());
    }
    let mut v = p.c0().to_f64().unwrap_or(f64::NAN);
    for (k, c) in surviving {
        v += c.to_f64().unwrap_or(f64::NAN) * (k as f64 * s.offset()).cos();
    }
    Average::Numeric(v)
}

/// The `m`-point sum computed directly, for cross-checking.
pub fn equispaced_average_direct(p: &TrigPoly, s: &EquispacedSet) -> f64 {
    s.points().map(|t| p.eval(t)).sum::<f64>() / s.order() as f64
}

fn cos_sum(freqs: &[u64], theta: f64) -> f64 {
    freqs.iter().map(|&k| (k as f64 * theta).cos()).sum()
}

fn cosine_poly(freqs: &[u64]) -> TrigPoly {
    let terms: Vec<(u64, i64)> = freqs.iter().map(|&k| (k, 1)).collect();
    TrigPoly::from_terms(0, &terms)
}

/// The point of `S` minimizing `cos_sum(freqs, ·)`.
fn best_point(s: &EquispacedSet, freqs: &[u64]) -> (f64, f64) {
    s.points()
        .map(|t| (t, cos_sum(freqs, t)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("equispaced sets are nonempty")
}

/// `K = −L(1,2,3) = (17 + 7√7)/27`, taken from the exact Chebyshev
/// enclosure. Returns the upper end of `−K`'s enclosure.
pub fn minus_k() -> f64 {
    static VALUE: OnceLock<f64> = OnceLock::new();
    *VALUE.get_or_init(|| {
        exact_min_chebyshev(&cosine_poly(&[1, 2, 3])).expect("degree 3 is supported").hi
    })
}

/// For `(a,b,c) ∈ ℕ′₃` with `c ∉ {2a, 2b, a+b}`: the dot product
/// `⟨2 − cos aθ − cos bθ, ½ + cos aθ + cos bθ⟩_S` over `S = {cθ = π}` is 0,
/// so some `θ ∈ S` has `cos aθ + cos bθ + cos cθ ≤ −3/2`.
pub fn m0_certificate(a: u64, b: u64, c: u64) -> Result<WitnessReport> {
    require_cosine_canonical(&[a, b, c])?;
    if c == 2 * a || c == 2 * b || c == a + b {
        return Err(Error::NotM0(vec![a, b, c]));
    }
    let weight = TrigPoly::from_terms(2, &[(a, -1), (b, -1)]);
    let mut target = TrigPoly::from_terms(0, &[(a, 1), (b, 1)]);
    target.add_term(0, rat(1, 2));
    let s = EquispacedSet::solutions(c, PI)?;
    match equispaced_average(&(&weight * &target), &s) {
        Average::Exact(d) if d.is_zero() => {}
        other => {
            return Err(Error::Internal(format!(
                "M0 dot product for ({a},{b},{c}) is {other:?}, expected exactly 0"
            )))
        }
    }
    let (theta, value) = best_point(&s, &[a, b, c]);
    WitnessReport::checked(CaseLabel::M0, false, theta, value, -1.5)
}

/// Verifies `cos aθ + cos bθ ≤ −9/8` for some θ, for coprime `a < b`.
pub fn verify_lambda2(a: u64, b: u64) -> Result<WitnessReport> {
    require_cosine_canonical(&[a, b])?;
    if b <= 2 {
        let m = exact_min_chebyshev(&cosine_poly(&[a, b]))?;
        let value = cos_sum(&[a, b], m.witness).min(m.hi);
        return WitnessReport::checked(CaseLabel::Direct, false, m.witness, value, -1.125);
    }
    let s1 = EquispacedSet::solutions(a, PI)?;
    let s2 = EquispacedSet::solutions(b, PI)?;
    let pair = nearest_equispaced_pair(&s1, &s2);
    let theta = pair.theta2;
    // |aθ − π| ≤ a·dist ≤ π/b
    let threshold = -1.0 + cosine_upper_bound(Center::Pi, PI / b as f64)?;
    let value = cos_sum(&[a, b], theta);
    if value > -1.125 + SLACK {
        return Err(Error::Internal(format!("λ(2) witness for ({a},{b}) is {value}")));
    }
    WitnessReport::checked(CaseLabel::Paired, false, theta, value, threshold)
}

/// Verifies `cos aθ + cos bθ + cos cθ ≤ −K` for some θ, `K = −L(1,2,3)`,
/// following the partition of ℕ′₃ into M0 (generic), M1 (`c = 2a`),
/// M2 (`c = 2b`) and M3 (`c = a + b`).
pub fn verify_lambda3(a: u64, b: u64, c: u64) -> Result<WitnessReport> {
    require_cosine_canonical(&[a, b, c])?;
    let freqs = [a, b, c];
    let minus_k = minus_k();
    let report = if c == 2 * a {
        if a <= 2 {
            // Only (2,3,4): θ = π/3 gives −2.
            WitnessReport::checked(
                CaseLabel::M1,
                true,
                FRAC_PI_3,
                cos_sum(&freqs, FRAC_PI_3),
                minus_k,
            )?
        } else {
            let s1 = EquispacedSet::solutions(a, 2.0 * FRAC_PI_3)?;
            let s2 = EquispacedSet::solutions(b, PI)?;
            let pair = nearest_equispaced_pair(&s1, &s2);
            let g = a.gcd(&b) as f64;
            // cos aθ = cos cθ = −½ and |bθ − π| ≤ πg/a
            let threshold = -1.0 + cosine_upper_bound(Center::Pi, PI * g / a as f64)?;
            WitnessReport::checked(
                CaseLabel::M1,
                false,
                pair.theta1,
                cos_sum(&freqs, pair.theta1),
                threshold,
            )?
        }
    } else if c == 2 * b {
        if b <= 2 {
            // Only (1,2,4): θ = 2π/3 gives −3/2.
            let t = 2.0 * FRAC_PI_3;
            WitnessReport::checked(CaseLabel::M2, true, t, cos_sum(&freqs, t), minus_k)?
        } else {
            let s1 = EquispacedSet::solutions(a, PI)?;
            let s2 = EquispacedSet::solutions(b, 2.0 * FRAC_PI_3)?;
            let pair = nearest_equispaced_pair(&s1, &s2);
            let g = a.gcd(&b) as f64;
            let threshold = -1.0 + cosine_upper_bound(Center::Pi, PI * g / b as f64)?;
            WitnessReport::checked(
                CaseLabel::M2,
                false,
                pair.theta2,
                cos_sum(&freqs, pair.theta2),
                threshold,
            )?
        }
    } else if c == a + b {
        if b <= 32 {
            let m = certified_min(&cosine_poly(&freqs), 1e-9)?;
            let value = cos_sum(&freqs, m.witness);
            WitnessReport::checked(CaseLabel::M3, true, m.witness, value, minus_k)?
        } else {
            let s1 = EquispacedSet::solutions(a, 2.0 * FRAC_PI_3)?;
            let s2 = EquispacedSet::solutions(b, 2.0 * FRAC_PI_3)?;
            let pair = nearest_equispaced_pair(&s1, &s2);
            let eps = PI * a.gcd(&b) as f64 / b as f64;
            // cos bθ = −½; aθ and cθ lie within ε of 2π/3 and 4π/3.
            let threshold = -0.5
                + cosine_upper_bound(Center::TwoPiThirds, eps)?
                + cosine_upper_bound(Center::FourPiThirds, eps)?;
            WitnessReport::checked(
                CaseLabel::M3,
                false,
                pair.theta2,
                cos_sum(&freqs, pair.theta2),
                threshold,
            )?
        }
    } else {
        m0_certificate(a, b, c)?
    };
    if report.value > minus_k + SLACK {
        return Err(Error::Internal(format!(
            "λ(3) witness for ({a},{b},{c}) is {} > −K",
            report.value
        )));
    }
    Ok(report)
}

/// One of the 14 linear conditions on `(a,b,c,d)` that make some entry of
/// `{0,a,b,c,2c} ± {0,a,b,c}` a nonzero multiple of `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lambda4Condition {
    /// 1-based index; membership in `M_index`.
    pub index: u8,
    pub label: String,
}

const LAMBDA4_CONDITIONS: [&str; 14] = [
    "d = 2a",
    "d = 2b",
    "d = 2c",
    "d = b+a",
    "d = c+a",
    "d = c+b",
    "d = 2c-a",
    "d = 2c-b",
    "d = 2c+a",
    "2d = 2c+a",
    "d = 2c+b",
    "2d = 2c+b",
    "d = 3c",
    "2d = 3c",
];

fn lambda4_condition_holds(index: usize, a: u64, b: u64, c: u64, d: u64) -> bool {
    // All in u128 so that 2c + b and friends cannot overflow.
    let (a, b, c, d) = (a as u128, b as u128, c as u128, d as u128);
    match index {
        1 => d == 2 * a,
        2 => d == 2 * b,
        3 => d == 2 * c,
        4 => d == b + a,
        5 => d == c + a,
        6 => d == c + b,
        7 => d + a == 2 * c,
        8 => d + b == 2 * c,
        9 => d == 2 * c + a,
        10 => 2 * d == 2 * c + a,
        11 => d == 2 * c + b,
        12 => 2 * d == 2 * c + b,
        13 => d == 3 * c,
        14 => 2 * d == 3 * c,
        _ => unreachable!("conditions are numbered 1 to 14"),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lambda4Classification {
    pub tuple: [u64; 4],
    pub satisfied: Vec<Lambda4Condition>,
    /// `"M1"` … `"M14"`, one per satisfied condition.
    pub class_sets: Vec<String>,
    pub m0_witness: Option<WitnessReport>,
}

/// Evaluates the 14 conditions for `(a,b,c,d) ∈ ℕ′₄`. When none holds, the
/// weight `w = 5 − cos aθ − cos bθ − 4cos cθ + cos 2cθ` has dot product 0
/// with `3/5 + cos aθ + cos bθ + cos cθ` over `S = {dθ = π}`, and a point of
/// `S` with total `≤ −8/5` is attached.
pub fn classify_lambda4(a: u64, b: u64, c: u64, d: u64) -> Result<Lambda4Classification> {
    require_cosine_canonical(&[a, b, c, d])?;
    let satisfied: Vec<Lambda4Condition> = (1..=14)
        .filter(|&i| lambda4_condition_holds(i, a, b, c, d))
        .map(|i| Lambda4Condition { index: i as u8, label: LAMBDA4_CONDITIONS[i - 1].to_string() })
        .collect();
    let class_sets = satisfied.iter().map(|c| format!("M{}", c.index)).collect();
    let m0_witness = if satisfied.is_empty() {
        let weight = TrigPoly::from_terms(5, &[(a, -1), (b, -1), (c, -4), (2 * c, 1)]);
        let mut target = TrigPoly::from_terms(0, &[(a, 1), (b, 1), (c, 1)]);
        target.add_term(0, rat(3, 5));
        let s = EquispacedSet::solutions(d, PI)?;
        let product = weight.try_mul(&target)?;
        match equispaced_average(&product, &s) {
            Average::Exact(v) if v <= BigRational::zero() => {}
            other => {
                return Err(Error::Internal(format!(
                    "λ(4) dot product for ({a},{b},{c},{d}) is {other:?}, expected ≤ 0"
                )))
            }
        }
        let (theta, value) = best_point(&s, &[a, b, c, d]);
        Some(WitnessReport::checked(CaseLabel::M0, false, theta, value, -1.6)?)
    } else {
        None
    };
    Ok(Lambda4Classification { tuple: [a, b, c, d], satisfied, class_sets, m0_witness })
}

/// `gcd(a, b, …) == 1`, exposed for enumerations over ℕ′ₙ.
pub fn is_coprime(values: &[u64]) -> bool {
    gcd_all(values) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(offset: f64, order: u64) -> EquispacedSet {
        EquispacedSet::new(offset, order).unwrap()
    }

    fn brute_pair_distance(s1: &EquispacedSet, s2: &EquispacedSet) -> f64 {
        s1.points()
            .flat_map(|x| s2.points().map(move |y| circular_distance(x, y)))
            .fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn pair_through_origin() {
        let p = nearest_equispaced_pair(&set(0.0, 2), &set(0.0, 3));
        assert!(p.dist < 1e-15);
    }

    #[test]
    fn pair_attains_bound() {
        let s1 = EquispacedSet::solutions(2, PI).unwrap();
        let s2 = EquispacedSet::solutions(3, PI).unwrap();
        let p = nearest_equispaced_pair(&s1, &s2);
        assert!((p.dist - PI / 6.0).abs() < 1e-12);
        assert!((brute_pair_distance(&s1, &s2) - PI / 6.0).abs() < 1e-12);
    }

    #[test]
    fn pair_seven_twelve() {
        let s1 = set(1.234, 7);
        let s2 = set(4.321, 12);
        let p = nearest_equispaced_pair(&s1, &s2);
        assert!(p.dist <= PI / 84.0 + 1e-12);
        assert!((p.dist - brute_pair_distance(&s1, &s2)).abs() < 1e-12);
    }

    #[test]
    fn cosine_bounds() {
        assert_eq!(cosine_upper_bound(Center::Pi, 0.0).unwrap(), -1.0);
        let b = cosine_upper_bound(Center::Pi, PI / 3.0).unwrap();
        assert!((b - (-1.0 + PI * PI / 18.0)).abs() < 1e-15);
        assert!((b + 0.4517).abs() < 1e-4);
        let eps = PI / 33.0;
        let b = cosine_upper_bound(Center::TwoPiThirds, eps).unwrap();
        assert!((b - (-0.5 + 3.0 / 33.0)).abs() < 1e-15);
        for t in [2.0 * FRAC_PI_3 - eps, 2.0 * FRAC_PI_3 + eps] {
            assert!(t.cos() <= b);
        }
        assert!(matches!(
            cosine_upper_bound(Center::FourPiThirds, 0.6),
            Err(Error::OutOfDomain(_))
        ));
        assert!(cosine_upper_bound(Center::Pi, -0.1).is_err());
    }

    #[test]
    fn averages() {
        let s = set(0.3, 5);
        assert_eq!(equispaced_average(&TrigPoly::from_int(1), &s), Average::Exact(rat(1, 1)));
        let ck = TrigPoly::cos1(3);
        assert_eq!(equispaced_average(&(&ck * &ck), &s), Average::Exact(rat(1, 2)));
        assert_eq!(equispaced_average(&ck, &s), Average::Exact(rat(0, 1)));
        let surviving = TrigPoly::cos1(10);
        let avg = equispaced_average(&surviving, &s).to_f64();
        assert!((avg - equispaced_average_direct(&surviving, &s)).abs() < 1e-12);
    }

    #[test]
    fn m0_examples() {
        let r = m0_certificate(1, 2, 5).unwrap();
        assert_eq!(r.case_label, CaseLabel::M0);
        assert!(r.value <= -1.5 + SLACK);
        assert!(((5.0 * r.witness).cos() + 1.0).abs() < 1e-12);
        assert_eq!(m0_certificate(1, 2, 4), Err(Error::NotM0(vec![1, 2, 4])));
        assert!(m0_certificate(2, 3, 7).unwrap().value <= -1.5 + SLACK);
        assert!(matches!(m0_certificate(2, 4, 6), Err(Error::NonCanonicalInput(_))));
    }

    #[test]
    fn lambda2_examples() {
        let r = verify_lambda2(1, 2).unwrap();
        assert_eq!(r.case_label, CaseLabel::Direct);
        assert!((r.value + 1.125).abs() < 1e-12);

        let r = verify_lambda2(2, 3).unwrap();
        assert!((r.witness - FRAC_PI_3).abs() < 1e-12, "{r:?}");
        assert!((r.value + 1.5).abs() < 1e-12);

        let r = verify_lambda2(3, 7).unwrap();
        assert!(r.value <= -2.0 + PI * PI / 18.0);
        assert!(matches!(verify_lambda2(2, 4), Err(Error::NonCanonicalInput(_))));
    }

    #[test]
    fn lambda3_exceptional_cases() {
        let r = verify_lambda3(2, 3, 4).unwrap();
        assert_eq!((r.case_label, r.exceptional), (CaseLabel::M1, true));
        assert!((r.witness - FRAC_PI_3).abs() < 1e-15);
        assert!((r.value + 2.0).abs() < 1e-12);

        let r = verify_lambda3(1, 2, 4).unwrap();
        assert_eq!((r.case_label, r.exceptional), (CaseLabel::M2, true));
        assert!((r.value + 1.5).abs() < 1e-12);

        let r = verify_lambda3(1, 2, 3).unwrap();
        assert_eq!((r.case_label, r.exceptional), (CaseLabel::M3, true));
        let k = (17.0 + 7.0 * 7f64.sqrt()) / 27.0;
        assert!((r.value + k).abs() < 1e-9);
    }

    #[test]
    fn lambda3_generic_cases() {
        assert_eq!(verify_lambda3(3, 4, 6).unwrap().case_label, CaseLabel::M1);
        assert_eq!(verify_lambda3(1, 3, 6).unwrap().case_label, CaseLabel::M2);
        let r = verify_lambda3(1, 33, 34).unwrap();
        assert_eq!((r.case_label, r.exceptional), (CaseLabel::M3, false));
        assert!(r.value <= -1.5 + 6.0 / 33.0 + SLACK);
        assert_eq!(verify_lambda3(1, 2, 5).unwrap().case_label, CaseLabel::M0);
    }

    #[test]
    fn lambda4_examples() {
        let c = classify_lambda4(1, 2, 3, 4).unwrap();
        let idx: Vec<u8> = c.satisfied.iter().map(|s| s.index).collect();
        assert_eq!(idx, vec![2, 5, 8, 12]);
        assert!(c.m0_witness.is_none());

        // d = 2c + a
        let c = classify_lambda4(1, 2, 3, 7).unwrap();
        assert_eq!(c.class_sets, vec!["M9".to_string()]);

        let c = classify_lambda4(1, 2, 3, 10).unwrap();
        assert!(c.satisfied.is_empty());
        assert!(c.m0_witness.unwrap().value <= -1.6 + SLACK);

        let c = classify_lambda4(1, 2, 3, 6).unwrap();
        assert!(c.class_sets.contains(&"M3".to_string()));
        assert!(matches!(classify_lambda4(2, 4, 6, 8), Err(Error::NonCanonicalInput(_))));
    }
}
