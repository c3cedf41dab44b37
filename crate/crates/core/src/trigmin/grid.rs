use std::f64::consts::PI;

use num_traits::ToPrimitive;

use super::{CertifiedMinimum, Method};
use crate::error::{Error, Result};
use crate::trigpoly::TrigPoly;

/// Largest initial grid accepted before the problem is declared out of range.
const MAX_GRID_POINTS: u64 = 1 << 24;
const MAX_ROUNDS: usize = 200;

/// Floating-point form of a [`TrigPoly`] with the constants needed to bound
/// it on sub-intervals.
#[derive(Debug, Clone)]
pub struct CompiledPoly {
    c0: f64,
    freqs: Vec<f64>,
    coeffs: Vec<f64>,
    max_freq: u64,
    /// Σ k·|cₖ| ≥ sup |p′|
    lipschitz: f64,
    /// Σ k²·|cₖ| ≥ sup |p″|
    curvature: f64,
    value_err: f64,
    deriv_err: f64,
}

impl CompiledPoly {
    pub fn new(p: &TrigPoly) -> Result<Self> {
        let c0 = p.c0().to_f64().unwrap_or(f64::NAN);
        let mut freqs = Vec::with_capacity(p.terms().len());
        let mut coeffs = Vec::with_capacity(p.terms().len());
        for (&k, c) in p.terms() {
            freqs.push(k as f64);
            coeffs.push(c.to_f64().unwrap_or(f64::NAN));
        }
        let lipschitz: f64 = freqs.iter().zip(&coeffs).map(|(k, c)| k * c.abs()).sum();
        let curvature: f64 = freqs.iter().zip(&coeffs).map(|(k, c)| k * k * c.abs()).sum();
        if !c0.is_finite() || !lipschitz.is_finite() || !curvature.is_finite() {
            return Err(Error::OutOfRange(
                "coefficients or Lipschitz constant overflow f64".into(),
            ));
        }
        // Each term carries the argument rounding of k·θ (≤ kπ·ε/2), the
        // libm error of cos/sin and coefficient conversion (≤ 2ε), plus the
        // running-sum error (≤ n·ε per unit of Σ|cₖ|).
        let eps = f64::EPSILON;
        let n = freqs.len() as f64 + 1.0;
        let value_err = eps
            * (c0.abs() * (n + 1.0)
                + freqs
                    .iter()
                    .zip(&coeffs)
                    .map(|(k, c)| c.abs() * (k * PI / 2.0 + 2.0 + n))
                    .sum::<f64>());
        let deriv_err = eps
            * freqs
                .iter()
                .zip(&coeffs)
                .map(|(k, c)| k * c.abs() * (k * PI / 2.0 + 3.0 + n))
                .sum::<f64>();
        Ok(Self {
            c0,
            freqs,
            coeffs,
            max_freq: p.max_freq(),
            lipschitz,
            curvature,
            value_err,
            deriv_err,
        })
    }

    pub fn eval(&self, theta: f64) -> f64 {
        let mut s = self.c0;
        for (k, c) in self.freqs.iter().zip(&self.coeffs) {
            s += c * (k * theta).cos();
        }
        s
    }

    /// Value and derivative at θ.
    pub fn eval_with_derivative(&self, theta: f64) -> (f64, f64) {
        let mut s = self.c0;
        let mut d = 0.0;
        for (k, c) in self.freqs.iter().zip(&self.coeffs) {
            let (sin, cos) = (k * theta).sin_cos();
            s += c * cos;
            d -= c * k * sin;
        }
        (s, d)
    }

    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    /// Bound on the absolute error of [`CompiledPoly::eval`] on `[0, π]`.
    pub fn eval_error(&self) -> f64 {
        self.value_err
    }

    pub fn grid_points(&self) -> Result<u64> {
        let n =
            self.max_freq.checked_mul(64).filter(|&n| n <= MAX_GRID_POINTS).ok_or_else(|| {
                Error::OutOfRange(format!(
                    "max frequency {} needs more than {MAX_GRID_POINTS} grid points",
                    self.max_freq
                ))
            })?;
        Ok(n.max(4096))
    }

    /// Lower bound for the polynomial on `[m − r, m + r]` given the value
    /// `f` and derivative `fp` computed at `m`.
    fn lower_bound(&self, f: f64, fp: f64, r: f64) -> f64 {
        let first = f - self.lipschitz * r;
        let second = f - (fp.abs() + self.deriv_err) * r - 0.5 * self.curvature * r * r;
        first.max(second) - self.value_err
    }
}

/// Encloses `min_{θ∈[0,π]} p(θ)` to width `tol`.
///
/// Starts from `max(4096, 64·max_freq)` cells covering `[0, π]`, keeps the
/// cells whose lower bound is within `tol/2` of the best value seen and
/// bisects them until the global gap closes.
pub fn certified_min(p: &TrigPoly, tol: f64) -> Result<CertifiedMinimum> {
    let compiled = CompiledPoly::new(p)?;
    certified_min_compiled(&compiled, tol)
}

struct Cell {
    center: f64,
    value: f64,
    slope: f64,
}

pub(crate) fn certified_min_compiled(p: &CompiledPoly, tol: f64) -> Result<CertifiedMinimum> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    if p.freqs.is_empty() {
        return Ok(CertifiedMinimum {
            lo: p.c0,
            hi: p.c0,
            witness: 0.0,
            method: Method::GridLipschitz,
            grid_points: 0,
            lipschitz: 0.0,
        });
    }
    if tol <= 4.0 * p.value_err {
        return Err(Error::OutOfRange(format!(
            "tolerance {tol:e} is below the evaluation error bound {:e}",
            p.value_err
        )));
    }
    let n = p.grid_points()?;
    let step = PI / n as f64;

    let mut best = p.eval(0.0);
    let mut witness = 0.0;
    let at_pi = p.eval(PI);
    if at_pi < best {
        best = at_pi;
        witness = PI;
    }

    let mut cells: Vec<Cell> = (0..n)
        .map(|i| {
            let center = (i as f64 + 0.5) * step;
            let (value, slope) = p.eval_with_derivative(center);
            Cell { center, value, slope }
        })
        .collect();
    for c in &cells {
        if c.value < best {
            best = c.value;
            witness = c.center;
        }
    }

    let mut radius = 0.5 * step;
    let mut discarded_lo = f64::INFINITY;
    for _ in 0..MAX_ROUNDS {
        let active_lo = cells
            .iter()
            .map(|c| p.lower_bound(c.value, c.slope, radius))
            .fold(f64::INFINITY, f64::min);
        let lo = active_lo.min(discarded_lo);
        if best - lo <= tol {
            return Ok(CertifiedMinimum {
                lo,
                hi: best,
                witness,
                method: Method::GridLipschitz,
                grid_points: n,
                lipschitz: p.lipschitz,
            });
        }
        let half = 0.5 * radius;
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            let lb = p.lower_bound(c.value, c.slope, radius);
            if lb >= best - 0.5 * tol {
                discarded_lo = discarded_lo.min(lb);
                continue;
            }
            for center in [c.center - half, c.center + half] {
                let (value, slope) = p.eval_with_derivative(center);
                if value < best {
                    best = value;
                    witness = center;
                }
                next.push(Cell { center, value, slope });
            }
        }
        cells = next;
        radius = half;
    }
    Err(Error::Internal(format!("branch and bound did not converge to tolerance {tol:e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cosines(freqs: &[u64]) -> TrigPoly {
        let terms: Vec<(u64, i64)> = freqs.iter().map(|&k| (k, 1)).collect();
        TrigPoly::from_terms(0, &terms)
    }

    #[test]
    fn one_two() {
        let m = certified_min(&cosines(&[1, 2]), 1e-9).unwrap();
        assert!(m.contains(-1.125, 0.0), "{m:?}");
        assert!(m.width() <= 1e-9);
    }

    #[test]
    fn single_cosine_witness_at_pi() {
        let m = certified_min(&cosines(&[1]), 1e-9).unwrap();
        assert_eq!(m.witness, PI);
        assert_eq!(m.hi, -1.0);
        assert!(m.lo <= -1.0 && m.lo >= -1.0 - 1e-9);
    }

    #[test]
    fn one_two_three() {
        let exact = -(17.0 + 7.0 * 7f64.sqrt()) / 27.0;
        let m = certified_min(&cosines(&[1, 2, 3]), 1e-9).unwrap();
        assert!(m.contains(exact, 1e-15), "{m:?}");
    }

    #[test]
    fn constant_polynomial() {
        let m = certified_min(&TrigPoly::from_int(3), 1e-9).unwrap();
        assert_eq!((m.lo, m.hi), (3.0, 3.0));
    }

    #[test]
    fn rejects_bad_tolerance_and_huge_frequency() {
        assert!(matches!(certified_min(&cosines(&[1]), -1.0), Err(Error::InvalidInput(_))));
        assert!(matches!(certified_min(&cosines(&[1]), 1e-20), Err(Error::OutOfRange(_))));
        assert!(matches!(certified_min(&cosines(&[1 << 40]), 1e-3), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn witness_value_is_hi() {
        let p = cosines(&[2, 3, 7, 11]);
        let m = certified_min(&p, 1e-8).unwrap();
        assert!(p.eval(m.witness) <= m.hi + 1e-15);
        assert!((0.0..=PI).contains(&m.witness));
    }
}
