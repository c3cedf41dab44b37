//! Global minimization of cosine polynomials over θ and of Newman
//! polynomial moduli over the unit circle.
//!
//! Every polynomial handled here is even and 2π-periodic, so the search
//! domain is `[0, π]` throughout and witnesses are reported in that range.
//!
//! Two independent routes compute the same minima:
//!
//! * [`certified_min`]: a uniform grid refined by branch and bound, using
//!   first- and second-order Lipschitz bounds to discard sub-intervals.
//! * [`exact_min_chebyshev`]: substitution `cos kθ = T_k(cos θ)` followed by
//!   exact Sturm isolation of the critical points.

mod chebyshev;
mod grid;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trigpoly::{newman_abs_square, TrigPoly};
use crate::tuple::NewmanTuple;

pub use chebyshev::exact_min_chebyshev;
pub use grid::{certified_min, CompiledPoly};

/// Library default tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    GridLipschitz,
    ChebyshevExact,
}

/// Enclosure `[lo, hi]` of a global minimum with a witness angle.
///
/// `lo` is a guaranteed lower bound; `hi` is the value at `witness`, so it
/// is an upper bound up to floating-point evaluation error.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertifiedMinimum {
    pub lo: f64,
    pub hi: f64,
    pub witness: f64,
    pub method: Method,
    pub grid_points: u64,
    pub lipschitz: f64,
}

impl CertifiedMinimum {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64, slack: f64) -> bool {
        self.lo - slack <= x && x <= self.hi + slack
    }
}

/// `c0 + Σ coeff(k)·cos kθ` in floating point.
pub fn eval_trigpoly(p: &TrigPoly, theta: f64) -> f64 {
    p.eval(theta)
}

/// `|Σ z^{aⱼ}|` at `z = e^{iθ}`, evaluated directly on the complex sum.
pub fn newman_modulus(exps: &[u64], theta: f64) -> f64 {
    let (re, im) = exps.iter().fold((0.0f64, 0.0f64), |(re, im), &a| {
        let (s, c) = (a as f64 * theta).sin_cos();
        (re + c, im + s)
    });
    re.hypot(im)
}

/// Golden-section search for a local minimum of |f| near `center`.
fn refine_modulus_witness(exps: &[u64], center: f64, radius: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut a = (center - radius).max(0.0);
    let mut b = (center + radius).min(std::f64::consts::PI);
    let f = |t: f64| newman_modulus(exps, t);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if b - a <= 4.0 * f64::EPSILON * b.abs().max(1.0) {
            break;
        }
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        x1
    } else {
        x2
    }
}

/// Encloses `M(t) = min_{|z|=1} |Σ z^{aⱼ}|` to width `tol`.
///
/// The lower end comes from a certified minimum of `|f|²`; the upper end is
/// the modulus at a locally polished witness.
pub fn certified_min_modulus(t: &NewmanTuple, tol: f64) -> Result<CertifiedMinimum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    let square = newman_abs_square(t);
    let compiled = CompiledPoly::new(&square)?;
    let floor = 4.0 * compiled.eval_error();
    let exps = t.exps();
    let mut tol_sq = tol.max(2.0 * floor);
    loop {
        let enc = grid::certified_min_compiled(&compiled, tol_sq)?;
        let radius = 4.0 * std::f64::consts::PI / enc.grid_points.max(1) as f64;
        let polished = refine_modulus_witness(exps, enc.witness, radius);
        let (witness, mut hi) = {
            let at_enc = newman_modulus(exps, enc.witness);
            let at_pol = newman_modulus(exps, polished);
            if at_pol < at_enc {
                (polished, at_pol)
            } else {
                (enc.witness, at_enc)
            }
        };
        if enc.hi <= 0.0 {
            hi = 0.0;
        }
        let lo = enc.lo.max(0.0).sqrt().min(hi);
        if hi - lo <= tol {
            return Ok(CertifiedMinimum {
                lo,
                hi,
                witness,
                method: Method::GridLipschitz,
                grid_points: enc.grid_points,
                lipschitz: enc.lipschitz,
            });
        }
        let next = (0.5 * tol_sq).min(0.9 * tol * (hi + lo));
        if next <= floor {
            return Err(Error::OutOfRange(format!(
                "tolerance {tol} is below the floating-point resolution of this polynomial"
            )));
        }
        tol_sq = next;
    }
}
