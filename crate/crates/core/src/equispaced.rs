use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduces an angle to `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Maps an angle to its representative in `[0, π]` under `θ ↦ −θ`.
/// Every even function of θ takes the same value at both.
pub fn fold_angle(theta: f64) -> f64 {
    let r = normalize_angle(theta);
    if r > PI {
        TAU - r
    } else {
        r
    }
}

/// `{offset + 2kπ/order : k ∈ ℤ}`, which has `order` distinct points mod 2π.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EquispacedSet {
    offset: f64,
    order: u64,
}

impl EquispacedSet {
    pub fn new(offset: f64, order: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("equispaced set order must be ≥ 1".into()));
        }
        if !offset.is_finite() {
            return Err(Error::InvalidInput("equispaced set offset must be finite".into()));
        }
        Ok(Self { offset: normalize_angle(offset), order })
    }

    /// The solution set `{θ : mθ ≡ ξ (mod 2π)}`.
    pub fn solutions(order: u64, xi: f64) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidInput("equispaced set order must be ≥ 1".into()));
        }
        Self::new(xi / order as f64, order)
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// The `j`-th point `offset + 2jπ/order`, not reduced mod 2π.
    pub fn point(&self, j: u64) -> f64 {
        self.offset + TAU * (j as f64) / self.order as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.order).map(move |j| self.point(j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solution_sets() {
        let s = EquispacedSet::solutions(3, PI).unwrap();
        let pts: Vec<f64> = s.points().collect();
        assert_eq!(pts.len(), 3);
        for p in pts {
            assert!(((3.0 * p).cos() + 1.0).abs() < 1e-12);
        }
        assert!(EquispacedSet::new(0.0, 0).is_err());
    }

    #[test]
    fn folding() {
        assert!((fold_angle(5.0 * PI / 3.0) - PI / 3.0).abs() < 1e-12);
        assert_eq!(fold_angle(PI), PI);
        assert!((fold_angle(-0.5) - 0.5).abs() < 1e-15);
    }
}
