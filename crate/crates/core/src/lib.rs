//! Certified minimization of integer-frequency cosine sums and of the
//! modulus of Newman polynomials on the unit circle, together with the
//! constructive case analyses that bound the extremal values
//! `λ(n) = -sup L(a₁,…,aₙ)` and `μ(n) = sup M(a₁,…,aₙ)`.
//!
//! The crate is organized bottom-up:
//!
//! * [`tuple`], [`trigpoly`], [`equispaced`]: domain types, canonical forms
//!   and exact cosine-polynomial algebra.
//! * [`trigmin`]: certified (grid + Lipschitz) and exact (Chebyshev + Sturm)
//!   global minimization.
//! * [`constructions`]: Sidon-set cosine sums and products of Newman
//!   polynomials.
//! * [`certlab`]: equispaced-set bounds and the machine-checked case
//!   analyses for λ(2), λ(3) and the λ(4) classifier.
//! * [`mu5`]: the rational case engine bounding μ(5).
//! * [`search`]: exhaustive canonical searches with ranked output.

pub mod certlab;
pub mod constructions;
pub mod equispaced;
pub mod error;
pub mod mu5;
pub mod search;
pub mod serde_util;
pub mod trigmin;
pub mod trigpoly;
pub mod tuple;

pub use equispaced::EquispacedSet;
pub use error::{Error, Result};
pub use trigmin::{CertifiedMinimum, Method};
pub use trigpoly::TrigPoly;
pub use tuple::{CosineTuple, NewmanTuple};
