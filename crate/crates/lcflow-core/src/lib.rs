//! Curves, solitons and curvature flows on the light-cone of 3-dimensional
//! Minkowski space.
//!
//! The crate is organized around the pipeline
//!
//! 1. [`minkowski`] — Lorentzian linear algebra: scalar and pseudo vector
//!    products, causal classification, the three one-parameter rotation
//!    groups, plane sections of the cone.
//! 2. [`ellip`] — elliptic integrals (Carlson symmetric forms) and Jacobi
//!    elliptic functions (arithmetic-geometric mean).
//! 3. [`cubic`] — root structure of `x^3 - lambda*x - mu = 0` in the regime
//!    where periodic solitons exist.
//! 4. [`soliton`] — the periodic curvature profile `k_g(s)` in Jacobi-sn
//!    form, with analytic derivatives and residual checks.
//! 5. [`progression`] — the per-period angle advance for `mu > 0` by
//!    quadrature, closed form and series, plus the closed-soliton search
//!    and endpoint angles for `mu <= 0`.
//! 6. [`curve`] — reconstruction of the soliton curves on the cone in all
//!    three rotation regimes, Frenet frames, monodromy and closure checks.
//! 7. [`flows`] — periodic-in-`s` simulators for the heat flow
//!    `k_t = k_ss + 2 k^2` (with Harnack monitoring) and the non-stretching
//!    KdV flow `(k_g)_t = (k_g)_sss - 3 k_g (k_g)_s` (with conservation
//!    monitoring).
//!
//! The crate is `no_std`-compatible (`--no-default-features`, `alloc`
//! required); float math falls back to `libm` in that configuration.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod cubic;
pub mod curve;
pub mod ellip;
mod error;
pub mod flows;
pub mod minkowski;
pub mod num;
pub mod progression;
pub mod soliton;

pub use error::{Error, Result};
