//! Root structure of `x^3 - lambda*x - mu = 0` in the regime with three
//! distinct real roots, which is where nontrivial periodic solitons live.

use crate::ellip::ellip_k;
use crate::{Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

/// One member of the soliton family: the integration constants, the sorted
/// roots of the associated cubic, and the derived elliptic modulus and
/// curvature period.
///
/// Constructed only through [`solve_cubic`], which guarantees
/// `x1 < x2 < x3`, the Vieta identities, and the period formula
/// `T = 4 K(k) / sqrt(x3 - x1)` with `k = sqrt((x2 - x1)/(x3 - x1))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolitonParams {
    lambda: f64,
    mu: f64,
    x1: f64,
    x2: f64,
    x3: f64,
    modulus: f64,
    period: f64,
}

impl SolitonParams {
    pub fn lambda(&self) -> f64 {
        self.lambda
    }
    pub fn mu(&self) -> f64 {
        self.mu
    }
    /// Smallest root (= minimum of the curvature profile).
    pub fn x1(&self) -> f64 {
        self.x1
    }
    /// Middle root (= maximum of the curvature profile).
    pub fn x2(&self) -> f64 {
        self.x2
    }
    /// Largest root.
    pub fn x3(&self) -> f64 {
        self.x3
    }
    /// Elliptic modulus `k = sqrt((x2 - x1)/(x3 - x1))`.
    pub fn modulus(&self) -> f64 {
        self.modulus
    }
    /// Arc-length period `T` of the curvature profile.
    pub fn period(&self) -> f64 {
        self.period
    }
}

/// Solve `x^3 - lambda*x - mu = 0` by the trigonometric formula, polish the
/// roots with Newton steps, and derive modulus and period.
///
/// The regime gate is the discriminant condition `4 lambda^3 - 27 mu^2 > 0`
/// with an epsilon relative to the magnitude of its two constituents (so
/// arbitrarily small `lambda > 0` with `mu = 0` stays inside the regime),
/// equivalent to `lambda > 3 (|mu|/2)^(2/3)` and, for `mu = 0`, to
/// `lambda > 0`.
pub fn solve_cubic(lambda: f64, mu: f64) -> Result<SolitonParams> {
    let cube = 4.0 * lambda * lambda * lambda;
    let square = 27.0 * mu * mu;
    let disc = cube - square;
    if !(disc > 1e-10 * (cube.abs() + square) + f64::MIN_POSITIVE) {
        return Err(Error::DegenerateRoots { lambda, mu });
    }
    let arg = -mu / 2.0 * (3.0 / lambda).powf(1.5);
    if arg.abs() > 1.0 + 1e-14 {
        return Err(Error::DegenerateRoots { lambda, mu });
    }
    let theta = arg.clamp(-1.0, 1.0).acos();
    let amp = 2.0 * (3.0 * lambda).sqrt() / 3.0;
    let mut roots = [
        -amp * (theta / 3.0).cos(),
        amp * ((theta + core::f64::consts::PI) / 3.0).cos(),
        amp * ((theta - core::f64::consts::PI) / 3.0).cos(),
    ];
    // Newton polish; recovers a digit near the degenerate boundary.
    for r in roots.iter_mut() {
        for _ in 0..2 {
            let f = (*r * *r - lambda) * *r - mu;
            let df = 3.0 * *r * *r - lambda;
            if df.abs() > 0.0 {
                *r -= f / df;
            }
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).expect("roots are finite"));
    let [x1, x2, x3] = roots;
    if !(x1 < x2 && x2 < x3) {
        return Err(Error::DegenerateRoots { lambda, mu });
    }
    let modulus = ((x2 - x1) / (x3 - x1)).sqrt();
    let period = 4.0 / (x3 - x1).sqrt() * ellip_k(modulus)?;
    Ok(SolitonParams { lambda, mu, x1, x2, x3, modulus, period })
}
