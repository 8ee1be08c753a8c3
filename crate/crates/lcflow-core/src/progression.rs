//! The per-period progression angle of the polar coordinate for `mu > 0`
//! solitons — by regularized quadrature, by the closed third-kind form,
//! and by the large-`lambda` series — together with the closed-soliton
//! search and the endpoint angles of the `mu = 0` / `mu < 0` regimes.

use crate::cubic::{solve_cubic, SolitonParams};
use crate::curve;
use crate::ellip::ellip_pi_complete_with_complement;
use crate::num::quad::integrate_adaptive;
use crate::{Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

use core::f64::consts::{FRAC_PI_2, PI};

/// Default absolute tolerance of the adaptive quadrature route.
pub const QUAD_TOL: f64 = 1e-12;

/// Progression angle over one curvature period by adaptive quadrature of
///
/// ```text
/// -2 sqrt(mu) Int_{x1}^{x2} dx / (x sqrt(x^3 - lambda x - mu))
/// ```
///
/// after the substitution `x = x1 + (x2 - x1) sin^2(phi)`, which removes
/// both endpoint square-root singularities and leaves
/// `-4 sqrt(mu) Int_0^{pi/2} dphi / (x(phi) sqrt(x3 - x(phi)))`.
pub fn progression_angle_quad(params: &SolitonParams) -> Result<f64> {
    progression_angle_quad_tol(params, QUAD_TOL)
}

/// Quadrature route with an explicit absolute tolerance.
pub fn progression_angle_quad_tol(params: &SolitonParams, tol: f64) -> Result<f64> {
    let mu = params.mu();
    if !(mu > 0.0) {
        return Err(Error::NonPositiveMu { mu });
    }
    let (x1, x2, x3) = (params.x1(), params.x2(), params.x3());
    let beta = x2 - x1;
    let f = |phi: f64| {
        let s2 = phi.sin().powi(2);
        // evaluate from whichever endpoint avoids cancellation (x2 can be
        // orders of magnitude below |x1| at large lambda)
        let x = if s2 <= 0.5 {
            x1 + beta * s2
        } else {
            x2 - beta * phi.cos().powi(2)
        };
        1.0 / (x * (x3 - x).sqrt())
    };
    Ok(-4.0 * mu.sqrt() * integrate_adaptive(f, 0.0, FRAC_PI_2, tol))
}

/// Progression angle in closed form,
///
/// ```text
/// 4 sqrt(mu) / (-x1 sqrt(x3 - x1)) * Pi(pi/2, (x2 - x1)/(-x1), k).
/// ```
pub fn progression_angle_closed(params: &SolitonParams) -> Result<f64> {
    let mu = params.mu();
    if !(mu > 0.0) {
        return Err(Error::NonPositiveMu { mu });
    }
    let (x1, x2, x3) = (params.x1(), params.x2(), params.x3());
    // 1 - alpha^2 = 1 - (x2 - x1)/(-x1) = x2/x1, exact in the roots
    let complement = x2 / x1;
    let pi3 = ellip_pi_complete_with_complement(complement, params.modulus())?;
    Ok(4.0 * mu.sqrt() / (-x1 * (x3 - x1).sqrt()) * pi3)
}

/// Smallest `lambda` accepted by the series route.
pub const SERIES_LAMBDA_GATE: f64 = 30.0;

/// Large-`lambda` series for the progression angle of the normalized
/// `mu = 2` family: the four-term expansion in `x = (3/lambda)^(3/2)`,
///
/// ```text
/// (370345 sqrt(2) / 262144) pi
///   - (47827845 * 3^(1/4) / 134217728) pi x^(1/2)
///   - (715 sqrt(6) / 524288) pi x
///   + (123361315 * 27^(1/4) / 1811939328) pi x^(3/2).
/// ```
pub fn progression_angle_series(lambda: f64) -> Result<f64> {
    if !(lambda >= SERIES_LAMBDA_GATE) {
        return Err(Error::OutsideSeriesRange { lambda, gate: SERIES_LAMBDA_GATE });
    }
    Ok(series_terms(lambda))
}

/// Constant term of the series (its own `lambda -> inf` limit).
pub fn series_constant_term() -> f64 {
    370_345.0 * core::f64::consts::SQRT_2 / 262_144.0 * PI
}

fn series_terms(lambda: f64) -> f64 {
    let x = (3.0 / lambda).powf(1.5);
    let sx = x.sqrt();
    let root4_3 = 3.0f64.powf(0.25);
    let sqrt6 = 6.0f64.sqrt();
    let root4_27 = 27.0f64.powf(0.25);
    series_constant_term() - 47_827_845.0 * root4_3 / 134_217_728.0 * PI * sx
        - 715.0 * sqrt6 / 524_288.0 * PI * x
        + 123_361_315.0 * root4_27 / 1_811_939_328.0 * PI * x * sx
}

/// A closed soliton: rotation index `p`, closure after `q` periods, and the
/// normalized-family parameter `lambda_star` solving
/// `progression_angle(lambda) = 2 pi p / q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedSolitonSpec {
    pub p: u32,
    pub q: u32,
    pub lambda_star: f64,
    /// Normalized to 2.
    pub mu: f64,
    /// The target angle `2 pi p / q`.
    pub progression: f64,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Residual target of the closed-soliton bisection.
pub const CLOSED_RESIDUAL_TOL: f64 = 1e-10;

/// Find the `mu = 2` family member whose progression angle equals
/// `2 pi p / q`, by bisection on the strictly monotone closed form.
///
/// `p` and `q` must be coprime with `sqrt(2/3) < p/q < 1`.
pub fn find_closed_lambda(p: u32, q: u32) -> Result<ClosedSolitonSpec> {
    find_closed_lambda_tol(p, q, CLOSED_RESIDUAL_TOL)
}

/// Closed-soliton search with an explicit residual tolerance.
pub fn find_closed_lambda_tol(p: u32, q: u32, tol: f64) -> Result<ClosedSolitonSpec> {
    if p == 0 || q == 0 || gcd(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let ratio = p as f64 / q as f64;
    if !((2.0f64 / 3.0).sqrt() < ratio && ratio < 1.0) {
        return Err(Error::RatioOutOfRange { ratio });
    }
    let target = 2.0 * PI * ratio;
    let angle = |lambda: f64| -> Result<f64> {
        progression_angle_closed(&solve_cubic(lambda, 2.0)?)
    };
    let mut lo = 3.0 * (1.0 + 1e-9);
    if angle(lo)? >= target {
        return Err(Error::BracketFailure);
    }
    let mut hi = 100.0;
    let mut doublings = 0;
    while angle(hi)? < target {
        hi *= 2.0;
        doublings += 1;
        if doublings > 60 {
            return Err(Error::BracketFailure);
        }
    }
    let mut best = (f64::INFINITY, lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let val = angle(mid)?;
        let resid = (val - target).abs();
        if resid < best.0 {
            best = (resid, mid);
        }
        if resid <= 0.25 * tol {
            break;
        }
        if val < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    if best.0 > tol {
        return Err(Error::BracketFailure);
    }
    Ok(ClosedSolitonSpec { p, q, lambda_star: best.1, mu: 2.0, progression: target })
}

/// Which non-closing regime an endpoint angle refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuCase {
    /// `mu = 0` (rotation around the light-like axis), initial data
    /// `psi(0) = -x1`, `theta(0) = pi`.
    Zero,
    /// `mu < 0`, normalized to `mu = -2` (rotation around the space-like
    /// axis), initial data `psi(0) = -x1/sqrt(-mu)`, `theta(0) = pi/2`.
    Negative,
}

/// Polar angle at the end of the first curvature period, by trajectory
/// integration of the coupled `(psi, psi_s, theta)` system.
pub fn endpoint_angle(mu_case: MuCase, lambda: f64) -> Result<f64> {
    let params = match mu_case {
        MuCase::Zero => {
            if !(lambda > 0.0) {
                return Err(Error::RegimeViolation { what: "mu = 0 needs lambda > 0" });
            }
            solve_cubic(lambda, 0.0)?
        }
        MuCase::Negative => {
            if !(lambda > 3.0) {
                return Err(Error::RegimeViolation {
                    what: "mu = -2 needs lambda > 3 (= 3 (|mu|/2)^(2/3))",
                });
            }
            solve_cubic(lambda, -2.0)?
        }
    };
    let (_, _, theta) = curve::endpoint_state(&params)?;
    Ok(theta)
}
