//! Reconstruction of the soliton curves on the right half-cone for all
//! three rotation regimes, Frenet frames, multi-period extension through
//! the monodromy rotation, closure testing, and the second-order ODE
//! identity checks.
//!
//! A curve is carried as samples of `(s, theta, psi)` with
//! `r = (psi, psi cos(theta), psi sin(theta))`; `theta` is strictly
//! increasing since `d theta / d s = 1 / psi > 0`.

use crate::cubic::{solve_cubic, SolitonParams};
use crate::minkowski::{inner_l, rotation, CausalClass, LRotation, LVec3};
use crate::num::fd::derivative_nonuniform;
use crate::num::gauss::{gauss_legendre, integrate_rule};
use crate::num::rk::Dopri5;
use crate::progression::ClosedSolitonSpec;
use crate::soliton::kg_at;
use crate::{Error, Result};
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use core::f64::consts::PI;

/// Which canonical axis the soliton rotates around; dictated by `sign(mu)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisCase {
    /// `mu > 0`: rotation around the time-like `t`-axis.
    TimeLikeAxis,
    /// `mu = 0`: rotation around the light-like axis `(1, 1, 0)`.
    LightLikeAxis,
    /// `mu < 0`: rotation around the space-like `z`-axis.
    SpaceLikeAxis,
}

impl AxisCase {
    /// The causal class of the rotation axis.
    pub fn causal_class(self) -> CausalClass {
        match self {
            AxisCase::TimeLikeAxis => CausalClass::TimeLike,
            AxisCase::LightLikeAxis => CausalClass::LightLike,
            AxisCase::SpaceLikeAxis => CausalClass::SpaceLike,
        }
    }

    /// The case matching the sign of `mu`.
    pub fn for_mu(mu: f64) -> AxisCase {
        if mu > 0.0 {
            AxisCase::TimeLikeAxis
        } else if mu < 0.0 {
            AxisCase::SpaceLikeAxis
        } else {
            AxisCase::LightLikeAxis
        }
    }

    fn matches_mu(self, mu: f64) -> bool {
        Self::for_mu(mu) == self
    }
}

/// One curve sample. `psi_s` is the arc-length derivative of `psi`, which
/// doubles as `psi_theta / psi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceSample {
    pub s: f64,
    pub theta: f64,
    pub psi: f64,
    pub psi_s: f64,
    pub r: LVec3,
}

/// A sampled soliton curve over one or more curvature periods, with the
/// per-period monodromy rotation.
#[derive(Debug, Clone)]
pub struct CurveTrace {
    params: SolitonParams,
    case: AxisCase,
    samples: Vec<TraceSample>,
    periods: usize,
    n_per_period: usize,
    monodromy: LRotation,
}

impl CurveTrace {
    pub fn params(&self) -> &SolitonParams {
        &self.params
    }
    pub fn case(&self) -> AxisCase {
        self.case
    }
    /// `periods * n_per_period + 1` samples, both endpoints included.
    pub fn samples(&self) -> &[TraceSample] {
        &self.samples
    }
    pub fn periods(&self) -> usize {
        self.periods
    }
    pub fn n_per_period(&self) -> usize {
        self.n_per_period
    }
    /// Rotation mapping each curvature period onto the next.
    pub fn monodromy(&self) -> &LRotation {
        &self.monodromy
    }

    /// `theta` at the period boundaries `s = 0, T, 2T, ..`.
    pub fn theta_at_period_ends(&self) -> Vec<f64> {
        (0..=self.periods)
            .map(|j| self.samples[j * self.n_per_period].theta)
            .collect()
    }

    /// Canonical axis coefficients of the second-order ODE identity for
    /// this trace's regime and initial data:
    /// `(sqrt(mu), 0, 0)` for `mu > 0`, `(1/2, 1/2, 0)` for `mu = 0`
    /// (`b = 2` normalization, `theta(0) = pi`), and
    /// `(0, 0, -sqrt(-mu))` for `mu < 0` (`theta(0) = pi/2`).
    pub fn canonical_axis_coefficients(&self) -> [f64; 3] {
        let mu = self.params.mu();
        match self.case {
            AxisCase::TimeLikeAxis => [mu.sqrt(), 0.0, 0.0],
            AxisCase::LightLikeAxis => [0.5, 0.5, 0.0],
            AxisCase::SpaceLikeAxis => [0.0, 0.0, -(-mu).sqrt()],
        }
    }
}

fn cone_point(psi: f64, theta: f64) -> LVec3 {
    LVec3 { t: psi, y: psi * theta.cos(), z: psi * theta.sin() }
}

/// Curvature of a polar graph `psi(theta)` on the half-cone,
/// `k_g = -(psi^2 + 3 psi_theta^2 - 2 psi_theta_theta psi) / (2 psi^4)`.
pub fn curvature_from_polar(psi: f64, psi_theta: f64, psi_theta_theta: f64) -> f64 {
    -(psi * psi + 3.0 * psi_theta * psi_theta - 2.0 * psi_theta_theta * psi)
        / (2.0 * psi.powi(4))
}

/// Build the one-period trace of the soliton curve for the given regime
/// with the default resolution of 1024 samples per period.
pub fn psi_profile(params: &SolitonParams, case: AxisCase) -> Result<CurveTrace> {
    psi_profile_with(params, case, 1024)
}

/// One-period trace with `n_per_period` samples per period.
pub fn psi_profile_with(
    params: &SolitonParams,
    case: AxisCase,
    n_per_period: usize,
) -> Result<CurveTrace> {
    if !case.matches_mu(params.mu()) {
        return Err(Error::CaseMismatch { mu: params.mu() });
    }
    assert!(n_per_period >= 2 && n_per_period % 2 == 0);
    let samples = match case {
        AxisCase::TimeLikeAxis => time_like_samples(params, 1, n_per_period),
        _ => integrate_samples(params, initial_state(params, case), 0, 1, n_per_period)?,
    };
    let omega = extract_omega(case, &samples, n_per_period, 1.0)?;
    Ok(CurveTrace {
        params: *params,
        case,
        samples,
        periods: 1,
        n_per_period,
        monodromy: rotation(case.causal_class(), omega),
    })
}

fn initial_state(params: &SolitonParams, case: AxisCase) -> [f64; 3] {
    match case {
        // psi = -k_g / sqrt(mu), starting angle 0
        AxisCase::TimeLikeAxis => [-params.x1() / params.mu().sqrt(), 0.0, 0.0],
        // psi(0) = -x1, theta(0) = pi (the b = 2 normalization)
        AxisCase::LightLikeAxis => [-params.x1(), 0.0, PI],
        // psi(0) = -x1/sqrt(-mu), theta(0) = pi/2
        AxisCase::SpaceLikeAxis => [-params.x1() / (-params.mu()).sqrt(), 0.0, PI / 2.0],
    }
}

/// `mu > 0`: `psi` is proportional to the curvature profile and `theta`
/// accumulates by Gauss–Legendre panels of `d theta / ds = sqrt(mu)/(-k_g)`
/// (the same panels that define the progression angle, restricted to
/// partial ranges).
fn time_like_samples(params: &SolitonParams, periods: usize, n: usize) -> Vec<TraceSample> {
    let mu = params.mu();
    let sqrt_mu = mu.sqrt();
    let t = params.period();
    let (nodes, weights) = gauss_legendre(16);
    let mut theta = 0.0;
    let mut comp = 0.0; // Kahan compensation for the panel sum
    let total = periods * n;
    let mut out = Vec::with_capacity(total + 1);
    for i in 0..=total {
        let s = t * i as f64 / n as f64;
        let jet = kg_at(params, s);
        let psi = -jet.kg / sqrt_mu;
        let psi_s = -jet.kg_s / sqrt_mu;
        out.push(TraceSample { s, theta, psi, psi_s, r: cone_point(psi, theta) });
        if i < total {
            let s_next = t * (i + 1) as f64 / n as f64;
            let mut f = |x: f64| -sqrt_mu / kg_at(params, x).kg;
            let panel = integrate_rule(&mut f, s, s_next, &nodes, &weights);
            let y = panel - comp;
            let tnew = theta + y;
            comp = (tnew - theta) - y;
            theta = tnew;
        }
    }
    out
}

/// `mu <= 0`: integrate the coupled system
/// `psi'' = (psi'^2 + 1)/(2 psi) + k_g(s) psi`, `theta' = 1/psi`
/// with an adaptive embedded Runge–Kutta 5(4) pair.
fn integrate_samples(
    params: &SolitonParams,
    y0: [f64; 3],
    first_period: usize,
    last_period: usize,
    n: usize,
) -> Result<Vec<TraceSample>> {
    let t = params.period();
    let s0 = first_period as f64 * t;
    let total = (last_period - first_period) * n;
    let nodes: Vec<f64> = (1..=total).map(|i| s0 + t * i as f64 / n as f64).collect();
    let mut out = Vec::with_capacity(total + 1);
    out.push(TraceSample {
        s: s0,
        theta: y0[2],
        psi: y0[0],
        psi_s: y0[1],
        r: cone_point(y0[0], y0[2]),
    });
    let solver = Dopri5::default();
    let rhs = |s: f64, y: &[f64; 3]| {
        let kg = kg_at(params, s).kg;
        [y[1], (y[1] * y[1] + 1.0) / (2.0 * y[0]) + kg * y[0], 1.0 / y[0]]
    };
    solver.integrate_nodes(rhs, s0, y0, &nodes, |s, y| {
        out.push(TraceSample {
            s,
            theta: y[2],
            psi: y[0],
            psi_s: y[1],
            r: cone_point(y[0], y[2]),
        });
    })?;
    if out.iter().any(|smp| !(smp.psi > 0.0)) {
        return Err(Error::IntegrationFailure { s: s0 });
    }
    Ok(out)
}

/// Endpoint `(psi, psi_s, theta)` of the first period for the `mu <= 0`
/// regimes (no intermediate sampling).
pub(crate) fn endpoint_state(params: &SolitonParams) -> Result<(f64, f64, f64)> {
    let case = AxisCase::for_mu(params.mu());
    debug_assert!(case != AxisCase::TimeLikeAxis);
    let y0 = initial_state(params, case);
    let solver = Dopri5::default();
    let rhs = |s: f64, y: &[f64; 3]| {
        let kg = kg_at(params, s).kg;
        [y[1], (y[1] * y[1] + 1.0) / (2.0 * y[0]) + kg * y[0], 1.0 / y[0]]
    };
    let y = solver.integrate(rhs, 0.0, y0, params.period())?;
    Ok((y[0], y[1], y[2]))
}

/// Rotation parameter of the per-period monodromy, from the endpoint of
/// the first period.
///
/// * `mu > 0`: `omega` is the angle advance itself.
/// * `mu = 0`: `cos theta(T) = (omega^2 - 1)/(1 + omega^2)` with
///   `theta(T) in (2 pi, 3 pi)` gives `omega = tan((3 pi - theta(T))/2)`.
/// * `mu < 0`: `cos theta(T) = tanh(omega)`.
///
/// The sign is fixed by the growth direction of `psi` across the period
/// (`psi(T)/psi(0) = 1 + omega^2`, resp. `cosh(omega)`), which both
/// formulas already respect for the canonical initial data.
fn extract_omega(
    case: AxisCase,
    samples: &[TraceSample],
    n_per_period: usize,
    _sign_hint: f64,
) -> Result<f64> {
    let start = &samples[0];
    let end = &samples[n_per_period];
    match case {
        AxisCase::TimeLikeAxis => Ok(end.theta - start.theta),
        AxisCase::LightLikeAxis => {
            let omega = ((3.0 * PI - end.theta) / 2.0).tan();
            Ok(omega)
        }
        AxisCase::SpaceLikeAxis => {
            let c = end.theta.cos();
            if c.abs() >= 1.0 {
                return Err(Error::IntegrationFailure { s: end.s });
            }
            Ok(c.atanh())
        }
    }
}

/// Extend a one-period trace to `n` periods.
///
/// `mu > 0` periods repeat exactly (angle shifted by the monodromy
/// parameter); `mu <= 0` periods continue the trajectory integration, and
/// the monodromy-rotation route `M^j r(s)` is available as an independent
/// cross-check of the result.
pub fn extend_periods(trace: &CurveTrace, n: usize) -> Result<CurveTrace> {
    assert!(trace.periods == 1, "extend from a one-period trace");
    if n <= 1 {
        return Ok(trace.clone());
    }
    let np = trace.n_per_period;
    let t = trace.params.period();
    let mut samples = trace.samples.clone();
    match trace.case {
        AxisCase::TimeLikeAxis => {
            let omega = trace.monodromy.omega();
            for j in 1..n {
                for i in 1..=np {
                    let base = trace.samples[i];
                    let theta = base.theta + j as f64 * omega;
                    samples.push(TraceSample {
                        s: base.s + j as f64 * t,
                        theta,
                        psi: base.psi,
                        psi_s: base.psi_s,
                        r: cone_point(base.psi, theta),
                    });
                }
            }
        }
        _ => {
            let last = *samples.last().expect("nonempty");
            let y0 = [last.psi, last.psi_s, last.theta];
            let more = integrate_samples(&trace.params, y0, 1, n, np)?;
            samples.extend_from_slice(&more[1..]);
        }
    }
    Ok(CurveTrace {
        params: trace.params,
        case: trace.case,
        samples,
        periods: n,
        n_per_period: np,
        monodromy: trace.monodromy,
    })
}

/// Frenet data at one sample: position, unit space-like tangent, light-like
/// normal with `<r, Y>_L = 1`, and the curvature.
#[derive(Debug, Clone, Copy)]
pub struct FrameSample {
    pub position: LVec3,
    pub tangent: LVec3,
    pub normal: LVec3,
    pub kg: f64,
}

/// Frame at sample `i` of the trace, from the polar-coordinate formulas
/// (`psi_theta / psi = psi_s`).
pub fn frame_at(trace: &CurveTrace, i: usize) -> FrameSample {
    let smp = &trace.samples()[i];
    let (theta, psi, q) = (smp.theta, smp.psi, smp.psi_s);
    let (sin_t, cos_t) = (theta.sin(), theta.cos());
    let tangent = LVec3 {
        t: q,
        y: q * cos_t - sin_t,
        z: q * sin_t + cos_t,
    };
    let half = 1.0 / (2.0 * psi);
    let normal = LVec3 {
        t: -half * (1.0 + q * q),
        y: half * ((1.0 - q * q) * cos_t + 2.0 * q * sin_t),
        z: half * (-2.0 * q * cos_t + (1.0 - q * q) * sin_t),
    };
    FrameSample {
        position: smp.r,
        tangent,
        normal,
        kg: kg_at(&trace.params, smp.s).kg,
    }
}

/// Curvature along the trace recomputed from the `(theta, psi)` samples
/// alone (5-point nonuniform finite differences in `theta`), for
/// consistency checks against the analytic profile. Entries within two
/// samples of either end are NaN.
pub fn kg_from_samples(trace: &CurveTrace) -> Vec<f64> {
    let thetas: Vec<f64> = trace.samples.iter().map(|s| s.theta).collect();
    let psis: Vec<f64> = trace.samples.iter().map(|s| s.psi).collect();
    let d1 = derivative_nonuniform(&thetas, &psis, 1, 2);
    let d2 = derivative_nonuniform(&thetas, &psis, 2, 2);
    psis.iter()
        .zip(d1.iter().zip(&d2))
        .map(|(&p, (&pt, &ptt))| curvature_from_polar(p, pt, ptt))
        .collect()
}

/// Closure data of a putative closed soliton.
#[derive(Debug, Clone, Copy)]
pub struct ClosureReport {
    /// Euclidean endpoint gap `|r(qT) - r(0)|`.
    pub gap: f64,
    /// Total advance of `theta` over the `q` periods.
    pub theta_advance: f64,
    /// Largest `psi` on the trace (sets the gap tolerance scale).
    pub max_psi: f64,
    pub periods: usize,
}

/// Build the `q`-period curve of a closed-soliton candidate and test that
/// it closes: endpoint gap at most `1e-6 * max(psi)` and angle advance
/// within `1e-6` of `2 pi p`.
pub fn closure_check(spec: &ClosedSolitonSpec) -> Result<ClosureReport> {
    let params = solve_cubic(spec.lambda_star, spec.mu)?;
    let one = psi_profile(&params, AxisCase::TimeLikeAxis)?;
    let trace = extend_periods(&one, spec.q as usize)?;
    let first = trace.samples().first().expect("nonempty");
    let last = trace.samples().last().expect("nonempty");
    let gap = (last.r - first.r).norm_euclid();
    let theta_advance = last.theta - first.theta;
    let max_psi = trace.samples().iter().map(|s| s.psi).fold(0.0, f64::max);
    let tol = 1e-6 * max_psi;
    let report = ClosureReport { gap, theta_advance, max_psi, periods: spec.q as usize };
    let angle_ok = (theta_advance - 2.0 * PI * spec.p as f64).abs() <= 1e-6;
    if gap <= tol && angle_ok {
        Ok(report)
    } else {
        Err(Error::NotClosed { gap, tol })
    }
}

/// Result of the second-order ODE identity check.
#[derive(Debug, Clone, Copy)]
pub struct OdeIdentityReport {
    /// `max_s |(-c1 + c2 cos(theta) + c3 sin(theta)) psi - k_g(s)|`.
    pub max_residual: f64,
    /// Max residual of the pointwise identity
    /// `2 f f_ss - f_s^2 - 2 f^3 = x1 x2 x3` for `f = k_g`.
    pub proof_identity_max: f64,
}

/// Check the identity `(-c1 + c2 cos(theta) + c3 sin(theta)) psi = k_g(s)`
/// along the trace. The coefficients must satisfy
/// `-c1^2 + c2^2 + c3^2 = -x1 x2 x3` (to `1e-10`).
pub fn thm_ode_identity(trace: &CurveTrace, c: [f64; 3]) -> Result<OdeIdentityReport> {
    let p = &trace.params;
    let product = p.x1() * p.x2() * p.x3();
    let constraint = -c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + product;
    if constraint.abs() > 1e-10 * product.abs().max(1.0) {
        return Err(Error::ConstraintViolated { residual: constraint });
    }
    let mut max_residual = 0.0f64;
    let mut proof_identity_max = 0.0f64;
    for smp in trace.samples() {
        let pred = (-c[0] + c[1] * smp.theta.cos() + c[2] * smp.theta.sin()) * smp.psi;
        let jet = kg_at(p, smp.s);
        max_residual = max_residual.max((pred - jet.kg).abs());
        let proof = 2.0 * jet.kg * jet.kg_ss - jet.kg_s * jet.kg_s - 2.0 * jet.kg.powi(3)
            - product;
        proof_identity_max = proof_identity_max.max(proof.abs());
    }
    Ok(OdeIdentityReport { max_residual, proof_identity_max })
}

/// Least-squares fit of the axis coefficients from the trace samples
/// (linear in `(c1, c2, c3)`; useful to recover the canonical axis from
/// data alone).
pub fn fit_axis_coefficients(trace: &CurveTrace) -> [f64; 3] {
    // normal equations for  (-c1) * 1 + c2 cos + c3 sin = kg / psi
    let mut ata = [[0.0f64; 3]; 3];
    let mut atb = [0.0f64; 3];
    for smp in trace.samples() {
        let row = [-1.0, smp.theta.cos(), smp.theta.sin()];
        let rhs = kg_at(&trace.params, smp.s).kg / smp.psi;
        for i in 0..3 {
            for j in 0..3 {
                ata[i][j] += row[i] * row[j];
            }
            atb[i] += row[i] * rhs;
        }
    }
    let m = invert3(&ata);
    let mut c = [0.0f64; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i] += m[i][j] * atb[j];
        }
    }
    c
}

/// Max residual of the substituted equation
/// `u_tt + (-c1 + c2 cos + c3 sin)/(2 u^5) + u/4 = 0` for `u = psi^(-1/2)`,
/// with `theta` derivatives taken by finite differences on the samples.
pub fn u_ode_check(trace: &CurveTrace, c: [f64; 3]) -> f64 {
    let thetas: Vec<f64> = trace.samples.iter().map(|s| s.theta).collect();
    let psis: Vec<f64> = trace.samples.iter().map(|s| s.psi).collect();
    u_ode_residual(&thetas, &psis, c)
}

/// The same residual on raw `(theta, psi)` samples (strictly increasing
/// `theta`); usable for curves that are not soliton traces.
pub fn u_ode_residual(thetas: &[f64], psis: &[f64], c: [f64; 3]) -> f64 {
    let us: Vec<f64> = psis.iter().map(|p| 1.0 / p.sqrt()).collect();
    let utt = derivative_nonuniform(thetas, &us, 2, 2);
    let mut worst = 0.0f64;
    for i in 2..thetas.len().saturating_sub(2) {
        let code = -c[0] + c[1] * thetas[i].cos() + c[2] * thetas[i].sin();
        let res = utt[i] + code / (2.0 * us[i].powi(5)) + us[i] / 4.0;
        worst = worst.max(res.abs());
    }
    worst
}

/// Per-period extremes of `psi` over a multi-period trace, plus the values
/// at the period starts (whose growth law identifies the rotation class).
#[derive(Debug, Clone)]
pub struct BoundednessReport {
    pub per_period_max: Vec<f64>,
    pub per_period_min: Vec<f64>,
    pub psi_period_starts: Vec<f64>,
}

pub fn boundedness_report(trace: &CurveTrace) -> BoundednessReport {
    assert!(trace.periods >= 2, "need at least two periods");
    let np = trace.n_per_period;
    let mut per_period_max = Vec::with_capacity(trace.periods);
    let mut per_period_min = Vec::with_capacity(trace.periods);
    for j in 0..trace.periods {
        let seg = &trace.samples[j * np..=(j + 1) * np];
        per_period_max.push(seg.iter().map(|s| s.psi).fold(f64::NEG_INFINITY, f64::max));
        per_period_min.push(seg.iter().map(|s| s.psi).fold(f64::INFINITY, f64::min));
    }
    let psi_period_starts = (0..=trace.periods)
        .map(|j| trace.samples[j * np].psi)
        .collect();
    BoundednessReport { per_period_max, per_period_min, psi_period_starts }
}

/// The per-period rotation extracted from the endpoint frames: the matrix
/// mapping the frame `(r, T, Y)` at `s = 0` onto the frame at `s = T`.
/// For a soliton this equals the canonical monodromy rotation entrywise.
pub fn monodromy_from_frames(trace: &CurveTrace) -> [[f64; 3]; 3] {
    let a = frame_at(trace, 0);
    let b = frame_at(trace, trace.n_per_period);
    let cols_a = frame_matrix(&a);
    let cols_b = frame_matrix(&b);
    let inv_a = invert3(&cols_a);
    let mut m = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for (k, inv_row) in inv_a.iter().enumerate() {
                m[i][j] += cols_b[i][k] * inv_row[j];
            }
        }
    }
    m
}

fn frame_matrix(f: &FrameSample) -> [[f64; 3]; 3] {
    [
        [f.position.t, f.tangent.t, f.normal.t],
        [f.position.y, f.tangent.y, f.normal.y],
        [f.position.z, f.tangent.z, f.normal.z],
    ]
}

fn invert3(m: &[[f64; 3]; 3]) -> [[f64; 3]; 3] {
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    let inv_det = 1.0 / det;
    let mut out = [[0.0f64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let (a, b) = ((i + 1) % 3, (i + 2) % 3);
            let (c, d) = ((j + 1) % 3, (j + 2) % 3);
            // adjugate with transposed indices
            out[j][i] = (m[a][c] * m[b][d] - m[a][d] * m[b][c]) * inv_det;
        }
    }
    out
}

/// Verify the on-cone and frame invariants at one sample; returns the
/// largest violation among `<r,r> = 0`, `<T,T> = 1`, `<Y,Y> = 0`,
/// `<r,Y> = 1`, `<T,Y> = 0`, `<r,T> = 0`.
pub fn frame_invariant_residual(f: &FrameSample) -> f64 {
    let rr = inner_l(&f.position, &f.position);
    let tt = inner_l(&f.tangent, &f.tangent) - 1.0;
    let yy = inner_l(&f.normal, &f.normal);
    let ry = inner_l(&f.position, &f.normal) - 1.0;
    let ty = inner_l(&f.tangent, &f.normal);
    let rt = inner_l(&f.position, &f.tangent);
    rr.abs().max(tt.abs()).max(yy.abs()).max(ry.abs()).max(ty.abs()).max(rt.abs())
}
