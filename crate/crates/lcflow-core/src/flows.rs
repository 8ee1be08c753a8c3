//! Periodic-in-`s` simulators for the two named curvature flows:
//!
//! * heat flow of `k = -k_g`: `k_t = k_ss + 2 k^2`, with the Harnack
//!   quantity monitored and a blow-up cap on the reaction term;
//! * the non-stretching KdV flow `(k_g)_t = (k_g)_sss - 3 k_g (k_g)_s`,
//!   with its three conserved integrals monitored.
//!
//! Spatial derivatives are Fourier-spectral on the power-of-two periodic
//! grid (a 6th-order finite-difference fallback is available for
//! non-smooth experiments). The heat flow steps with classical RK4 under
//! the diffusive gate `dt <= 0.2 ds^2`; the KdV flow steps with RK4 on the
//! integrating-factor form (the third-derivative term is propagated
//! exactly in Fourier space), leaving an advective step gate.

use crate::num::fd::periodic_derivative_fd6;
use crate::num::fft::Fft;
use crate::{Error, Result};
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

/// Diffusive step gate constant for the heat flow: `dt <= C1 * ds^2`.
pub const HEAT_GATE_C1: f64 = 0.2;
/// Advective step gate constant for the integrating-factor KdV stepper:
/// `dt <= C2 * ds / (1 + max|k_g|)`.
pub const KDV_GATE_C2: f64 = 0.5;
/// The heat flow aborts once `max k` exceeds this cap (genuine finite-time
/// blow-up of the reaction term; reported, not swallowed).
pub const BLOWUP_CAP: f64 = 1e8;

/// How spatial derivatives are taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpatialScheme {
    Spectral,
    Fd6,
}

/// Periodic grid of curvature values at one instant.
#[derive(Debug, Clone)]
pub struct FlowState {
    pub grid_n: usize,
    /// Spatial period `L`.
    pub length: f64,
    pub values: Vec<f64>,
    pub time: f64,
    /// Initial time of the Harnack clock.
    pub t0: f64,
    /// `ln(g(s, t) / g(s, t0))`, the metric-evolution diagnostic of the
    /// heat flow (`g_t / g = -k`); identically zero for the non-stretching
    /// KdV flow. Does not feed back into the PDE.
    pub log_metric: Vec<f64>,
}

impl FlowState {
    /// New state at `time = t0`. The grid must be a power of two with at
    /// least 16 nodes.
    pub fn new(length: f64, values: Vec<f64>, t0: f64) -> Self {
        let n = values.len();
        assert!(n >= 16 && n.is_power_of_two(), "grid must be a power of two, >= 16");
        assert!(length > 0.0);
        FlowState {
            grid_n: n,
            length,
            values,
            time: t0,
            t0,
            log_metric: alloc::vec![0.0; n],
        }
    }

    pub fn ds(&self) -> f64 {
        self.length / self.grid_n as f64
    }

    /// Spatial derivative of the current values.
    pub fn derivative(&self, order: u32, scheme: SpatialScheme) -> Vec<f64> {
        match scheme {
            SpatialScheme::Spectral => Fft::new(self.grid_n).derivative(&self.values, self.length, order),
            SpatialScheme::Fd6 => periodic_derivative_fd6(&self.values, self.length, order as usize),
        }
    }
}

fn heat_rhs(fft: &Fft, u: &[f64], length: f64) -> Vec<f64> {
    let mut out = fft.derivative(u, length, 2);
    for (o, &v) in out.iter_mut().zip(u) {
        *o += 2.0 * v * v;
    }
    out
}

/// One RK4 step of the heat flow `k_t = k_ss + 2 k^2`.
///
/// Fails with [`Error::StabilityViolation`] if `dt` exceeds the diffusive
/// gate and with [`Error::Blowup`] when the solution leaves the cap (the
/// expected terminal state near finite-time blow-up).
pub fn heat_step(state: &FlowState, dt: f64) -> Result<FlowState> {
    let gate = HEAT_GATE_C1 * state.ds() * state.ds();
    if !(dt > 0.0) || dt > gate * (1.0 + 1e-12) {
        return Err(Error::StabilityViolation { dt, gate });
    }
    let n = state.grid_n;
    let fft = Fft::new(n);
    let u = &state.values;
    let k1 = heat_rhs(&fft, u, state.length);
    let u2: Vec<f64> = u.iter().zip(&k1).map(|(&a, &b)| a + 0.5 * dt * b).collect();
    let k2 = heat_rhs(&fft, &u2, state.length);
    let u3: Vec<f64> = u.iter().zip(&k2).map(|(&a, &b)| a + 0.5 * dt * b).collect();
    let k3 = heat_rhs(&fft, &u3, state.length);
    let u4: Vec<f64> = u.iter().zip(&k3).map(|(&a, &b)| a + dt * b).collect();
    let k4 = heat_rhs(&fft, &u4, state.length);
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        values.push(u[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]));
    }
    // metric diagnostic: d(ln g)/dt = -k, integrated with the same stages
    let mut log_metric = state.log_metric.clone();
    for i in 0..n {
        log_metric[i] -= dt / 6.0 * (u[i] + 2.0 * u2[i] + 2.0 * u3[i] + u4[i]);
    }
    let time = state.time + dt;
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() || max > BLOWUP_CAP {
        return Err(Error::Blowup { time, max });
    }
    Ok(FlowState {
        grid_n: n,
        length: state.length,
        values,
        time,
        t0: state.t0,
        log_metric,
    })
}

/// The Harnack data of a heat-flow state: the grid minimum of
/// `k_t - k_s^2/k - k^2 + k/(2(t - t0))` (with `k_t` evaluated through the
/// PDE right-hand side, not a time difference), and the minimum of
/// `Q + 1/(2(t - t0))` for `Q = k_ss/k - k_s^2/k^2 + k`.
#[derive(Debug, Clone, Copy)]
pub struct HarnackReport {
    pub min_over_grid: f64,
    pub q_min: f64,
    pub time: f64,
    /// Set when `t = t0`: the `1/(2(t - t0))` slack is infinite and both
    /// minima degenerate to `+inf`.
    pub degenerate: bool,
}

pub fn harnack_report(state: &FlowState) -> Result<HarnackReport> {
    let min_k = state.values.iter().cloned().fold(f64::INFINITY, f64::min);
    if !(min_k > 0.0) {
        return Err(Error::NonPositiveCurvature { min: min_k });
    }
    let dt_clock = state.time - state.t0;
    if dt_clock <= 0.0 {
        return Ok(HarnackReport {
            min_over_grid: f64::INFINITY,
            q_min: f64::INFINITY,
            time: state.time,
            degenerate: true,
        });
    }
    let fft = Fft::new(state.grid_n);
    let ks = fft.derivative(&state.values, state.length, 1);
    let kss = fft.derivative(&state.values, state.length, 2);
    let slack = 0.5 / dt_clock;
    let mut min_expr = f64::INFINITY;
    let mut q_min = f64::INFINITY;
    for i in 0..state.grid_n {
        let k = state.values[i];
        let kt = kss[i] + 2.0 * k * k;
        let expr = kt - ks[i] * ks[i] / k - k * k + k * slack;
        let q = kss[i] / k - (ks[i] / k) * (ks[i] / k) + k;
        min_expr = min_expr.min(expr);
        q_min = q_min.min(q + slack);
    }
    Ok(HarnackReport { min_over_grid: min_expr, q_min, time: state.time, degenerate: false })
}

struct KdvWork {
    fft: Fft,
    k: Vec<f64>,
}

impl KdvWork {
    fn new(n: usize, length: f64) -> Self {
        let base = 2.0 * core::f64::consts::PI / length;
        let k = (0..n)
            .map(|j| {
                let kj = if j <= n / 2 { j as isize } else { j as isize - n as isize };
                base * kj as f64
            })
            .collect();
        KdvWork { fft: Fft::new(n), k }
    }

    /// Nonlinear term in Fourier space: `-3 u u_s = -(3/2) (u^2)_s`.
    fn nonlinear(&self, vr: &[f64], vi: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let n = vr.len();
        let mut ur = vr.to_vec();
        let mut ui = vi.to_vec();
        self.fft.transform(&mut ur, &mut ui, true);
        for i in 0..n {
            // real field: square the real part, drop rounding leakage
            ur[i] = ur[i] * ur[i];
            ui[i] = 0.0;
        }
        self.fft.transform(&mut ur, &mut ui, false);
        let mut outr = Vec::with_capacity(n);
        let mut outi = Vec::with_capacity(n);
        for i in 0..n {
            if i == n / 2 {
                outr.push(0.0);
                outi.push(0.0);
                continue;
            }
            let f = -1.5 * self.k[i];
            // multiply by i*f
            outr.push(-f * ui[i]);
            outi.push(f * ur[i]);
        }
        (outr, outi)
    }
}

/// One integrating-factor RK4 step of the KdV flow
/// `(k_g)_t = (k_g)_sss - 3 k_g (k_g)_s`.
///
/// The linear symbol `exp(-i k^3 dt)` is applied exactly; the remaining
/// advective gate is `dt <= 0.5 ds / (1 + max|k_g|)`.
pub fn kdv_step(state: &FlowState, dt: f64) -> Result<FlowState> {
    let max_amp = state.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let gate = KDV_GATE_C2 * state.ds() / (1.0 + max_amp);
    if !(dt > 0.0) || dt > gate * (1.0 + 1e-12) {
        return Err(Error::StabilityViolation { dt, gate });
    }
    let n = state.grid_n;
    let work = KdvWork::new(n, state.length);
    // half-step and full-step linear propagators exp(-i k^3 dt/2)
    let mut e_r = Vec::with_capacity(n);
    let mut e_i = Vec::with_capacity(n);
    for j in 0..n {
        if j == n / 2 {
            e_r.push(1.0);
            e_i.push(0.0);
            continue;
        }
        let phase = -work.k[j].powi(3) * dt * 0.5;
        e_r.push(phase.cos());
        e_i.push(phase.sin());
    }
    let cmul = |ar: &[f64], ai: &[f64], br: &[f64], bi: &[f64]| {
        let mut rr = Vec::with_capacity(n);
        let mut ri = Vec::with_capacity(n);
        for i in 0..n {
            rr.push(ar[i] * br[i] - ai[i] * bi[i]);
            ri.push(ar[i] * bi[i] + ai[i] * br[i]);
        }
        (rr, ri)
    };
    let axpy = |ar: &[f64], ai: &[f64], c: f64, br: &[f64], bi: &[f64]| {
        let mut rr = Vec::with_capacity(n);
        let mut ri = Vec::with_capacity(n);
        for i in 0..n {
            rr.push(ar[i] + c * br[i]);
            ri.push(ai[i] + c * bi[i]);
        }
        (rr, ri)
    };
    let mut vr = state.values.clone();
    let mut vi = alloc::vec![0.0; n];
    work.fft.transform(&mut vr, &mut vi, false);
    let (e2r, e2i) = cmul(&e_r, &e_i, &e_r, &e_i);

    let (ar, ai) = work.nonlinear(&vr, &vi);
    let (t1r, t1i) = axpy(&vr, &vi, 0.5 * dt, &ar, &ai);
    let (t1r, t1i) = cmul(&e_r, &e_i, &t1r, &t1i);
    let (br, bi) = work.nonlinear(&t1r, &t1i);
    let (evr, evi) = cmul(&e_r, &e_i, &vr, &vi);
    let (t2r, t2i) = axpy(&evr, &evi, 0.5 * dt, &br, &bi);
    let (cr, ci) = work.nonlinear(&t2r, &t2i);
    let (e2vr, e2vi) = cmul(&e2r, &e2i, &vr, &vi);
    let (ecr, eci) = cmul(&e_r, &e_i, &cr, &ci);
    let (t3r, t3i) = axpy(&e2vr, &e2vi, dt, &ecr, &eci);
    let (dr, di) = work.nonlinear(&t3r, &t3i);

    // v <- E2 v + dt/6 (E2 a + 2 E (b + c) + d)
    let (e2ar, e2ai) = cmul(&e2r, &e2i, &ar, &ai);
    let (bcr, bci) = axpy(&br, &bi, 1.0, &cr, &ci);
    let (ebcr, ebci) = cmul(&e_r, &e_i, &bcr, &bci);
    let mut outr = Vec::with_capacity(n);
    let mut outi = Vec::with_capacity(n);
    for i in 0..n {
        outr.push(e2vr[i] + dt / 6.0 * (e2ar[i] + 2.0 * ebcr[i] + dr[i]));
        outi.push(e2vi[i] + dt / 6.0 * (e2ai[i] + 2.0 * ebci[i] + di[i]));
    }
    work.fft.transform(&mut outr, &mut outi, true);
    if outr.iter().any(|v| !v.is_finite()) {
        return Err(Error::StabilityViolation { dt, gate });
    }
    Ok(FlowState {
        grid_n: n,
        length: state.length,
        values: outr,
        time: state.time + dt,
        t0: state.t0,
        log_metric: state.log_metric.clone(),
    })
}

/// The three conserved integrals of the KdV flow on the periodic grid:
/// `(L, Int k_g ds, Int k_g^2 ds)` by the trapezoid rule (which is the
/// plain node sum times `ds` on a periodic grid, and spectrally accurate
/// for smooth data).
pub fn conserved_quantities(state: &FlowState) -> (f64, f64, f64) {
    let ds = state.ds();
    let s1: f64 = state.values.iter().sum();
    let s2: f64 = state.values.iter().map(|v| v * v).sum();
    (state.length, s1 * ds, s2 * ds)
}

/// Per-record diagnostics of a heat-flow run.
#[derive(Debug, Clone, Copy)]
pub struct HeatDiagnostics {
    pub time: f64,
    pub k_min: f64,
    pub k_max: f64,
    pub harnack_min: f64,
}

/// Outcome of a heat-flow run; `blowup` carries the terminal time and
/// magnitude when the cap was hit (diagnostics up to that point are kept).
#[derive(Debug, Clone)]
pub struct HeatRun {
    pub state: FlowState,
    pub diagnostics: Vec<HeatDiagnostics>,
    pub blowup: Option<(f64, f64)>,
}

fn heat_diag(state: &FlowState) -> Result<HeatDiagnostics> {
    let report = harnack_report(state)?;
    Ok(HeatDiagnostics {
        time: state.time,
        k_min: state.values.iter().cloned().fold(f64::INFINITY, f64::min),
        k_max: state.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
        harnack_min: report.min_over_grid,
    })
}

/// Drive the heat flow to `t_end` with fixed step `dt` (clipped at the
/// final step), recording diagnostics every `record_every` steps and at
/// the endpoints. `on_record` observes the state at each record point.
pub fn run_heat(
    initial: FlowState,
    t_end: f64,
    dt: f64,
    record_every: usize,
    mut on_record: impl FnMut(&FlowState),
) -> Result<HeatRun> {
    let mut state = initial;
    let mut diagnostics = alloc::vec![heat_diag(&state)?];
    on_record(&state);
    let mut step = 0usize;
    while state.time < t_end - 1e-15 * t_end.abs().max(1.0) {
        let h = dt.min(t_end - state.time);
        match heat_step(&state, h) {
            Ok(next) => state = next,
            Err(Error::Blowup { time, max }) => {
                return Ok(HeatRun { state, diagnostics, blowup: Some((time, max)) });
            }
            Err(e) => return Err(e),
        }
        step += 1;
        if step % record_every == 0 || state.time >= t_end - 1e-15 * t_end.abs().max(1.0) {
            diagnostics.push(heat_diag(&state)?);
            on_record(&state);
        }
    }
    Ok(HeatRun { state, diagnostics, blowup: None })
}

/// Per-record diagnostics of a KdV run; drifts are relative to
/// `max(1, |initial value|)`.
#[derive(Debug, Clone, Copy)]
pub struct KdvDiagnostics {
    pub time: f64,
    pub length: f64,
    pub int_kg: f64,
    pub int_kg2: f64,
    pub drift_length: f64,
    pub drift_kg: f64,
    pub drift_kg2: f64,
}

/// Drive the KdV flow to `t_end` with fixed step `dt` (clipped at the
/// final step), recording the conserved-quantity drifts.
pub fn run_kdv(
    initial: FlowState,
    t_end: f64,
    dt: f64,
    record_every: usize,
    mut on_record: impl FnMut(&FlowState),
) -> Result<(FlowState, Vec<KdvDiagnostics>)> {
    let base = conserved_quantities(&initial);
    let diag = |state: &FlowState| {
        let (l, i1, i2) = conserved_quantities(state);
        KdvDiagnostics {
            time: state.time,
            length: l,
            int_kg: i1,
            int_kg2: i2,
            drift_length: (l - base.0) / base.0.abs().max(1.0),
            drift_kg: (i1 - base.1) / base.1.abs().max(1.0),
            drift_kg2: (i2 - base.2) / base.2.abs().max(1.0),
        }
    };
    let mut state = initial;
    let mut out = alloc::vec![diag(&state)];
    on_record(&state);
    let mut step = 0usize;
    while state.time < t_end - 1e-15 * t_end.abs().max(1.0) {
        let h = dt.min(t_end - state.time);
        state = kdv_step(&state, h)?;
        step += 1;
        if step % record_every == 0 || state.time >= t_end - 1e-15 * t_end.abs().max(1.0) {
            out.push(diag(&state));
            on_record(&state);
        }
    }
    Ok((state, out))
}
