//! Embedded Dormand–Prince 5(4) integrator with adaptive step control.

use crate::{Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

/// Dormand–Prince 5(4) pair with standard PI-free step control.
///
/// `rtol`/`atol` enter the usual mixed error norm; a step is accepted when
/// the norm of the embedded error estimate is at most 1.
#[derive(Debug, Clone, Copy)]
pub struct Dopri5 {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
}

impl Default for Dopri5 {
    fn default() -> Self {
        Self { rtol: 1e-12, atol: 1e-14, max_steps: 50_000_000 }
    }
}

// Butcher tableau of the Dormand–Prince 5(4) pair.
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
// 5th-order weights equal the last A row (FSAL); error weights are b5 - b4.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

impl Dopri5 {
    /// Integrate `y' = f(t, y)` from `t0` to `t_end` (forward only),
    /// invoking `on_node` at every requested node of `nodes` (strictly
    /// increasing, all within `(t0, t_end]`). The step size is clamped so
    /// nodes are hit exactly.
    pub fn integrate_nodes<const N: usize>(
        &self,
        mut f: impl FnMut(f64, &[f64; N]) -> [f64; N],
        t0: f64,
        y0: [f64; N],
        nodes: &[f64],
        mut on_node: impl FnMut(f64, &[f64; N]),
    ) -> Result<[f64; N]> {
        let t_end = *nodes.last().expect("at least one node");
        let mut t = t0;
        let mut y = y0;
        let mut k1 = f(t, &y);
        let mut h = ((t_end - t0) * 1e-4).min(1e-2).max(1e-12);
        let mut node_ix = 0;
        let mut steps = 0usize;
        while node_ix < nodes.len() {
            if steps >= self.max_steps {
                return Err(Error::IntegrationFailure { s: t });
            }
            steps += 1;
            let target = nodes[node_ix];
            let mut hitting = false;
            if t + h >= target - 1e-14 * target.abs().max(1.0) {
                h = target - t;
                hitting = true;
            }
            if h <= (t.abs().max(1.0)) * 1e-15 {
                // node reached by underflow of the remaining gap
                on_node(target, &y);
                node_ix += 1;
                continue;
            }
            let mut ks = [[0.0; N]; 7];
            ks[0] = k1;
            for stage in 0..6 {
                let mut ys = y;
                for (j, yj) in ys.iter_mut().enumerate() {
                    let mut acc = 0.0;
                    for (m, km) in ks.iter().enumerate().take(stage + 1) {
                        acc += A[stage][m] * km[j];
                    }
                    *yj += h * acc;
                }
                ks[stage + 1] = f(t + C[stage] * h, &ys);
            }
            // 5th-order solution is the stage-6 argument (FSAL): rebuild it.
            let mut y5 = y;
            for (j, yj) in y5.iter_mut().enumerate() {
                let mut acc = 0.0;
                for m in 0..6 {
                    acc += A[5][m] * ks[m][j];
                }
                *yj += h * acc;
            }
            // error estimate
            let mut err_norm_sq = 0.0;
            for j in 0..N {
                let mut e = 0.0;
                for (m, km) in ks.iter().enumerate() {
                    e += E[m] * km[j];
                }
                e *= h;
                let scale = self.atol + self.rtol * y[j].abs().max(y5[j].abs());
                err_norm_sq += (e / scale) * (e / scale);
            }
            let err = (err_norm_sq / N as f64).sqrt();
            if err <= 1.0 || h.abs() <= (t.abs().max(1.0)) * 4.0 * f64::EPSILON {
                t += h;
                y = y5;
                k1 = ks[6];
                if !y.iter().all(|v| v.is_finite()) {
                    return Err(Error::IntegrationFailure { s: t });
                }
                if hitting {
                    t = target;
                    on_node(target, &y);
                    node_ix += 1;
                }
            }
            let factor = if !err.is_finite() {
                0.2
            } else if err > 0.0 {
                (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
            } else {
                5.0
            };
            h = (h * factor).min(t_end - t + 1e-30).max(1e-300);
        }
        Ok(y)
    }

    /// Integrate to a single endpoint.
    pub fn integrate<const N: usize>(
        &self,
        f: impl FnMut(f64, &[f64; N]) -> [f64; N],
        t0: f64,
        y0: [f64; N],
        t_end: f64,
    ) -> Result<[f64; N]> {
        self.integrate_nodes(f, t0, y0, &[t_end], |_, _| {})
    }
}
