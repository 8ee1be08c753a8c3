//! Finite-difference stencils: Fornberg weights for arbitrary nodes,
//! 6th-order periodic derivatives, and nonuniform interior differentiation.

use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

/// Fornberg weights for the `m`-th derivative at `x0` from nodes `xs`.
///
/// Classic recurrence (Fornberg 1988); exact for polynomials of degree
/// `xs.len() - 1`.
pub fn fornberg_weights(x0: f64, xs: &[f64], m: usize) -> Vec<f64> {
    let n = xs.len();
    assert!(n > m, "need more nodes than the derivative order");
    // c[k][j]: weight of node j for derivative order k
    let mut c = alloc::vec![alloc::vec![0.0f64; n]; m + 1];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = xs[0] - x0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = xs[i] - x0;
        for j in 0..i {
            let c3 = xs[i] - xs[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c.swap_remove(m)
}

/// Derivative of given `order` (1..=3) of periodic samples by a centered
/// 9-point stencil (at least 6th-order accurate up to third derivatives).
pub fn periodic_derivative_fd6(values: &[f64], length: f64, order: usize) -> Vec<f64> {
    let n = values.len();
    assert!(n >= 16);
    let h = length / n as f64;
    let offsets: Vec<f64> = (-4..=4).map(|k| k as f64 * h).collect();
    let w = fornberg_weights(0.0, &offsets, order);
    let mut out = alloc::vec![0.0; n];
    for i in 0..n {
        let mut acc = 0.0;
        for (k, &wk) in w.iter().enumerate() {
            let j = (i + n + k - 4) % n;
            acc += wk * values[j];
        }
        out[i] = acc;
    }
    out
}

/// Interior derivatives of `ys` with respect to the strictly increasing,
/// generally nonuniform abscissae `xs`, using a centered stencil of
/// `2*half_width + 1` points. Entries closer than `half_width` to either
/// end are left as NaN.
pub fn derivative_nonuniform(xs: &[f64], ys: &[f64], order: usize, half_width: usize) -> Vec<f64> {
    let n = xs.len();
    assert_eq!(n, ys.len());
    let mut out = alloc::vec![f64::NAN; n];
    if n < 2 * half_width + 1 {
        return out;
    }
    for i in half_width..n - half_width {
        let lo = i - half_width;
        let hi = i + half_width;
        let w = fornberg_weights(xs[i], &xs[lo..=hi], order);
        let mut acc = 0.0;
        for (k, &wk) in w.iter().enumerate() {
            acc += wk * ys[lo + k];
        }
        out[i] = acc;
    }
    out
}
