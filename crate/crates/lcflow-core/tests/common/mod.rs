//! Oracles shared by the integration suites. Everything here computes
//! expected values by routes independent of the implementation under test:
//! adaptive Simpson and tanh-sinh quadrature, the arithmetic-geometric
//! mean, grid-and-bisection polynomial roots, and central differences.

#![allow(dead_code)]

/// Adaptive Simpson quadrature with absolute tolerance.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    fn rec(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
                + rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
        }
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(fa, fm, fb, a, b);
    rec(f, a, b, fa, fm, fb, whole, tol, 60)
}

/// Tanh-sinh (double-exponential) quadrature over `(a, b)` for integrands
/// given as a function of the *distances to the two endpoints*
/// (`x = a + da = b - db`), which sidesteps the floating-point cliff next
/// to the endpoints and so handles inverse-square-root singularities to
/// full accuracy. Levels are refined until two successive refinements
/// agree to `tol` (relative).
pub fn tanh_sinh_endpoints(f: &dyn Fn(f64, f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let r = 0.5 * (b - a);
    let t_max = 5.5f64;
    let mut previous = f64::NAN;
    let mut result = f64::NAN;
    for level in 3..=12u32 {
        let h = 8.0 / (1u64 << level) as f64;
        let n = (t_max / h).ceil() as i64;
        let mut acc = 0.0;
        for j in -n..=n {
            let t = j as f64 * h;
            let sh = 0.5 * std::f64::consts::PI * t.sinh();
            // 1 -/+ tanh(sh) without cancellation
            let q = (-2.0 * sh.abs()).exp();
            let near = 2.0 * r * q / (1.0 + q);
            let far = 2.0 * r / (1.0 + q);
            let (da, db) = if t >= 0.0 { (far, near) } else { (near, far) };
            let ch = sh.cosh();
            if !ch.is_finite() {
                continue;
            }
            let w = 0.5 * std::f64::consts::PI * t.cosh() / (ch * ch);
            if w == 0.0 || da == 0.0 || db == 0.0 {
                continue;
            }
            let v = f(da, db);
            if v.is_finite() {
                acc += w * v;
            }
        }
        result = acc * h * r;
        if (result - previous).abs() <= tol * result.abs().max(1.0) {
            return result;
        }
        previous = result;
    }
    result
}

/// Arithmetic-geometric mean.
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        if (an - bn).abs() <= f64::EPSILON * an {
            return an;
        }
        a = an;
        b = bn;
    }
    a
}

/// Roots of `x^3 - lambda x - mu` by sign-change scan plus bisection.
pub fn cubic_roots_bisection(lambda: f64, mu: f64) -> [f64; 3] {
    let bound = 2.0 * (lambda.abs().max(mu.abs()).max(1.0)).sqrt() + 1.0;
    let f = |x: f64| (x * x - lambda) * x - mu;
    let n = 20_000;
    let mut roots = Vec::new();
    let mut prev_x = -bound;
    let mut prev_f = f(prev_x);
    for i in 1..=n {
        let x = -bound + 2.0 * bound * i as f64 / n as f64;
        let fx = f(x);
        if prev_f == 0.0 {
            roots.push(prev_x);
        } else if prev_f.signum() != fx.signum() {
            let (mut lo, mut hi) = (prev_x, x);
            let mut flo = prev_f;
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if fm.signum() == flo.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_x = x;
        prev_f = fx;
    }
    assert_eq!(roots.len(), 3, "expected three real roots, found {roots:?}");
    [roots[0], roots[1], roots[2]]
}

/// Second-order central differences `(f', f'')` at `x`.
pub fn central_diff(f: &dyn Fn(f64) -> f64, x: f64, h: f64) -> (f64, f64) {
    let (fp, fm, f0) = (f(x + h), f(x - h), f(x));
    ((fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h))
}

/// Splitmix64: a tiny deterministic generator for reproducible test data.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in `[lo, hi)`.
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

#[track_caller]
pub fn assert_near(got: f64, want: f64, tol: f64, what: &str) {
    assert!(
        (got - want).abs() <= tol,
        "{what}: got {got}, want {want} (|diff| = {} > {tol})",
        (got - want).abs()
    );
}
