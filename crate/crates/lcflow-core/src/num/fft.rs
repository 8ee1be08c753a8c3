//! Radix-2 complex FFT and spectral differentiation on periodic grids.

use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

/// Precomputed twiddle factors for a power-of-two transform length.
pub struct Fft {
    n: usize,
    // twiddles for the forward transform, e^{-2 pi i j / n}, j < n/2
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl Fft {
    pub fn new(n: usize) -> Self {
        assert!(n.is_power_of_two() && n >= 2, "FFT length must be a power of two");
        let mut cos = Vec::with_capacity(n / 2);
        let mut sin = Vec::with_capacity(n / 2);
        for j in 0..n / 2 {
            let ang = -2.0 * core::f64::consts::PI * j as f64 / n as f64;
            cos.push(ang.cos());
            sin.push(ang.sin());
        }
        Self { n, cos, sin }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// In-place transform of `re + i*im`; `inverse` flips the twiddle sign
    /// and scales by `1/n`.
    pub fn transform(&self, re: &mut [f64], im: &mut [f64], inverse: bool) {
        let n = self.n;
        assert_eq!(re.len(), n);
        assert_eq!(im.len(), n);
        // bit-reversal permutation
        let mut j = 0usize;
        for i in 0..n - 1 {
            if i < j {
                re.swap(i, j);
                im.swap(i, j);
            }
            let mut m = n >> 1;
            while m >= 1 && j & m != 0 {
                j ^= m;
                m >>= 1;
            }
            j |= m;
        }
        // butterflies
        let mut len = 2;
        while len <= n {
            let half = len / 2;
            let stride = n / len;
            for start in (0..n).step_by(len) {
                for k in 0..half {
                    let (wr, mut wi) = (self.cos[k * stride], self.sin[k * stride]);
                    if inverse {
                        wi = -wi;
                    }
                    let a = start + k;
                    let b = a + half;
                    let tr = wr * re[b] - wi * im[b];
                    let ti = wr * im[b] + wi * re[b];
                    re[b] = re[a] - tr;
                    im[b] = im[a] - ti;
                    re[a] += tr;
                    im[a] += ti;
                }
            }
            len <<= 1;
        }
        if inverse {
            let s = 1.0 / n as f64;
            for v in re.iter_mut() {
                *v *= s;
            }
            for v in im.iter_mut() {
                *v *= s;
            }
        }
    }

    /// Spectral derivative of given `order` of a real periodic sample vector
    /// over a period of `length`. The Nyquist mode is zeroed for odd orders.
    pub fn derivative(&self, values: &[f64], length: f64, order: u32) -> Vec<f64> {
        let n = self.n;
        assert_eq!(values.len(), n);
        let mut re = values.to_vec();
        let mut im = alloc::vec![0.0; n];
        self.transform(&mut re, &mut im, false);
        let base = 2.0 * core::f64::consts::PI / length;
        for j in 0..n {
            let kj = if j <= n / 2 { j as isize } else { j as isize - n as isize };
            if order % 2 == 1 && j == n / 2 {
                re[j] = 0.0;
                im[j] = 0.0;
                continue;
            }
            let k = base * kj as f64;
            // multiply by (i k)^order
            let (mr, mi) = match order % 4 {
                0 => (k.powi(order as i32), 0.0),
                1 => (0.0, k.powi(order as i32)),
                2 => (-k.powi(order as i32), 0.0),
                _ => (0.0, -k.powi(order as i32)),
            };
            let (r, i) = (re[j], im[j]);
            re[j] = mr * r - mi * i;
            im[j] = mr * i + mi * r;
        }
        self.transform(&mut re, &mut im, true);
        re
    }
}
