//! Linear algebra of 3-dimensional Minkowski space: the Lorentzian scalar
//! product, the pseudo vector product, causal classification, the three
//! canonical one-parameter rotation groups and plane sections of the
//! light-cone.

use crate::{Error, Result};
#[allow(unused_imports)]
use num_traits::Float;

/// A vector of Minkowski 3-space; `t` is the time-like coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LVec3 {
    pub t: f64,
    pub y: f64,
    pub z: f64,
}

impl LVec3 {
    /// Checked constructor: rejects NaN and infinite components.
    pub fn new(t: f64, y: f64, z: f64) -> Result<Self> {
        if t.is_finite() && y.is_finite() && z.is_finite() {
            Ok(Self { t, y, z })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub const fn zero() -> Self {
        Self { t: 0.0, y: 0.0, z: 0.0 }
    }

    /// Euclidean norm of the raw components (used for tolerances and
    /// endpoint gaps; the Lorentzian norm is degenerate on the cone).
    pub fn norm_euclid(&self) -> f64 {
        (self.t * self.t + self.y * self.y + self.z * self.z).sqrt()
    }
}

impl core::ops::Add for LVec3 {
    type Output = LVec3;
    fn add(self, rhs: LVec3) -> LVec3 {
        LVec3 { t: self.t + rhs.t, y: self.y + rhs.y, z: self.z + rhs.z }
    }
}

impl core::ops::Sub for LVec3 {
    type Output = LVec3;
    fn sub(self, rhs: LVec3) -> LVec3 {
        LVec3 { t: self.t - rhs.t, y: self.y - rhs.y, z: self.z - rhs.z }
    }
}

impl core::ops::Mul<f64> for LVec3 {
    type Output = LVec3;
    fn mul(self, rhs: f64) -> LVec3 {
        LVec3 { t: self.t * rhs, y: self.y * rhs, z: self.z * rhs }
    }
}

impl core::ops::Neg for LVec3 {
    type Output = LVec3;
    fn neg(self) -> LVec3 {
        LVec3 { t: -self.t, y: -self.y, z: -self.z }
    }
}

/// Lorentzian scalar product `-u1 v1 + u2 v2 + u3 v3`.
pub fn inner_l(u: &LVec3, v: &LVec3) -> f64 {
    -u.t * v.t + u.y * v.y + u.z * v.z
}

/// Pseudo vector product `(u3 v2 - u2 v3, u3 v1 - u1 v3, u1 v2 - u2 v1)`.
pub fn cross_l(u: &LVec3, v: &LVec3) -> LVec3 {
    LVec3 {
        t: u.z * v.y - u.y * v.z,
        y: u.z * v.t - u.t * v.z,
        z: u.t * v.y - u.y * v.t,
    }
}

/// Causal type of a vector. The zero vector counts as space-like.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CausalClass {
    SpaceLike,
    TimeLike,
    LightLike,
}

impl CausalClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CausalClass::SpaceLike => "space-like",
            CausalClass::TimeLike => "time-like",
            CausalClass::LightLike => "light-like",
        }
    }
}

/// Classify by the sign of the Lorentzian square. Squares within
/// `1e-12 * max(1, |v|_euclid^2)` of zero count as light-like (exact zero
/// is unattainable in floating point); the zero vector is space-like.
pub fn causal_class(v: &LVec3) -> CausalClass {
    let q = inner_l(v, v);
    let scale = (v.t * v.t + v.y * v.y + v.z * v.z).max(1.0);
    if v.t == 0.0 && v.y == 0.0 && v.z == 0.0 {
        CausalClass::SpaceLike
    } else if q.abs() <= 1e-12 * scale {
        CausalClass::LightLike
    } else if q > 0.0 {
        CausalClass::SpaceLike
    } else {
        CausalClass::TimeLike
    }
}

/// One of the three canonical one-parameter rotation groups, stored as a
/// 3x3 matrix acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LRotation {
    m: [[f64; 3]; 3],
    axis_class: CausalClass,
    omega: f64,
}

/// Rotation around the canonical axis of the given causal class:
/// the `t`-axis (time-like), the `z`-axis (space-like), or `(1, 1, 0)`
/// (light-like), with group parameter `omega`.
pub fn rotation(axis_class: CausalClass, omega: f64) -> LRotation {
    let m = match axis_class {
        CausalClass::TimeLike => {
            let (s, c) = (omega.sin(), omega.cos());
            [[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]]
        }
        CausalClass::SpaceLike => {
            let (sh, ch) = (omega.sinh(), omega.cosh());
            [[ch, sh, 0.0], [sh, ch, 0.0], [0.0, 0.0, 1.0]]
        }
        CausalClass::LightLike => {
            let w2 = 0.5 * omega * omega;
            [
                [1.0 + w2, -w2, omega],
                [w2, 1.0 - w2, omega],
                [omega, -omega, 1.0],
            ]
        }
    };
    LRotation { m, axis_class, omega }
}

impl LRotation {
    pub fn matrix(&self) -> &[[f64; 3]; 3] {
        &self.m
    }

    pub fn axis_class(&self) -> CausalClass {
        self.axis_class
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &LVec3) -> LVec3 {
        let x = [v.t, v.y, v.z];
        let mut out = [0.0; 3];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.m[i][0] * x[0] + self.m[i][1] * x[1] + self.m[i][2] * x[2];
        }
        LVec3 { t: out[0], y: out[1], z: out[2] }
    }

    /// The `n`-fold iterate; one-parameter groups compose by adding the
    /// parameter, so this is exact rather than a repeated matrix product.
    pub fn iterate(&self, n: i32) -> LRotation {
        rotation(self.axis_class, self.omega * n as f64)
    }

    pub fn det(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
}

/// Radial coordinate `psi(theta)` of the section of the plane
/// `<x, v>_L = 1` with the right half-cone at polar angle `theta`.
///
/// Fails with [`Error::NonPositiveDenominator`] when the plane does not
/// meet the half-cone in that direction. By the plane-section property the
/// resulting curve has constant curvature `<v, v>_L / 2`.
pub fn plane_section_psi(v: &LVec3, theta: f64) -> Result<f64> {
    let denom = -v.t + v.y * theta.cos() + v.z * theta.sin();
    if denom > 0.0 {
        Ok(1.0 / denom)
    } else {
        Err(Error::NonPositiveDenominator { denom })
    }
}
