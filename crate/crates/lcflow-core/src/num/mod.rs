//! Small numerical kernels shared by the geometry and flow modules:
//! Gauss–Legendre rules, an adaptive panel integrator, an embedded
//! Runge–Kutta 5(4) pair, a radix-2 FFT and finite-difference stencils.

pub mod fd;
pub mod fft;
pub mod gauss;
pub mod quad;
pub mod rk;
