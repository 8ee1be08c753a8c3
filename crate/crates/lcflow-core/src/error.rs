/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    /// A vector constructor received a NaN or infinite component.
    #[error("vector component is not finite")]
    NonFinite,
    /// The plane misses the right half of the light-cone at this angle.
    #[error("plane section denominator {denom} is not positive")]
    NonPositiveDenominator { denom: f64 },
    /// Elliptic modulus outside `[0, 1)` (values within `1e-12` of 1 are
    /// rejected as well).
    #[error("elliptic modulus k = {k} outside [0, 1)")]
    ModulusOutOfRange { k: f64 },
    /// The third-kind integrand pole `1 - alpha^2 sin^2(theta) = 0` is
    /// crossed on the integration range.
    #[error("elliptic characteristic alpha^2 = {alpha2} hits a pole on the range")]
    CharacteristicPole { alpha2: f64 },
    /// Series arguments outside the `k^2 < alpha^2 < 1` validity region.
    #[error("series arguments alpha^2 = {alpha2}, k = {k} outside validity region")]
    ValidityRegionViolated { alpha2: f64, k: f64 },
    /// The cubic has a repeated or complex root pair; no periodic regime.
    #[error("cubic x^3 - {lambda}x - {mu} has no three distinct real roots; \
             need lambda > 3*(mu/2)^(2/3)")]
    DegenerateRoots { lambda: f64, mu: f64 },
    /// An operation restricted to `mu > 0` received `mu = {mu}`.
    #[error("operation requires mu > 0, got mu = {mu}")]
    NonPositiveMu { mu: f64 },
    /// The large-`lambda` series is gated to `lambda >= 30`.
    #[error("lambda = {lambda} below the series validity gate {gate}")]
    OutsideSeriesRange { lambda: f64, gate: f64 },
    /// Closed solitons need coprime winding data.
    #[error("p = {p} and q = {q} are not coprime")]
    NotCoprime { p: u32, q: u32 },
    /// `p/q` must lie strictly inside `(sqrt(2/3), 1)`.
    #[error("ratio p/q = {ratio} outside the open interval (sqrt(2/3), 1)")]
    RatioOutOfRange { ratio: f64 },
    /// The root bracket for the closed-soliton search could not be
    /// established or did not converge.
    #[error("failed to bracket/converge the progression-angle equation")]
    BracketFailure,
    /// Parameters violate the regime assumption of the requested case.
    #[error("parameters violate the regime assumption: {what}")]
    RegimeViolation { what: &'static str },
    /// Rotation case does not match the sign of `mu`.
    #[error("rotation case does not match sign(mu) for mu = {mu}")]
    CaseMismatch { mu: f64 },
    /// The trajectory integrator failed (step underflow or `psi <= 0`).
    #[error("trajectory integration failed at s = {s}")]
    IntegrationFailure { s: f64 },
    /// A curve expected to close did not (within tolerance).
    #[error("curve fails to close: endpoint gap {gap} exceeds tolerance {tol}")]
    NotClosed { gap: f64, tol: f64 },
    /// Axis coefficients violate `-c1^2 + c2^2 + c3^2 = -x1*x2*x3`.
    #[error("axis coefficients violate the constraint: residual {residual}")]
    ConstraintViolated { residual: f64 },
    /// The heat-flow Harnack monitor requires `k > 0` on the whole grid.
    #[error("curvature is not positive on the grid (min = {min})")]
    NonPositiveCurvature { min: f64 },
    /// The heat flow reached the blow-up cap; an expected terminal state of
    /// the reaction term.
    #[error("heat flow blew up at t = {time} (max k = {max})")]
    Blowup { time: f64, max: f64 },
    /// Step size violates the stability gate of the scheme.
    #[error("step dt = {dt} violates the stability gate {gate}")]
    StabilityViolation { dt: f64, gate: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;
