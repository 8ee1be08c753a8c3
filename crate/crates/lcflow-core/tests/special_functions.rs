//! Oracle equivalence for the special-function kernel: every integral is
//! checked against independent quadrature of its defining integrand, the
//! complete integral against the arithmetic-geometric mean, and the series
//! coefficients against their printed closed forms.

mod common;

use common::{adaptive_simpson, agm, assert_near};
use lcflow_core::ellip::{
    ellip_f, ellip_k, ellip_pi, jacobi_am, jacobi_sn_cn_dn, pi_series_complete, PiSeriesCoeffs,
};
use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

fn f_integrand(k: f64) -> impl Fn(f64) -> f64 {
    move |t: f64| 1.0 / (1.0 - (k * t.sin()).powi(2)).sqrt()
}

fn pi_integrand(alpha2: f64, k: f64) -> impl Fn(f64) -> f64 {
    move |t: f64| {
        let s2 = t.sin().powi(2);
        1.0 / ((1.0 - alpha2 * s2) * (1.0 - (k * k) * s2).sqrt())
    }
}

#[test]
fn first_kind_matches_quadrature_on_grid() {
    for &k in &[0.0, 0.2, 0.45, 0.6, 0.8, 0.9, 0.95] {
        for &phi in &[0.3, 0.7, 0.8, 1.1, 1.4, FRAC_PI_2] {
            let oracle = adaptive_simpson(&f_integrand(k), 0.0, phi, 1e-13);
            assert_near(ellip_f(phi, k).unwrap(), oracle, 1e-10, &format!("F({phi},{k})"));
        }
    }
}

#[test]
fn complete_first_kind_matches_agm_and_quadrature() {
    for &k in &[0.1, 0.3, 0.5, std::f64::consts::FRAC_1_SQRT_2, 0.9, 0.95] {
        let via_agm = FRAC_PI_2 / agm(1.0, (1.0 - k * k).sqrt());
        assert_near(ellip_k(k).unwrap(), via_agm, 1e-13, &format!("K({k}) vs AGM"));
    }
    // quadrature oracle for the large-modulus case
    let oracle = adaptive_simpson(&f_integrand(0.95), 0.0, FRAC_PI_2, 1e-13);
    assert_near(ellip_k(0.95).unwrap(), oracle, 1e-10, "K(0.95) vs quadrature");
}

#[test]
fn third_kind_matches_quadrature_on_grid() {
    for &alpha2 in &[-0.5, 0.0, 0.3, 0.6, 0.9] {
        for &k in &[0.0, 0.4, 0.8] {
            for &phi in &[0.5, 1.0, FRAC_PI_2] {
                let oracle = adaptive_simpson(&pi_integrand(alpha2, k), 0.0, phi, 1e-13);
                assert_near(
                    ellip_pi(phi, alpha2, k).unwrap(),
                    oracle,
                    1e-10,
                    &format!("Pi({phi},{alpha2},{k})"),
                );
            }
        }
    }
}

#[test]
fn third_kind_degenerations() {
    // Pi(phi, 0, k) = F(phi, k)
    assert_near(
        ellip_pi(1.0, 0.0, 0.4).unwrap(),
        ellip_f(1.0, 0.4).unwrap(),
        1e-15,
        "Pi(1,0,0.4) = F(1,0.4)",
    );
    // Pi(pi/2, 0, 0) = pi/2
    assert_near(ellip_pi(FRAC_PI_2, 0.0, 0.0).unwrap(), FRAC_PI_2, 1e-15, "Pi(pi/2,0,0)");
    // F(pi/2, k) = K(k)
    assert_near(
        ellip_f(FRAC_PI_2, 0.6).unwrap(),
        ellip_k(0.6).unwrap(),
        1e-15,
        "F(pi/2,k) = K(k)",
    );
}

#[test]
fn jacobi_identities_on_grid() {
    for &k in &[0.0, 0.3, 0.54, 0.7, 0.9, 0.99] {
        for &u in &[-2.3, -0.9, 0.0, 0.4, 1.1, 2.8, 5.5] {
            let (sn, cn, dn) = jacobi_sn_cn_dn(u, k).unwrap();
            assert_near(sn * sn + cn * cn, 1.0, 1e-12, "sn^2 + cn^2");
            assert_near(dn * dn + k * k * sn * sn, 1.0, 1e-12, "dn^2 + k^2 sn^2");
        }
    }
}

#[test]
fn jacobi_periodicity() {
    for &k in &[0.3, 0.54, 0.8] {
        let quarter = ellip_k(k).unwrap();
        for &u in &[0.2, 1.0, 2.6] {
            let (sn, _, _) = jacobi_sn_cn_dn(u, k).unwrap();
            let (sn4, _, _) = jacobi_sn_cn_dn(u + 4.0 * quarter, k).unwrap();
            assert_near(sn4, sn, 1e-10, "sn(u + 4K) = sn(u)");
        }
    }
}

#[test]
fn amplitude_inverts_first_kind() {
    // am is the inverse of F in u: F(am(u,k), k) = u
    for &k in &[0.2, 0.6, 0.9] {
        for &u in &[0.3, 1.2, 2.9, 6.4] {
            let phi = jacobi_am(u, k).unwrap();
            assert_near(ellip_f(phi, k).unwrap(), u, 1e-12, &format!("F(am({u},{k}))"));
        }
    }
}

#[test]
fn amplitude_is_monotone() {
    let k = 0.77;
    let mut prev = f64::NEG_INFINITY;
    for i in 0..200 {
        let u = -3.0 + i as f64 * 0.05;
        let phi = jacobi_am(u, k).unwrap();
        assert!(phi > prev, "am must increase: am({u}) = {phi} <= {prev}");
        prev = phi;
    }
}

#[test]
fn series_coefficients_match_printed_closed_forms() {
    for &alpha2 in &[0.3, 0.5, 0.7, 0.9] {
        let coeffs = PiSeriesCoeffs::new(alpha2, 6).unwrap();
        let s = (1.0 - alpha2).sqrt();
        let c1 = PI / (4.0 * alpha2) * (1.0 / s - 1.0);
        let c2 = 3.0 * PI / (32.0 * alpha2 * alpha2) * (2.0 / s - 2.0 - alpha2);
        let c3 = 5.0 * PI / (256.0 * alpha2.powi(3)) * (8.0 / s - 8.0 - 4.0 * alpha2 - 3.0 * alpha2 * alpha2);
        assert_near(coeffs.c[1], c1, 1e-13 * c1.abs(), "c1 closed form");
        assert_near(coeffs.c[2], c2, 1e-12 * c2.abs().max(1.0), "c2 closed form");
        assert_near(coeffs.c[3], c3, 1e-12 * c3.abs().max(1.0), "c3 closed form");
        for m in 0..5 {
            let r = coeffs.recurrence_residual(m);
            assert!(r.abs() < 1e-12 * coeffs.c[m].abs().max(1.0), "recurrence at m={m}: {r}");
        }
    }
    // the specific printed value c1(alpha^2 = 1/2) = (pi/2)(sqrt(2) - 1)
    let coeffs = PiSeriesCoeffs::new(0.5, 1).unwrap();
    assert_near(coeffs.c[1], FRAC_PI_2 * (SQRT_2 - 1.0), 1e-14, "c1(1/2)");
}

#[test]
fn series_converges_to_complete_third_kind() {
    let (alpha2, k) = (0.6, 0.3);
    let exact = ellip_pi(FRAC_PI_2, alpha2, k).unwrap();
    let mut prev_err = f64::INFINITY;
    for m_max in [0, 2, 4, 6, 8, 10] {
        let approx = pi_series_complete(alpha2, k, m_max).unwrap();
        let err = (approx - exact).abs();
        assert!(err < prev_err, "residual must shrink with m_max: {err} !< {prev_err}");
        prev_err = err;
    }
    assert!(prev_err < 1e-12, "converged residual {prev_err}");
    // truncation bound: the tail is geometric-ish in k^2
    let m8 = pi_series_complete(alpha2, k, 8).unwrap();
    assert!((m8 - exact).abs() < 1e-9, "m_max = 8 truncation {}", (m8 - exact).abs());
}
