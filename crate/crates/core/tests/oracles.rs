//! Values computed independently with 30-digit arithmetic (direct series,
//! erf sums and adaptive quadrature) and frozen here.

use mu_lab::completion::{mordell_h, mordell_h_info, mordell_h_panels, r_function};
use mu_lab::mu::{hat_mu_n_eval, mu_n_eval, mu_zwegers};
use mu_lab::qcore::{dedekind_eta, jacobi_theta, jacobi_theta_series, qpoch_inf, theta_q, theta_q_series};
use mu_lab::{QContext, C64};

fn ctx() -> QContext {
    QContext::new(C64::new(0.1, 1.1)).unwrap()
}

fn u() -> C64 {
    C64::new(0.23, 0.11)
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn vartheta_matches_frozen_value() {
    let want = C64::new(-0.57057834131627793, -0.26831404711358105);
    assert!(rel(jacobi_theta(u(), &ctx()), want) < 1e-13);
}

#[test]
fn theta_q_matches_frozen_value() {
    let want = C64::new(1.7011663989336433, 0.40077923603652627);
    assert!(rel(theta_q(C64::new(0.7, 0.4), &ctx()).unwrap(), want) < 1e-13);
}

#[test]
fn eta_at_i_is_gamma_quarter_expression() {
    let c = QContext::new(C64::new(0.0, 1.0)).unwrap();
    let want = C64::new(0.76822542232605666, 0.0);
    assert!(rel(dedekind_eta(&c), want) < 1e-14);
}

#[test]
fn q_pochhammer_matches_frozen_value() {
    let c = ctx();
    let want = C64::new(0.99919370326763679, -0.00058652998217335544);
    assert!(rel(qpoch_inf(c.q(), &c), want) < 1e-14);
}

#[test]
fn mu_matches_frozen_value() {
    let want = C64::new(-0.29576175101896454, 0.59856418282982642);
    let got = mu_zwegers(u(), C64::new(-0.17, 0.3), &ctx()).unwrap();
    assert!(rel(got, want) < 1e-12);
}

#[test]
fn r_matches_erf_sum() {
    let want = C64::new(0.24387553821082557, 0.07608989914538382);
    assert!(rel(r_function(u(), &ctx()).unwrap(), want) < 1e-12);
}

#[test]
fn h_matches_adaptive_quadrature() {
    let want = C64::new(0.68658530979616893, 0.070422577250221541);
    assert!(rel(mordell_h(u(), &ctx()).unwrap(), want) < 1e-11);
}

#[test]
fn h_stable_under_panel_doubling() {
    let c = ctx();
    let (v, info) = mordell_h_info(u(), &c).unwrap();
    let (w, _) = mordell_h_panels(u(), &c, 2 * info.panels);
    assert!(rel(v, w) < 1e-10);
}

#[test]
fn mu2_matches_direct_lattice_sum() {
    let us = [C64::new(0.21, 0.05), C64::new(-0.13, 0.12), C64::new(0.34, -0.07)];
    let want = C64::new(0.98100902387358974, -1.9868156000128242);
    assert!(rel(mu_n_eval(&us, &ctx()).unwrap(), want) < 1e-11);
}

#[test]
fn hat_mu2_matches_direct_lattice_sum() {
    let us = [C64::new(0.21, 0.05), C64::new(-0.13, 0.12), C64::new(0.34, -0.07)];
    let want = C64::new(-0.27251857991376447, -2.176089857430176);
    let got = hat_mu_n_eval(&us, C64::new(0.6, 0.1), &ctx()).unwrap();
    assert!(rel(got, want) < 1e-11);
}

#[test]
fn series_and_products_agree() {
    let c = ctx();
    for x in [C64::new(0.7, 0.4), C64::new(-1.3, 2.1), C64::new(0.05, -0.02)] {
        assert!(rel(theta_q(x, &c).unwrap(), theta_q_series(x, &c).unwrap()) < 1e-12);
    }
    for w in [u(), C64::new(-0.4, -0.9), C64::new(1.7, 1.3)] {
        assert!(rel(jacobi_theta(w, &c), jacobi_theta_series(w, &c).unwrap()) < 1e-12);
    }
}
