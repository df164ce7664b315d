//! Non-holomorphic completions: the error function E, Zwegers' R, the
//! Mordell integral h, and the completed mu, mu_N and M_N.

use std::num::NonZeroUsize;
use std::sync::OnceLock;

use errorfunctions::RealErrorFunctions;
use gauss_quad::legendre::GaussLegendre;

use crate::error::{Error, Result};
use crate::mu::{m_n_vector, mu_n_eval, mu_zwegers};
use crate::qcore::{e2pi, epi, CompensatedSum, QContext, C64, I, PI};

const NODES_PER_PANEL: usize = 32;
const MAX_DOUBLINGS: usize = 7;
const QUAD_TOL: f64 = 1e-13;
// ln of the relative size at which tails are dropped
const TAIL_LOG: f64 = 45.0;

/// `E(x) = 2 int_0^x e^{-pi t^2} dt = erf(sqrt(pi) x)`.
pub fn gauss_e(x: f64) -> f64 {
    RealErrorFunctions::erf(x * PI.sqrt())
}

/// Zwegers' `R(u; tau)`: the sum over `nu in 1/2 + Z` of
/// `(sgn nu - E((nu + Im u/Im tau) sqrt(2 Im tau))) (-1)^{nu-1/2} e^{-pi i nu^2 tau - 2 pi i nu u}`.
///
/// Terms where `sgn nu - E` is a difference of nearly equal numbers are
/// rewritten with `erfcx` and their Gaussian folded into the exponent.
pub fn r_function(u: C64, ctx: &QContext) -> Result<C64> {
    let tau = ctx.tau();
    let y = tau.im;
    let a = u.im / y;
    let half_width = (TAIL_LOG / (PI * y)).sqrt();
    let k_max = (a.abs() + half_width).ceil() + 2.0;
    if k_max > ctx.policy().max_index as f64 {
        return Err(Error::NonConvergent(format!("R needs {k_max} terms at Im tau = {y}")));
    }
    let k_max = k_max as i64;
    let s2y = (2.0 * y).sqrt();
    let sp = PI.sqrt();
    let mut sum = CompensatedSum::new();
    for k in -k_max - 1..=k_max {
        let nu = k as f64 + 0.5;
        let x = (nu + a) * s2y;
        let sg = nu.signum();
        let sign = if k.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let phase = -2.0 * PI * I * nu * u - PI * I * tau * nu * nu;
        let t = if x * sg > 0.0 {
            sg * RealErrorFunctions::erfcx(x.abs() * sp) * (phase - PI * x * x).exp()
        } else {
            (sg - gauss_e(x)) * phase.exp()
        };
        sum.add(sign * t);
    }
    Ok(sum.value())
}

/// Diagnostics from evaluating the Mordell integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureInfo {
    pub half_width: f64,
    pub panels: usize,
    /// change between the last two panel counts, relative to `int |f|`
    pub last_change: f64,
}

fn gl_nodes() -> &'static [(f64, f64)] {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| {
        GaussLegendre::new(NonZeroUsize::new(NODES_PER_PANEL).unwrap())
            .as_node_weight_pairs()
            .to_vec()
    })
}

#[inline]
fn h_integrand(x: f64, u: C64, tau: C64) -> C64 {
    // 1/cosh(pi x) = 2 e^{-pi|x|} / (1 + e^{-2 pi |x|})
    let ax = x.abs();
    let e = (PI * I * tau * x * x - 2.0 * PI * x * u - PI * ax).exp();
    e * (2.0 / (1.0 + (-2.0 * PI * ax).exp()))
}

fn h_half_width(u: C64, tau: C64) -> f64 {
    let t = tau.im;
    let b = 2.0 * u.re.abs() - 1.0;
    let x = (b + (b * b + 4.0 * t * TAIL_LOG / PI).sqrt()) / (2.0 * t);
    x.max(8.0)
}

/// Composite Gauss-Legendre rule on `[-X, X]` with the given panel count.
/// Returns the integral and `int |f|`.
pub fn mordell_h_panels(u: C64, ctx: &QContext, panels: usize) -> (C64, f64) {
    let tau = ctx.tau();
    let xw = h_half_width(u, tau);
    let width = 2.0 * xw / panels as f64;
    let mut sum = CompensatedSum::new();
    for p in 0..panels {
        let mid = -xw + (p as f64 + 0.5) * width;
        for &(node, w) in gl_nodes() {
            let x = mid + 0.5 * width * node;
            sum.add(0.5 * width * w * h_integrand(x, u, tau));
        }
    }
    (sum.value(), sum.abs_sum())
}

/// The Mordell integral `h(u; tau) = int_R e^{pi i tau x^2 - 2 pi x u} / cosh(pi x) dx`,
/// with diagnostics.
pub fn mordell_h_info(u: C64, ctx: &QContext) -> Result<(C64, QuadratureInfo)> {
    let xw = h_half_width(u, ctx.tau());
    let mut panels = (2.0 * xw).ceil() as usize;
    let (mut prev, _) = mordell_h_panels(u, ctx, panels);
    for _ in 0..MAX_DOUBLINGS {
        panels *= 2;
        let (cur, abs) = mordell_h_panels(u, ctx, panels);
        if !cur.is_finite() {
            break;
        }
        let change = (cur - prev).norm() / abs.max(f64::MIN_POSITIVE);
        if change <= QUAD_TOL {
            return Ok((cur, QuadratureInfo { half_width: xw, panels, last_change: change }));
        }
        prev = cur;
    }
    Err(Error::QuadratureFailure(format!("h({u}) did not stabilize under panel doubling")))
}

/// The Mordell integral `h(u; tau)`.
pub fn mordell_h(u: C64, ctx: &QContext) -> Result<C64> {
    mordell_h_info(u, ctx).map(|(v, _)| v)
}

/// `mu(u, v) + (i/2) R(u - v)`.
pub fn mu_completed(u: C64, v: C64, ctx: &QContext) -> Result<C64> {
    Ok(mu_zwegers(u, v, ctx)? + 0.5 * I * r_function(u - v, ctx)?)
}

fn vector_prefactor(u: C64, k: usize, n: usize, tau: C64) -> C64 {
    let (kf, nf) = (k as f64, n as f64);
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    sign * e2pi(-kf * u / nf) * (-PI * I * tau * kf * kf / nf).exp()
}

/// `R_N(u)` with entries `(-1)^k e^{-2 pi i k u/N} q^{-k^2/(2N)} R(u + k tau + (N+1)/2; N tau)`.
pub fn r_n_vector(u: C64, n: usize, ctx: &QContext) -> Result<Vec<C64>> {
    let tau = ctx.tau();
    let big = ctx.at(n as f64 * tau)?;
    (0..n)
        .map(|k| {
            let arg = u + k as f64 * tau + (n as f64 + 1.0) / 2.0;
            Ok(vector_prefactor(u, k, n, tau) * r_function(arg, &big)?)
        })
        .collect()
}

/// `H_N(u)` with entries `(-1)^k e^{-2 pi i k u/N} q^{-k^2/(2N)} h(u + k tau - (N-1)/2; N tau)`.
pub fn h_n_vector(u: C64, n: usize, ctx: &QContext) -> Result<Vec<C64>> {
    let tau = ctx.tau();
    let big = ctx.at(n as f64 * tau)?;
    (0..n)
        .map(|k| {
            let arg = u + k as f64 * tau - (n as f64 - 1.0) / 2.0;
            Ok(vector_prefactor(u, k, n, tau) * mordell_h(arg, &big)?)
        })
        .collect()
}

/// `M_N(u) + (i/2) R_N(u_0 + ... + u_N)`.
pub fn m_n_completed(us: &[C64], ctx: &QContext) -> Result<Vec<C64>> {
    let n = us.len().saturating_sub(1);
    let m = m_n_vector(us, ctx)?;
    let r = r_n_vector(us.iter().sum(), n, ctx)?;
    Ok(m.iter().zip(&r).map(|(a, b)| a + 0.5 * I * b).collect())
}

/// `mu_N(u) + (i/2) R(u + (N+1)/2; N tau)`.
pub fn mu_n_completed(us: &[C64], ctx: &QContext) -> Result<C64> {
    let n = us.len().saturating_sub(1) as f64;
    let big = ctx.at(n * ctx.tau())?;
    let u: C64 = us.iter().sum();
    Ok(mu_n_eval(us, ctx)? + 0.5 * I * r_function(u + (n + 1.0) / 2.0, &big)?)
}

/// `sum_{j=1}^m (-1)^j e^{pi i (2j-1)^2/(4m)} h(u + (2j-1)/(2m) - 1/2; N tau - 1/m)`,
/// the error term in the modular law of `mu_N` for odd N.
pub fn h_n_combination(u: C64, n: usize, m: usize, ctx: &QContext) -> Result<C64> {
    let mf = m as f64;
    let shifted = ctx.at(n as f64 * ctx.tau() - 1.0 / mf)?;
    let mut s = C64::new(0.0, 0.0);
    for j in 1..=m {
        let c = (2 * j - 1) as f64;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        s += sign * epi(C64::new(c * c / (4.0 * mf), 0.0)) * mordell_h(u + c / (2.0 * mf) - 0.5, &shifted)?;
    }
    Ok(s)
}

/// `sum_{j=1}^{2m} e^{pi i (2j-1)^2/(8m)} h(u + (2j-1)/(4m) - 1/2; N tau - 1/(2m))`,
/// the even N counterpart of `h_n_combination`.
pub fn h_n_combination_even(u: C64, n: usize, m: usize, ctx: &QContext) -> Result<C64> {
    let mf = m as f64;
    let shifted = ctx.at(n as f64 * ctx.tau() - 1.0 / (2.0 * mf))?;
    let mut s = C64::new(0.0, 0.0);
    for j in 1..=2 * m {
        let c = (2 * j - 1) as f64;
        s += epi(C64::new(c * c / (8.0 * mf), 0.0)) * mordell_h(u + c / (4.0 * mf) - 0.5, &shifted)?;
    }
    Ok(s)
}
