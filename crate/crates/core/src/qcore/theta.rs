use super::context::{e2pi, epi, QContext, C64, I, PI};
use super::pochhammer::qpoch_inf;
use super::sum::bilateral_sum;
use crate::error::{Error, Result};

/// Guard threshold for `vartheta`, relative to `|q|^{1/8}`.
pub const THETA_POLE_GUARD: f64 = 1e-10;

fn theta_q_product(y: C64, ctx: &QContext) -> C64 {
    let q = ctx.q();
    qpoch_inf(q, ctx) * qpoch_inf(-y, ctx) * qpoch_inf(-q / y, ctx)
}

// x = y q^k with |q| < |y| <= 1
fn reduce(x: C64, ctx: &QContext) -> (C64, i64) {
    let lq = ctx.q().norm().ln();
    let k = (x.norm().ln() / lq).floor();
    let k = if k.is_finite() { k as i64 } else { 0 };
    (x * e2pi(-(k as f64) * ctx.tau()), k)
}

/// `ln` of `y^{-k} q^{-k(k-1)/2}`, the factor picked up by moving `y` to `y q^k`.
fn shift_log(y: C64, k: i64, ctx: &QContext) -> C64 {
    let kf = k as f64;
    -kf * y.ln() - PI * I * ctx.tau() * kf * (kf - 1.0)
}

/// `theta_q(x) = (q; q)_inf (-x; q)_inf (-q/x; q)_inf`.
///
/// Arguments far from the unit circle are first moved into the annulus
/// `|q| < |x| <= 1` with the quasi-periodicity `theta_q(qx) = theta_q(x)/x`.
pub fn theta_q(x: C64, ctx: &QContext) -> Result<C64> {
    if x == C64::new(0.0, 0.0) || !x.is_finite() {
        return Err(Error::ZeroArgument(format!("theta_q needs a finite non-zero argument, got {x}")));
    }
    let (y, k) = reduce(x, ctx);
    let base = theta_q_product(y, ctx);
    if k == 0 {
        return Ok(base);
    }
    Ok(base * shift_log(y, k, ctx).exp())
}

/// Logarithm of `theta_q(x)` on some branch; finite even where
/// `theta_q(x)` itself would overflow.
pub fn ln_theta_q(x: C64, ctx: &QContext) -> Result<C64> {
    if x == C64::new(0.0, 0.0) || !x.is_finite() {
        return Err(Error::ZeroArgument(format!("theta_q needs a finite non-zero argument, got {x}")));
    }
    let (y, k) = reduce(x, ctx);
    let base = theta_q_product(y, ctx);
    if base.norm() < 1e-14 {
        return Err(Error::PoleProximity(format!("theta_q vanishes near {x}")));
    }
    Ok(shift_log(y, k, ctx) + base.ln())
}

/// `theta_q(a) / theta_q(b)` evaluated in log space.
pub fn theta_q_ratio(a: C64, b: C64, ctx: &QContext) -> Result<C64> {
    let (y, _) = reduce(a, ctx);
    if a != C64::new(0.0, 0.0) && theta_q_product(y, ctx).norm() < 1e-14 {
        return Ok(C64::new(0.0, 0.0));
    }
    Ok((ln_theta_q(a, ctx)? - ln_theta_q(b, ctx)?).exp())
}

/// `theta_q(x)` from its bilateral series, kept as an independent check.
pub fn theta_q_series(x: C64, ctx: &QContext) -> Result<C64> {
    if x == C64::new(0.0, 0.0) {
        return Err(Error::ZeroArgument("theta_q series at x = 0".into()));
    }
    let lx = x.ln();
    let tau = ctx.tau();
    bilateral_sum(ctx.policy(), "theta_q series", |n| {
        let n = n as f64;
        Ok((n * lx + PI * I * tau * n * (n - 1.0)).exp())
    })
}

/// Jacobi theta `vartheta(u; tau)` from the triple product, after reducing
/// `Im u` into one period.
pub fn jacobi_theta(u: C64, ctx: &QContext) -> C64 {
    let (val, _) = jacobi_theta_reduced(u, ctx);
    val
}

// returns the value and the size of the reduced product relative to |q|^{1/8}
fn jacobi_theta_reduced(u: C64, ctx: &QContext) -> (C64, f64) {
    let tau = ctx.tau();
    let k = (u.im / tau.im).round();
    let up = u - k * tau;
    let q = ctx.q();
    let x = e2pi(up);
    let prod = qpoch_inf(q, ctx) * qpoch_inf(x, ctx) * qpoch_inf(q / x, ctx);
    let base = -I * epi(-up) * ctx.qpowf(0.125) * prod;
    let scale = base.norm() / ctx.qabs_pow(0.125);
    if k == 0.0 {
        return (base, scale);
    }
    let sign = if (k as i64) % 2 == 0 { 1.0 } else { -1.0 };
    (sign * (-PI * I * k * k * tau - 2.0 * PI * I * k * up).exp() * base, scale)
}

/// `vartheta(u)`, refusing arguments within the pole guard of a lattice
/// point (these are about to be divided by).
pub fn vartheta_checked(u: C64, ctx: &QContext) -> Result<C64> {
    let (val, scale) = jacobi_theta_reduced(u, ctx);
    if scale < THETA_POLE_GUARD {
        return Err(Error::PoleProximity(format!("vartheta({u}) is within the pole guard")));
    }
    Ok(val)
}

/// `vartheta(u)` from the series over half-integers.
pub fn jacobi_theta_series(u: C64, ctx: &QContext) -> Result<C64> {
    let tau = ctx.tau();
    let shift = u + 0.5;
    bilateral_sum(ctx.policy(), "vartheta series", |n| {
        let nu = n as f64 + 0.5;
        Ok((PI * I * tau * nu * nu + 2.0 * PI * I * nu * shift).exp())
    })
}

/// Dedekind eta `q^{1/24} (q; q)_inf`.
pub fn dedekind_eta(ctx: &QContext) -> C64 {
    ctx.qpowf(1.0 / 24.0) * qpoch_inf(ctx.q(), ctx)
}
