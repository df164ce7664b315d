use super::checked_inv;
use crate::error::Result;
use crate::qcore::{bilateral_sum, e2pi, epi, qpoch_ratio, vartheta_checked, QContext, C64, I, PI};

/// Zwegers' `mu(u, v; tau)`.
pub fn mu_zwegers(u: C64, v: C64, ctx: &QContext) -> Result<C64> {
    let th = vartheta_checked(v, ctx)?;
    let x = e2pi(u);
    let tau = ctx.tau();
    let s = bilateral_sum(ctx.policy(), "mu", |n| {
        let nf = n as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let d = C64::new(1.0, 0.0) - x * e2pi(nf * tau);
        Ok(sign * (2.0 * PI * I * nf * v + PI * I * tau * nf * (nf + 1.0)).exp() * checked_inv(d, "mu")?)
    })?;
    Ok(epi(u) / th * s)
}

/// `mu(u, v; alpha)`, which reduces to `mu(u, v)` at `alpha = 1`.
pub fn mu_generalized(u: C64, v: C64, alpha: C64, ctx: &QContext) -> Result<C64> {
    let th = vartheta_checked(v, ctx)?;
    let x = e2pi(u);
    let a = ctx.qpow(alpha);
    let tau = ctx.tau();
    let s = bilateral_sum(ctx.policy(), "generalized mu", |n| {
        let nf = n as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let w = (2.0 * PI * I * (nf + 0.5) * v + PI * I * tau * nf * (nf + 1.0)).exp();
        Ok(sign * w * qpoch_ratio(a, x * ctx.qpow(nf + 1.0 - alpha), ctx)?)
    })?;
    Ok(epi(alpha * (u - v)) / th * s)
}
