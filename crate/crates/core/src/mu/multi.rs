use std::collections::HashMap;

use super::{checked_inv, theta_q_checked};
use crate::error::{Error, Result};
use crate::qcore::{e2pi, epi, lattice_sum, qpoch_ratio, vartheta_checked, QContext, C64, I, PI};

fn need_vars(n: usize, what: &str) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("{what} needs at least two variables")));
    }
    Ok(())
}

/// `f_N(x_0, ..., x_N; a)`: the sum over `n in Z^N` of
/// `(-a x_0 q^{|n|})_inf / (-x_0 q^{|n|})_inf prod_j x_j^{-n_j} q^{n_j(n_j+1)/2} / theta_q(x_j)`.
pub fn f_n_eval(xs: &[C64], a: C64, ctx: &QContext) -> Result<C64> {
    need_vars(xs.len(), "f_N")?;
    let rest = &xs[1..];
    let inv_th = rest
        .iter()
        .map(|&x| theta_q_checked(x, ctx).map(|t| 1.0 / t))
        .collect::<Result<Vec<_>>>()?;
    let logs: Vec<C64> = rest.iter().map(|x| x.ln()).collect();
    let pref: C64 = inv_th.iter().product();
    let tau = ctx.tau();
    let x0 = xs[0];
    let mut cache: HashMap<i64, C64> = HashMap::new();
    let s = lattice_sum(rest.len(), ctx.policy(), "f_N", |n| {
        let mut e = C64::new(0.0, 0.0);
        for (j, &nj) in n.iter().enumerate() {
            let nf = nj as f64;
            e += -nf * logs[j] + PI * I * tau * nf * (nf + 1.0);
        }
        let w = e.exp();
        if w == C64::new(0.0, 0.0) {
            return Ok(w);
        }
        let m: i64 = n.iter().sum();
        let r = match cache.get(&m) {
            Some(v) => *v,
            None => {
                let v = qpoch_ratio(a, -x0 * e2pi(m as f64 * tau), ctx)?;
                cache.insert(m, v);
                v
            }
        };
        Ok(r * w)
    })?;
    Ok(s * pref)
}

/// `f_1(x_0, x_1; a)`.
pub fn f1_eval(x0: C64, x1: C64, a: C64, ctx: &QContext) -> Result<C64> {
    f_n_eval(&[x0, x1], a, ctx)
}

/// `mu_N(u_0, ..., u_N; tau)`.
pub fn mu_n_eval(us: &[C64], ctx: &QContext) -> Result<C64> {
    mu_n_like(us, ctx, |m| {
        let d = C64::new(1.0, 0.0) - e2pi(us[0] + m as f64 * ctx.tau());
        Ok(epi(us[0]) * checked_inv(d, "mu_N")?)
    })
}

// sum over Z^N of head(|n|) prod_j (-1)^{n_j} e^{-2 pi i n_j u_j} q^{n_j(n_j+1)/2} / vartheta(u_j)
fn mu_n_like<H>(us: &[C64], ctx: &QContext, head: H) -> Result<C64>
where
    H: Fn(i64) -> Result<C64>,
{
    need_vars(us.len(), "mu_N")?;
    let rest = &us[1..];
    let mut pref = C64::new(1.0, 0.0);
    for &u in rest {
        pref /= vartheta_checked(u, ctx)?;
    }
    let tau = ctx.tau();
    let mut cache: HashMap<i64, C64> = HashMap::new();
    let s = lattice_sum(rest.len(), ctx.policy(), "mu_N", |n| {
        let mut e = C64::new(0.0, 0.0);
        let mut odd = false;
        for (j, &nj) in n.iter().enumerate() {
            let nf = nj as f64;
            odd ^= nj % 2 != 0;
            e += -2.0 * PI * I * nf * rest[j] + PI * I * tau * nf * (nf + 1.0);
        }
        let w = if odd { -e.exp() } else { e.exp() };
        if w == C64::new(0.0, 0.0) {
            return Ok(w);
        }
        let m: i64 = n.iter().sum();
        let h = match cache.get(&m) {
            Some(v) => *v,
            None => {
                let v = head(m)?;
                cache.insert(m, v);
                v
            }
        };
        Ok(h * w)
    })?;
    Ok(s * pref)
}

/// `hat mu_N(u; alpha) = i^N e^{pi i alpha u} q^{-N/8} f_N(-e^{2 pi i u_j}; q^alpha)`
/// with `u = u_0 + ... + u_N`. Equals `mu_N` at `alpha = 1`.
pub fn hat_mu_n_eval(us: &[C64], alpha: C64, ctx: &QContext) -> Result<C64> {
    need_vars(us.len(), "hat mu_N")?;
    let n = (us.len() - 1) as i32;
    let u: C64 = us.iter().sum();
    let xs: Vec<C64> = us.iter().map(|&x| -e2pi(x)).collect();
    let f = f_n_eval(&xs, ctx.qpow(alpha), ctx)?;
    Ok(I.powi(n) * epi(alpha * u) * ctx.qpowf(-(n as f64) / 8.0) * f)
}

/// How the Pochhammer numerator in the series form of `hat mu_N` is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HatMuReading {
    /// numerator argument `e^{2 pi i (u_0 + alpha tau)} q^{|n|}`
    Exponential,
    /// numerator argument `e^{pi i u_0 + alpha tau} q^{|n|}`
    Typeset,
}

/// `hat mu_N` from its defining series
/// `e^{pi i (alpha-1) u} sum (A q^{|n|})_inf e^{pi i u_0} / (e^{2 pi i u_0} q^{|n|})_inf prod_j (...)`.
pub fn hat_mu_n_series(us: &[C64], alpha: C64, reading: HatMuReading, ctx: &QContext) -> Result<C64> {
    need_vars(us.len(), "hat mu_N")?;
    let u: C64 = us.iter().sum();
    let x0 = e2pi(us[0]);
    let big_a = match reading {
        HatMuReading::Exponential => e2pi(us[0] + alpha * ctx.tau()),
        HatMuReading::Typeset => (PI * I * us[0] + alpha * ctx.tau()).exp(),
    };
    let s = mu_n_like(us, ctx, |m| {
        let y = x0 * e2pi(m as f64 * ctx.tau());
        Ok(epi(us[0]) * qpoch_ratio(big_a / x0, y, ctx)?)
    })?;
    Ok(epi((alpha - 1.0) * u) * s)
}
