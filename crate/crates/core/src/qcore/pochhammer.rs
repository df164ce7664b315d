use super::context::{QContext, C64};
use crate::error::{Error, Result};

const POLE_TOL: f64 = 1e-12;
// a product over |q|-geometric factors never needs more than this
const MAX_FACTORS: usize = 1_000_000;

/// `(x; q)_inf`.
pub fn qpoch_inf(x: C64, ctx: &QContext) -> C64 {
    let q = ctx.q();
    let eps = ctx.policy().eps_term;
    let mut p = C64::new(1.0, 0.0);
    let mut t = x;
    for _ in 0..MAX_FACTORS {
        p *= C64::new(1.0, 0.0) - t;
        if t.norm() < eps {
            break;
        }
        t *= q;
    }
    p
}

/// `(x; q)_n` for a non-negative integer n.
pub fn qpoch_finite(x: C64, n: usize, ctx: &QContext) -> C64 {
    let q = ctx.q();
    let mut p = C64::new(1.0, 0.0);
    let mut t = x;
    for _ in 0..n {
        p *= C64::new(1.0, 0.0) - t;
        t *= q;
    }
    p
}

/// `(a x; q)_inf / (x; q)_inf`, formed factor by factor so that large
/// cancelling products never appear.
pub fn qpoch_ratio(a: C64, x: C64, ctx: &QContext) -> Result<C64> {
    let q = ctx.q();
    let eps = ctx.policy().eps_term;
    let one = C64::new(1.0, 0.0);
    let mut p = one;
    let mut num = a * x;
    let mut den = x;
    for _ in 0..MAX_FACTORS {
        let d = one - den;
        if d.norm() < POLE_TOL * den.norm().max(1.0) {
            return Err(Error::PoleProximity(format!("(x;q)_inf vanishes near x = {x}")));
        }
        p *= (one - num) / d;
        if num.norm() < eps && den.norm() < eps {
            break;
        }
        num *= q;
        den *= q;
    }
    Ok(p)
}

/// `(x; q)_alpha = (x; q)_inf / (q^alpha x; q)_inf` for complex alpha.
pub fn qpoch_order(x: C64, alpha: C64, ctx: &QContext) -> Result<C64> {
    let qa = ctx.qpow(alpha);
    qpoch_ratio(C64::new(1.0, 0.0) / qa, qa * x, ctx)
}
