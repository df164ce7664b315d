use super::context::{QContext, C64};
use super::sum::CompensatedSum;
use crate::error::{Error, Result};

const TERMINATION_TOL: f64 = 1e-14;
const DENOM_POLE_TOL: f64 = 1e-12;

/// Smallest `n` with `a q^n = 1`, if any, within the index budget.
fn terminates_at(a: C64, ctx: &QContext) -> Option<usize> {
    let q = ctx.q();
    let mut t = a;
    for n in 0..=ctx.policy().max_index {
        if (C64::new(1.0, 0.0) - t).norm() < TERMINATION_TOL {
            return Some(n);
        }
        if t.norm() < 0.5 {
            return None;
        }
        t *= q;
    }
    None
}

/// `sum_n prod(tops)_n / ((q)_n prod(bots)_n) ((-1)^n q^{n(n-1)/2})^quad z^n`.
///
/// `q_hypergeometric` is the case `quad = s - r + 1`. Other values appear
/// in the analytic continuation formulas of `qdiff`.
pub fn basic_series(tops: &[C64], bots: &[C64], z: C64, quad: i32, ctx: &QContext) -> Result<C64> {
    let q = ctx.q();
    let one = C64::new(1.0, 0.0);
    let stop = tops.iter().filter_map(|&a| terminates_at(a, ctx)).min();
    if stop.is_none() {
        if quad < 0 && z != C64::new(0.0, 0.0) {
            return Err(Error::DivergentSeries(format!("non-terminating series with q-exponent {quad}")));
        }
        if quad == 0 && z.norm() >= 1.0 {
            return Err(Error::DivergentSeries(format!("|z| = {} outside the unit disc", z.norm())));
        }
    }
    let eps = ctx.policy().eps_term;
    let mut sum = CompensatedSum::new();
    let mut term = one;
    let mut qn = one;
    let mut quiet = 0;
    for n in 0..ctx.policy().max_index {
        sum.add(term);
        if stop == Some(n) || term == C64::new(0.0, 0.0) {
            return Ok(sum.value());
        }
        if term.norm() <= eps * sum.value().norm() {
            quiet += 1;
            if quiet >= 2 && n >= 2 {
                return Ok(sum.value());
            }
        } else {
            quiet = 0;
        }
        let mut ratio = z / (one - qn * q);
        for &a in tops {
            ratio *= one - a * qn;
        }
        for &b in bots {
            let d = one - b * qn;
            if d.norm() < DENOM_POLE_TOL {
                return Err(Error::PoleInDenominator(format!("1 - b q^{n} vanishes for b = {b}")));
            }
            ratio /= d;
        }
        if quad != 0 {
            ratio *= (-qn).powi(quad);
        }
        term *= ratio;
        qn *= q;
        if !term.is_finite() {
            return Err(Error::NonConvergent("overflow in basic hypergeometric terms".into()));
        }
    }
    Err(Error::NonConvergent(format!("basic hypergeometric series needs more than {} terms", ctx.policy().max_index)))
}

/// `_r phi_s(a; b; q; x)` with the standard `((-1)^n q^{n(n-1)/2})^{1+s-r}` factor.
pub fn q_hypergeometric(a: &[C64], b: &[C64], x: C64, ctx: &QContext) -> Result<C64> {
    basic_series(a, b, x, b.len() as i32 + 1 - a.len() as i32, ctx)
}
