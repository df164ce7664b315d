//! q-Borel transforms and q-Laplace resummation.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::qcore::{lattice_sum, qpoch_ratio, theta_q, QContext, C64, I, PI};

const KERNEL_POLE_TOL: f64 = 1e-12;

/// A formal power series `sum A_n x^n` with coefficients given by a rule.
///
/// Each coefficient is kept as `c_n exp(e_n)` so that Gaussian factors
/// like `q^{-n(n+1)/2}` and their Borel twists cancel before exponentiation.
#[derive(Clone)]
pub struct FormalSeries {
    coeff: Arc<dyn Fn(usize) -> (C64, C64) + Send + Sync>,
}

impl std::fmt::Debug for FormalSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let head: Vec<C64> = (0..4).map(|n| self.coeff(n)).collect();
        f.debug_struct("FormalSeries").field("head", &head).finish()
    }
}

impl FormalSeries {
    pub fn new(coeff: impl Fn(usize) -> C64 + Send + Sync + 'static) -> Self {
        FormalSeries { coeff: Arc::new(move |n| (coeff(n), C64::new(0.0, 0.0))) }
    }

    /// Coefficients `c(n) exp(e(n))` given as the pair `(c(n), e(n))`.
    pub fn with_exponent(coeff: impl Fn(usize) -> (C64, C64) + Send + Sync + 'static) -> Self {
        FormalSeries { coeff: Arc::new(coeff) }
    }

    pub fn coeff(&self, n: usize) -> C64 {
        let (c, e) = (self.coeff)(n);
        c * e.exp()
    }

    fn map_exponent(&self, f: impl Fn(usize) -> Option<C64> + Send + Sync + 'static) -> Self {
        let inner = self.coeff.clone();
        FormalSeries::with_exponent(move |n| match f(n) {
            None => (C64::new(0.0, 0.0), C64::new(0.0, 0.0)),
            Some(d) => {
                let (c, e) = inner(n);
                (c, e + d)
            }
        })
    }

    /// The series `x^m`.
    pub fn monomial(m: usize) -> Self {
        FormalSeries::new(move |n| if n == m { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
    }

    /// `g0(x) = sum (-1)^n q^{-n(n+1)/2} x^n`, the divergent series behind mu.
    pub fn g0(ctx: &QContext) -> Self {
        let tau = ctx.tau();
        FormalSeries::with_exponent(move |n| {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let n = n as f64;
            (C64::new(sign, 0.0), -PI * I * tau * n * (n + 1.0))
        })
    }

    /// Coefficientwise product with `q^{order n(n-1)/2}`.
    pub fn twist(&self, order: i32, ctx: &QContext) -> Self {
        let tau = ctx.tau();
        self.map_exponent(move |n| {
            let nf = n as f64;
            Some(PI * I * tau * order as f64 * nf * (nf - 1.0))
        })
    }

    /// `x^m T^k` applied to the series, where `T f(x) = f(q x)`.
    pub fn shift_mul(&self, m: usize, k: i64, ctx: &QContext) -> Self {
        let inner = self.coeff.clone();
        let tau = ctx.tau();
        FormalSeries::with_exponent(move |n| {
            if n < m {
                return (C64::new(0.0, 0.0), C64::new(0.0, 0.0));
            }
            let j = n - m;
            let (c, e) = inner(j);
            (c, e + 2.0 * PI * I * tau * (k * j as i64) as f64)
        })
    }

    /// Sum the series at `x`, assuming it converges there.
    pub fn eval(&self, x: C64, ctx: &QContext) -> Result<C64> {
        let eps = ctx.policy().eps_term;
        let zero = C64::new(0.0, 0.0);
        let log_x = if x == zero { None } else { Some(x.ln()) };
        let mut s = crate::qcore::CompensatedSum::new();
        let mut quiet = 0;
        for n in 0..ctx.policy().max_index {
            let (c, e) = (self.coeff)(n);
            let t = match (n, log_x) {
                (_, _) if c == zero => zero,
                (0, _) => c * e.exp(),
                (_, None) => zero,
                (_, Some(l)) => c * (e + n as f64 * l).exp(),
            };
            if !t.is_finite() {
                return Err(Error::DivergentSeries(format!("power series overflows at x = {x}")));
            }
            s.add(t);
            if t.norm() <= eps * s.value().norm() {
                quiet += 1;
                if quiet >= 3 {
                    return Ok(s.value());
                }
            } else {
                quiet = 0;
            }
        }
        Err(Error::NonConvergent(format!("power series at x = {x}")))
    }
}

/// `B_q`: `A_n -> A_n q^{n(n-1)/2}`.
pub fn borel_transform(g: &FormalSeries, ctx: &QContext) -> FormalSeries {
    g.twist(1, ctx)
}

/// `B_q^N`, the N-fold Borel transform.
pub fn borel_transform_n(g: &FormalSeries, order: u32, ctx: &QContext) -> FormalSeries {
    g.twist(order as i32, ctx)
}

/// `1/theta_q(lambda q^n / x)` written as `exp(n ln r + pi i tau n(n-1)) / theta_q(r)`
/// with `r = lambda / x`.
struct Kernel {
    log_r: C64,
    inv_theta: C64,
    tau: C64,
}

impl Kernel {
    fn new(x: C64, lambda: C64, ctx: &QContext) -> Result<Self> {
        if x == C64::new(0.0, 0.0) || lambda == C64::new(0.0, 0.0) {
            return Err(Error::ZeroArgument("Laplace transform at zero".into()));
        }
        let r = lambda / x;
        let th = theta_q(r, ctx)?;
        // compare against the size theta_q has on the same circle
        let scale = theta_q(C64::new(r.norm(), 0.0), ctx)?.norm();
        if th.norm() < KERNEL_POLE_TOL * scale {
            return Err(Error::KernelPole(format!("lambda/x = {r} lies on -q^Z")));
        }
        Ok(Kernel { log_r: r.ln(), inv_theta: 1.0 / th, tau: ctx.tau() })
    }

    #[inline]
    fn weight(&self, n: i64) -> C64 {
        let nf = n as f64;
        (nf * self.log_r + PI * I * self.tau * nf * (nf - 1.0)).exp() * self.inv_theta
    }
}

/// `L_q(g)(x, lambda) = sum_n g(lambda q^n) / theta_q(lambda q^n / x)`.
pub fn laplace_eval<G>(g: G, x: C64, lambda: C64, ctx: &QContext) -> Result<C64>
where
    G: Fn(C64) -> Result<C64>,
{
    let k = Kernel::new(x, lambda, ctx)?;
    crate::qcore::bilateral_sum(ctx.policy(), "q-Laplace sum", |n| {
        let w = k.weight(n);
        if w == C64::new(0.0, 0.0) {
            return Ok(w);
        }
        Ok(g(lambda * (2.0 * PI * I * ctx.tau() * n as f64).exp())? * w)
    })
}

/// `L_q^N(g)(lambda_0, ..., lambda_N)`: sum over `Z^N` of
/// `g(lambda_0 q^{|n|}) prod_j 1/theta_q(lambda_{j-1} q^{n_j} / lambda_j)`.
pub fn laplace_n_eval<G>(g: G, lambdas: &[C64], ctx: &QContext) -> Result<C64>
where
    G: Fn(C64) -> Result<C64>,
{
    if lambdas.len() < 2 {
        return Err(Error::InvalidInput("need lambda_0 and at least one more lambda".into()));
    }
    let kernels = lambdas
        .windows(2)
        .map(|w| Kernel::new(w[1], w[0], ctx))
        .collect::<Result<Vec<_>>>()?;
    let tau = ctx.tau();
    let mut cache: HashMap<i64, C64> = HashMap::new();
    lattice_sum(kernels.len(), ctx.policy(), "q-Laplace sum", |n| {
        let mut w = C64::new(1.0, 0.0);
        for (k, &nj) in kernels.iter().zip(n) {
            w *= k.weight(nj);
        }
        if w == C64::new(0.0, 0.0) {
            return Ok(w);
        }
        let m: i64 = n.iter().sum();
        let gv = match cache.get(&m) {
            Some(v) => *v,
            None => {
                let v = g(lambdas[0] * (2.0 * PI * I * tau * m as f64).exp())?;
                cache.insert(m, v);
                v
            }
        };
        Ok(gv * w)
    })
}

/// `L_q^N o B_q^N` for a series whose N-fold Borel transform converges
/// everywhere it is needed.
pub fn resum(g: &FormalSeries, order: u32, lambdas: &[C64], ctx: &QContext) -> Result<C64> {
    if lambdas.len() != order as usize + 1 {
        return Err(Error::InvalidInput(format!("order {order} needs {} lambdas", order + 1)));
    }
    let b = borel_transform_n(g, order, ctx);
    laplace_n_eval(|xi| b.eval(xi, ctx), lambdas, ctx)
}

/// Closed form of `B_q(g0)`: `1/(1 + xi/q)`.
pub fn borel_g0(xi: C64, ctx: &QContext) -> Result<C64> {
    let d = C64::new(1.0, 0.0) + xi / ctx.q();
    if d.norm() < KERNEL_POLE_TOL {
        return Err(Error::PoleProximity("B(g0) at xi = -q".into()));
    }
    Ok(1.0 / d)
}

/// Closed form of the N-fold Borel image of the divergent series behind
/// `f_N`: `(-a xi q^{-N})_inf / (-xi q^{-N})_inf`.
pub fn borel_f_tilde(a: C64, order: u32, xi: C64, ctx: &QContext) -> Result<C64> {
    qpoch_ratio(a, -xi * ctx.qpowf(-(order as f64)), ctx)
}

/// The divergent series `sum (a)_n/(q)_n (-1)^n q^{-N n(n+1)/2} x^n`.
pub fn f_tilde_series(a: C64, order: u32, ctx: &QContext) -> FormalSeries {
    let c = *ctx;
    FormalSeries::with_exponent(move |n| {
        let poch = crate::qcore::qpoch_finite(a, n, &c) / crate::qcore::qpoch_finite(c.q(), n, &c);
        let nf = n as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        (sign * poch, -PI * I * c.tau() * order as f64 * nf * (nf + 1.0))
    })
}
