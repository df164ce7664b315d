//! A family of q-difference equations
//! `[T^{N-M} prod_s (1 - b_s T) - x prod_r (1 - a_r T)] f = 0`, `T f(x) = f(qx)`,
//! their convergent solutions at infinity, the Borel sums of the divergent
//! solutions at zero, and the connection formula relating the two.

use crate::borel::{laplace_n_eval, FormalSeries};
use crate::error::{Error, Result};
use crate::qcore::{basic_series, ln_theta_q, qpoch_finite, qpoch_inf, theta_q_ratio, QContext, C64, I, PI};

/// Below this `|z|` the hypergeometric series is summed directly.
const DIRECT_RADIUS: f64 = 0.5;
const DEGENERACY_TOL: f64 = 1e-9;

fn prod(xs: &[C64]) -> C64 {
    xs.iter().product()
}

fn one() -> C64 {
    C64::new(1.0, 0.0)
}

/// Is `r` within tolerance of an integral power of q?
fn in_q_lattice(r: C64, ctx: &QContext) -> bool {
    if r == C64::new(0.0, 0.0) {
        return false;
    }
    let k = (r.norm().ln() / ctx.q().norm().ln()).round();
    let rest = r * ctx.qpowf(-k);
    (rest - one()).norm() < DEGENERACY_TOL
}

fn check_generic(a: &[C64], ctx: &QContext) -> Result<()> {
    for (i, &ai) in a.iter().enumerate() {
        if ai == C64::new(0.0, 0.0) {
            return Err(Error::ParameterDegeneracy("a parameter is zero".into()));
        }
        for &aj in &a[..i] {
            if in_q_lattice(ai / aj, ctx) {
                return Err(Error::ParameterDegeneracy(format!("{ai}/{aj} is an integral power of q")));
            }
        }
    }
    Ok(())
}

fn poch_quot(num: C64, den: C64, ctx: &QContext) -> Result<C64> {
    let d = qpoch_inf(den, ctx);
    if d.norm() < 1e-13 {
        return Err(Error::PoleInDenominator(format!("(x;q)_inf vanishes at x = {den}")));
    }
    Ok(qpoch_inf(num, ctx) / d)
}

/// `exp(sum ln theta_q(num_i) - sum ln theta_q(den_i))`.
fn theta_quot(nums: &[C64], dens: &[C64], ctx: &QContext) -> Result<C64> {
    if nums.len() == 1 && dens.len() == 1 {
        return theta_q_ratio(nums[0], dens[0], ctx);
    }
    let mut l = C64::new(0.0, 0.0);
    for &x in nums {
        l += ln_theta_q(x, ctx)?;
    }
    for &x in dens {
        l -= ln_theta_q(x, ctx)?;
    }
    Ok(l.exp())
}

/// `_{N+1} phi_N(tops; bots; q; z)` (bottom parameters may be zero),
/// continued outside the unit disc.
///
/// For `|z| < 1/2` the series is summed. Otherwise each top parameter
/// contributes a term `theta_q(-a_j z)/theta_q(-z)` times a series in
/// `1/z`, which converges for large `|z|`.
pub fn phi_continued(tops: &[C64], bots: &[C64], z: C64, ctx: &QContext) -> Result<C64> {
    if tops.len() != bots.len() + 1 {
        return Err(Error::InvalidInput("need one more top than bottom parameter".into()));
    }
    if z.norm() < DIRECT_RADIUS {
        return basic_series(tops, bots, z, 0, ctx);
    }
    phi_watson(tops, bots, z, ctx)
}

/// The continuation formula used by [`phi_continued`] for large `|z|`.
pub fn phi_watson(tops: &[C64], bots: &[C64], z: C64, ctx: &QContext) -> Result<C64> {
    check_generic(tops, ctx)?;
    let q = ctx.q();
    let nz: Vec<C64> = bots.iter().copied().filter(|b| *b != C64::new(0.0, 0.0)).collect();
    let nzero = bots.len() - nz.len();
    let big_a = prod(tops);
    let bp = prod(&nz);
    let mut s = C64::new(0.0, 0.0);
    for (j, &aj) in tops.iter().enumerate() {
        let others: Vec<C64> = tops.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &a)| a).collect();
        let mut pre = one();
        for &b in &nz {
            pre *= poch_quot(b / aj, b, ctx)?;
        }
        for &ak in &others {
            pre *= poch_quot(ak, ak / aj, ctx)?;
        }
        let mut st = vec![aj];
        st.extend(nz.iter().map(|&b| aj * q / b));
        let sb: Vec<C64> = others.iter().map(|&ak| aj * q / ak).collect();
        let zz = q * bp * (aj * q).powi(nzero as i32) / (big_a * z);
        let ser = basic_series(&st, &sb, zz, nzero as i32, ctx)?;
        s += pre * theta_q_ratio(-aj * z, -z, ctx)? * ser;
    }
    Ok(s)
}

/// `N~phi_M(a; b_1..b_M; x_0..x_{N-M})`, the q-analogue of a Borel sum of
/// `_{N+1}phi_M` written through its convergent expansion at infinity.
pub fn n_tilde_phi_m(a: &[C64], b: &[C64], xs: &[C64], ctx: &QContext) -> Result<C64> {
    let n = a.len().checked_sub(1).ok_or_else(|| Error::InvalidInput("empty parameter list".into()))?;
    if b.len() >= a.len() || xs.len() != n - b.len() + 1 {
        return Err(Error::InvalidInput(format!(
            "N~phi_M with N = {n}, M = {} needs N - M + 1 variables, got {}",
            b.len(),
            xs.len()
        )));
    }
    check_generic(a, ctx)?;
    let q = ctx.q();
    let big_a = prod(a);
    let big_b = prod(b);
    let big_x = prod(xs);
    let z = big_b * q.powi(n as i32 + 1) / (big_a * big_x);
    let neg_x: Vec<C64> = xs.iter().map(|&x| -x).collect();
    let mut s = C64::new(0.0, 0.0);
    for (j, &aj) in a.iter().enumerate() {
        let mut pre = one();
        for &bs in b {
            pre *= poch_quot(bs * q / aj, bs * q, ctx)?;
        }
        for (r, &ar) in a.iter().enumerate() {
            if r != j {
                pre *= poch_quot(ar, ar / aj, ctx)?;
            }
        }
        let nums: Vec<C64> = xs.iter().map(|&x| -aj * x).collect();
        let th = theta_quot(&nums, &neg_x, ctx)?;
        let mut st = vec![aj];
        st.extend(b.iter().map(|&bs| aj / bs));
        let sb: Vec<C64> = a.iter().enumerate().filter(|(r, _)| *r != j).map(|(_, &ar)| aj * q / ar).collect();
        s += pre * th * basic_series(&st, &sb, z, 0, ctx)?;
    }
    Ok(s)
}

/// The equation `[T^{N-M} prod_{s=0}^M (1 - b_s T) - x prod_{r=0}^N (1 - a_r T)] f = 0`.
#[derive(Debug, Clone)]
pub struct QDiffProblem {
    pub n: usize,
    pub m: usize,
    pub a: Vec<C64>,
    pub b: Vec<C64>,
    pub ctx: QContext,
}

fn poly_mul(p: &[C64], r: &[C64]) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); p.len() + r.len() - 1];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in r.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl QDiffProblem {
    pub fn new(n: usize, m: usize, a: Vec<C64>, b: Vec<C64>, ctx: QContext) -> Result<Self> {
        if m >= n || a.len() != n + 1 || b.len() != m + 1 {
            return Err(Error::InvalidInput(format!(
                "need 0 <= M < N with N+1 a's and M+1 b's (N = {n}, M = {m}, {} a's, {} b's)",
                a.len(),
                b.len()
            )));
        }
        if b.iter().any(|x| *x == C64::new(0.0, 0.0)) {
            return Err(Error::ParameterDegeneracy("a b parameter is zero".into()));
        }
        check_generic(&a, &ctx)?;
        Ok(QDiffProblem { n, m, a, b, ctx })
    }

    fn order_gap(&self) -> usize {
        self.n - self.m
    }

    /// Both sides `(T^{N-M} prod(1 - b_s T) f, x prod(1 - a_r T) f)` at `x`.
    pub fn operator_sides<F>(&self, f: F, x: C64) -> Result<(C64, C64)>
    where
        F: Fn(C64) -> Result<C64>,
    {
        let mut p = vec![C64::new(0.0, 0.0); self.order_gap()];
        p.push(one());
        for &bs in &self.b {
            p = poly_mul(&p, &[one(), -bs]);
        }
        let mut r = vec![one()];
        for &ar in &self.a {
            r = poly_mul(&r, &[one(), -ar]);
        }
        let q = self.ctx.q();
        let vals = (0..p.len().max(r.len()))
            .map(|k| f(x * q.powi(k as i32)))
            .collect::<Result<Vec<_>>>()?;
        let lhs: C64 = p.iter().zip(&vals).map(|(c, v)| c * v).sum();
        let rhs: C64 = x * r.iter().zip(&vals).map(|(c, v)| c * v).sum::<C64>();
        Ok((lhs, rhs))
    }

    /// The solution `theta_q(a_j x)/theta_q(x) _{M+1}phi_N(...; z)` with
    /// `z = (-1)^{N-M} B q^{N+1}/(A x)`, convergent for large `|x|`.
    pub fn convergent_solution(&self, j: usize, x: C64) -> Result<C64> {
        let ctx = &self.ctx;
        let q = ctx.q();
        let aj = *self.a.get(j).ok_or_else(|| Error::InvalidInput(format!("no parameter a_{j}")))?;
        let sign = if self.order_gap() % 2 == 0 { 1.0 } else { -1.0 };
        let z = sign * prod(&self.b) * q.powi(self.n as i32 + 1) / (prod(&self.a) * x);
        let tops: Vec<C64> = self.b.iter().map(|&bs| aj / bs).collect();
        let bots: Vec<C64> = self.others(j).map(|ar| aj * q / ar).collect();
        Ok(theta_q_ratio(aj * x, x, ctx)? * basic_series(&tops, &bots, z, 0, ctx)?)
    }

    fn others(&self, j: usize) -> impl Iterator<Item = C64> + '_ {
        self.a.iter().enumerate().filter(move |(r, _)| *r != j).map(|(_, &a)| a)
    }

    fn b_index(&self, k: usize) -> Result<C64> {
        self.b.get(k).copied().ok_or_else(|| Error::InvalidInput(format!("no parameter b_{k}")))
    }

    /// The divergent series
    /// `_{N+1}phi_M({a_r/b_k}; {b_s q/b_k}_{s != k}; q; (-b_k/q)^{N-M} x)`.
    pub fn divergent_series(&self, k: usize) -> Result<FormalSeries> {
        let bk = self.b_index(k)?;
        let ctx = self.ctx;
        let q = ctx.q();
        let tops: Vec<C64> = self.a.iter().map(|&a| a / bk).collect();
        let bots: Vec<C64> = self.b.iter().enumerate().filter(|(s, _)| *s != k).map(|(_, &b)| b * q / bk).collect();
        let gap = self.order_gap() as i32;
        let base = (-bk / q).powi(gap);
        Ok(FormalSeries::new(move |n| {
            let mut c = one();
            for &t in &tops {
                c *= qpoch_finite(t, n, &ctx);
            }
            let mut d = qpoch_finite(q, n, &ctx);
            for &b in &bots {
                d *= qpoch_finite(b, n, &ctx);
            }
            let nf = n as f64;
            let sign = if (n as i32 * gap) % 2 == 0 { 1.0 } else { -1.0 };
            let quad = (-PI * I * ctx.tau() * gap as f64 * nf * (nf - 1.0)).exp();
            c / d * sign * quad * base.powi(n as i32)
        }))
    }

    /// `B^{N-M}` of [`Self::divergent_series`] at `xi`, continued to all `xi`.
    pub fn borel_image(&self, k: usize, xi: C64) -> Result<C64> {
        let bk = self.b_index(k)?;
        let q = self.ctx.q();
        let tops: Vec<C64> = self.a.iter().map(|&a| a / bk).collect();
        let mut bots: Vec<C64> = self.b.iter().enumerate().filter(|(s, _)| *s != k).map(|(_, &b)| b * q / bk).collect();
        bots.extend(std::iter::repeat(C64::new(0.0, 0.0)).take(self.order_gap()));
        phi_continued(&tops, &bots, (bk / q).powi(self.order_gap() as i32) * xi, &self.ctx)
    }

    /// `L^{N-M}` applied to [`Self::borel_image`].
    pub fn connection_lhs(&self, k: usize, lambdas: &[C64]) -> Result<C64> {
        self.check_lambdas(lambdas)?;
        laplace_n_eval(|xi| self.borel_image(k, xi), lambdas, &self.ctx)
    }

    /// The right hand side of the connection formula: a combination of the
    /// convergent solutions with theta function coefficients in the lambdas.
    pub fn connection_rhs(&self, k: usize, lambdas: &[C64]) -> Result<C64> {
        self.check_lambdas(lambdas)?;
        let ctx = &self.ctx;
        let q = ctx.q();
        let bk = self.b_index(k)?;
        let gap = self.order_gap();
        let big_a = prod(&self.a);
        let big_b = prod(&self.b);
        let sign = if gap % 2 == 0 { 1.0 } else { -1.0 };
        let z = sign * big_b * q.powi(self.n as i32 + 1) / (big_a * lambdas[gap]);
        let mut total = C64::new(0.0, 0.0);
        for (j, &aj) in self.a.iter().enumerate() {
            let mut pre = one();
            for (s, &bs) in self.b.iter().enumerate() {
                if s != k {
                    pre *= poch_quot(bs * q / aj, bs * q / bk, ctx)?;
                }
            }
            for ar in self.others(j) {
                pre *= poch_quot(ar / bk, ar / aj, ctx)?;
            }
            let mut nums = vec![-aj * bk.powi(gap as i32 - 1) * lambdas[0]];
            let mut dens = vec![-bk.powi(gap as i32) * lambdas[0]];
            for l in 1..=gap {
                nums.push(aj * lambdas[l] / (bk * lambdas[l - 1]));
                dens.push(lambdas[l] / lambdas[l - 1]);
            }
            let tops: Vec<C64> = self.b.iter().map(|&bs| aj / bs).collect();
            let bots: Vec<C64> = self.others(j).map(|ar| aj * q / ar).collect();
            total += pre * theta_quot(&nums, &dens, ctx)? * basic_series(&tops, &bots, z, 0, ctx)?;
        }
        Ok(total)
    }

    /// Relative mismatch between the two sides of the connection formula.
    pub fn connection_residual(&self, k: usize, lambdas: &[C64]) -> Result<f64> {
        let l = self.connection_lhs(k, lambdas)?;
        let r = self.connection_rhs(k, lambdas)?;
        Ok((l - r).norm() / l.norm().max(r.norm()).max(1e-30))
    }

    fn check_lambdas(&self, lambdas: &[C64]) -> Result<()> {
        if lambdas.len() != self.order_gap() + 1 {
            return Err(Error::InvalidInput(format!("need {} lambdas", self.order_gap() + 1)));
        }
        Ok(())
    }
}
