use super::{cplx, cx, permutation, sgn, shifted, th, total, xvars, Reg};
use crate::identities::{DomainSpec, ParamPoint, Sides, Suite, TOL_SERIES};
use crate::mu::{f1_eval, f_n_eval, hat_mu_n_eval, mu_n_eval, nu_eval};
use crate::qcore::{dedekind_eta, e2pi, epi, lattice_sum, q_hypergeometric, qpoch_inf, theta_q, QContext, C64, I};
use crate::{Error, Result};

fn phi11(a: C64, x: C64, ctx: &QContext) -> Result<C64> {
    q_hypergeometric(&[a], &[cplx(0.0, 0.0)], x, ctx)
}

fn permuted(us: &[C64], seed: u64) -> Vec<C64> {
    permutation(us.len(), seed).into_iter().map(|i| us[i]).collect()
}

/// Ŝ quadratic form `sum n_i^2 + (sum n_i)^2`.
/// `w * 1phi1(top; 0; q; z)` for a lattice weight `w`.
///
/// On far shells the 1phi1 peak grows like `|q|^{-m^2/2}` while the weight
/// decays faster, so an overflowing series under an underflowing weight
/// contributes nothing.
fn weighted_phi11(w: C64, top: C64, z: C64, c: &QContext) -> Result<C64> {
    match phi11(top, z, c) {
        Ok(f) => Ok(w * f),
        Err(Error::NonConvergent(_)) if w.norm() < 1e-250 => Ok(C64::new(0.0, 0.0)),
        Err(e) => Err(e),
    }
}

fn shat_quad(n: &[i64]) -> f64 {
    let s: i64 = n.iter().sum();
    (n.iter().map(|k| k * k).sum::<i64>() + s * s) as f64
}

pub(super) fn register(r: &mut Reg) {
    for n in 1..=3usize {
        hat_mu(r, n);
        mu_n(r, n);
    }
    for n in 2..=3usize {
        f_n(r, n);
    }
}

fn hat_mu(r: &mut Reg, n: usize) {
    let s = Suite::Mulmu;
    let dom = || DomainSpec::standard(n + 1);
    let h = |us: &[C64], al: C64, c: &QContext| hat_mu_n_eval(us, al, c);

    r.add(format!("MULMUA-1.N{n}"), "mul mua relation 1", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let j = 1 + (p.choice as usize) % n;
        Ok(Sides::scalar(h(&shifted(&p.u, 0, p.tau), p.alpha, &c)?, h(&shifted(&p.u, j, p.tau), p.alpha, &c)?))
    });
    r.add(format!("MULMUA-2.N{n}"), "mul mua relation 2", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let (al, u) = (p.alpha, total(&p.u));
        let a = c.qpow(al);
        let lhs = (a - 1.0) * h(&p.u, al + 1.0, &c)? + epi(u) * h(&p.u, al, &c)?;
        Ok(Sides::scalar(lhs, epi(al * p.tau + u) * h(&shifted(&p.u, 0, p.tau), al, &c)?))
    });
    r.add(format!("MULMUA-3.N{n}"), "mul mua relation 3", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let lhs_rhs = mulmua3(p, n, &c, true)?;
        Ok(Sides::scalar(lhs_rhs.0, lhs_rhs.1))
    });
    r.add(format!("MULMUA-4.N{n}"), "mul mua relation 4", s, TOL_SERIES, DomainSpec::standard(n + 2), move |p| {
        let c = cx(p)?;
        let (al, tau) = (p.alpha, p.tau);
        let us = &p.u[..=n];
        let z = p.u[n + 1];
        let u = total(us);
        let mut moved = us.to_vec();
        moved[0] -= z;
        moved[1] += z;
        let lhs = h(us, al, &c)? - h(&moved, al, &c)?;
        let q = c.q();
        let mut pre = epi((al - 1.0) * u + al * tau) * th(al * tau, &c)? * th(z, &c)? * th(z - us[0] + us[1], &c)?
            * qpoch_inf(q, &c)
            / (th(z - us[0], &c)? * th(z + us[1], &c)? * qpoch_inf(q * c.qpow(-al), &c));
        for &x in us {
            pre /= th(x, &c)?;
        }
        let vv: Vec<C64> = (1..n).map(|j| us[0] + us[1] - us[j + 1]).collect();
        let top = q * c.qpow(-al);
        let arg = e2pi(us[0] + us[1] + al * tau);
        let sum = lattice_sum(n - 1, c.policy(), "mul mua relation 4", |k| {
            let lin: C64 = k.iter().zip(&vv).map(|(&m, &v)| m as f64 * v).sum();
            let m: i64 = k.iter().sum();
            weighted_phi11(epi(tau * shat_quad(k)) * e2pi(lin), top, arg * e2pi(tau * m as f64), &c)
        })?;
        Ok(Sides::scalar(lhs, pre * sum))
    });
    r.add(format!("MULMUA-5.N{n}"), "mul mua relation 5", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        Ok(Sides::scalar(h(&p.u, p.alpha, &c)?, h(&permuted(&p.u, p.choice), p.alpha, &c)?))
    });
    r.add(format!("MULMUA-6.N{n}"), "mul mua relation 6", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let (l, r_) = mulmua6(p, n, &c, 1.0, 1.0)?;
        Ok(Sides::scalar(l, r_))
    });
}

/// Sides of the order `N+1` operator for `hat mu_N`; `x_scale` multiplies
/// `e^{2 pi i u}` to allow the alternative reading with `X_N`.
pub(super) fn mulmua3(p: &ParamPoint, n: usize, c: &QContext, x_on_constant: bool) -> Result<(C64, C64)> {
    let (al, tau) = (p.alpha, p.tau);
    // X_N = prod x_j with x_j = -e^{2 pi i u_j}
    let x = sgn(n as i64 + 1) * e2pi(total(&p.u));
    let t = |k: usize| hat_mu_n_eval(&shifted(&p.u, 0, tau * k as f64), al, c);
    let m0 = t(0)?;
    let nf = n as f64;
    let lhs = t(n + 1)? + epi(al * tau * (nf + 2.0)) * x * t(1)?;
    let last = if x_on_constant { x * m0 } else { m0 };
    let rhs = epi(al * tau) * t(n)? + epi(al * tau * (nf + 1.0)) * last;
    Ok((lhs, rhs))
}

/// Reflection relation with the two `alpha` increments exposed for the
/// competing readings.
pub(super) fn mulmua6(p: &ParamPoint, n: usize, c: &QContext, d_left: f64, d_right: f64) -> Result<(C64, C64)> {
    let (al, tau) = (p.alpha, p.tau);
    let u = total(&p.u);
    let w: Vec<C64> = p.u.iter().map(|&x| -al * tau - x).collect();
    let lhs = e2pi(al * u) * epi(tau * al * al * (n as f64 + 1.0)) * hat_mu_n_eval(&w, al + d_left, c)?;
    let mut pre = cplx(sgn(n as i64 + 1), 0.0);
    for &x in &p.u {
        pre *= th(x, c)? / th(x + al * tau, c)?;
    }
    Ok((lhs, pre * hat_mu_n_eval(&p.u, al + d_right, c)?))
}

fn mu_n(r: &mut Reg, n: usize) {
    let s = Suite::Mulmu;
    let dom = || DomainSpec::standard(n + 1);
    let nf = n as f64;
    r.add(format!("MUN-1.N{n}"), "mun relation 1", s, TOL_SERIES, dom(), |p| {
        let c = cx(p)?;
        Ok(Sides::scalar(mu_n_eval(&shifted(&p.u, 0, cplx(1.0, 0.0)), &c)?, -mu_n_eval(&p.u, &c)?))
    });
    r.add(format!("MUN-2.N{n}"), "mun relation 2", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let u = total(&p.u);
        let lhs = mu_n_eval(&shifted(&p.u, 0, p.tau * nf), &c)?;
        let rhs = sgn(n as i64) * e2pi(u) * c.qpowf(nf / 2.0) * mu_n_eval(&p.u, &c)?
            + I.powu(n as u32) * epi(u) * c.qpowf(3.0 * nf / 8.0);
        Ok(Sides::scalar(lhs, rhs))
    });
    r.add(format!("MUN-OP.N{n}"), "mun relation 2", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let x = e2pi(total(&p.u));
        let g = |k: usize| mu_n_eval(&shifted(&p.u, 0, p.tau * k as f64), &c);
        let inner = |k: usize| -> Result<C64> {
            Ok(g(k + n)? - sgn(n as i64) * x * c.qpowf(k as f64 + nf / 2.0) * g(k)?)
        };
        Ok(Sides::scalar(inner(1)?, c.qpowf(0.5) * inner(0)?))
    });
    r.add(format!("MUN-3.N{n}"), "mun relation 3", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let j = 1 + (p.choice as usize) % n;
        let moved = shifted(&shifted(&p.u, 0, p.tau), j, -p.tau);
        Ok(Sides::scalar(mu_n_eval(&moved, &c)?, mu_n_eval(&p.u, &c)?))
    });
    r.add(format!("MUN-4.N{n}"), "mun relation 4", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let neg: Vec<C64> = p.u.iter().map(|&x| -x).collect();
        Ok(Sides::scalar(mu_n_eval(&neg, &c)?, sgn(n as i64 + 1) * mu_n_eval(&p.u, &c)?))
    });
    r.add(format!("MUN-5.N{n}"), "mun relation 5", s, TOL_SERIES, dom(), |p| {
        let c = cx(p)?;
        Ok(Sides::scalar(mu_n_eval(&p.u, &c)?, mu_n_eval(&permuted(&p.u, p.choice), &c)?))
    });
    r.add(format!("MUN-6.N{n}"), "mun relation 6", s, TOL_SERIES, DomainSpec::standard(n + 2), move |p| {
        let c = cx(p)?;
        let us = &p.u[..=n];
        let z = p.u[n + 1];
        let mut moved = us.to_vec();
        moved[0] -= z;
        moved[1] += z;
        let mut pre = I * dedekind_eta(&c).powu(3) * th(z, &c)? * th(z - us[0] + us[1], &c)?
            / (th(z - us[0], &c)? * th(z + us[1], &c)?);
        for &x in us {
            pre /= th(x, &c)?;
        }
        let rhs = mu_n_eval(us, &c)? + pre * nu_eval(us, 0, &c)?;
        Ok(Sides::scalar(mu_n_eval(&moved, &c)?, rhs))
    });
}

fn f_n(r: &mut Reg, n: usize) {
    let s = Suite::Mulmu;
    let dom = move || DomainSpec::standard(n + 1);

    // the fN 1 expansion, at a general `a`
    fn expansion(xs: &[C64], a: C64, c: &QContext) -> Result<C64> {
        let n = xs.len() - 1;
        let tau = c.tau();
        let mut thetas = Vec::with_capacity(n);
        for &x in &xs[1..n] {
            thetas.push(theta_q(x, c)?);
        }
        lattice_sum(n - 1, c.policy(), "fN expansion", |k| {
            let m: i64 = k.iter().sum();
            let mut t = f1_eval(xs[0] * e2pi(tau * m as f64), xs[n], a, c)?;
            for (j, &kj) in k.iter().enumerate() {
                let kf = kj as f64;
                t *= xs[j + 1].powi(-kj as i32) * epi(tau * kf * (kf + 1.0)) / thetas[j];
            }
            Ok(t)
        })
    }

    // the theta-sum correction in fN 2 (general `a`) or fNq 2 (`a = q`)
    fn correction(xs: &[C64], y: C64, a: Option<C64>, c: &QContext) -> Result<C64> {
        let n = xs.len() - 1;
        let q = c.q();
        let tau = c.tau();
        let t = |z: C64| theta_q(z, c);
        let (x0, xn) = (xs[0], xs[n]);
        let mut pre = t(-y)? * t(-xn * y / x0)? / (t(y / x0)? * t(xn * y)? * t(x0)? * t(xn)?);
        match a {
            Some(a) => pre *= qpoch_inf(q, c) * t(-a)? / qpoch_inf(q / a, c),
            None => {
                pre *= qpoch_inf(q, c).powu(3);
                for &x in &xs[1..n] {
                    pre /= t(x)?;
                }
            }
        }
        let mut thetas = Vec::with_capacity(n);
        for &x in &xs[1..n] {
            thetas.push(t(x)?);
        }
        let sum = lattice_sum(n - 1, c.policy(), "fN correction", |k| {
            let m: i64 = k.iter().sum();
            let mut term = epi(tau * shat_quad(k));
            for (j, &kj) in k.iter().enumerate() {
                term *= (-x0 * xn / xs[j + 1]).powi(kj as i32);
                if a.is_some() {
                    term /= thetas[j];
                }
            }
            match a {
                Some(a) => weighted_phi11(term, q / a, a * x0 * xn * e2pi(tau * m as f64), c),
                None => Ok(term),
            }
        })?;
        Ok(pre * sum)
    }

    fn scale(xs: &[C64], j: usize, f: C64) -> Vec<C64> {
        let mut v = xs.to_vec();
        v[j] *= f;
        v
    }

    for (tagged, a_is_q) in [("FN", false), ("FNQ", true)] {
        let a_of = move |p: &ParamPoint, c: &QContext| if a_is_q { c.q() } else { c.qpow(p.alpha) };
        let tag = |k: u32| if a_is_q { format!("eq: fNq {k}") } else { format!("eq: fN {k}") };
        r.add(format!("{tagged}-1.N{n}"), &tag(1), s, TOL_SERIES, dom(), move |p| {
            let c = cx(p)?;
            let xs = xvars(&p.u);
            let a = a_of(p, &c);
            Ok(Sides::scalar(f_n_eval(&xs, a, &c)?, expansion(&xs, a, &c)?))
        });
        r.add(format!("{tagged}-2.N{n}"), &tag(2), s, TOL_SERIES, DomainSpec::standard(n + 2), move |p| {
            let c = cx(p)?;
            let all = xvars(&p.u);
            let (xs, y) = (&all[..=n], all[n + 1]);
            let a = a_of(p, &c);
            let moved = scale(&scale(xs, 0, 1.0 / y), n, y);
            let corr = correction(xs, y, (!a_is_q).then_some(a), &c)?;
            Ok(Sides::scalar(f_n_eval(xs, a, &c)?, f_n_eval(&moved, a, &c)? + corr))
        });
        r.add(format!("{tagged}-3.N{n}"), &tag(3), s, TOL_SERIES, dom(), move |p| {
            let c = cx(p)?;
            let xs = xvars(&p.u);
            let a = a_of(p, &c);
            let i = (p.choice as usize) % (n + 1);
            let j = (i + 1 + (p.choice as usize / 7) % n) % (n + 1);
            Ok(Sides::scalar(f_n_eval(&scale(&xs, i, c.q()), a, &c)?, f_n_eval(&scale(&xs, j, c.q()), a, &c)?))
        });
        r.add(format!("{tagged}-4.N{n}"), &tag(4), s, TOL_SERIES, dom(), move |p| {
            let c = cx(p)?;
            let xs = xvars(&p.u);
            let a = a_of(p, &c);
            Ok(Sides::scalar(f_n_eval(&xs, a, &c)?, f_n_eval(&permuted(&xs, p.choice), a, &c)?))
        });
    }
    r.add(format!("FN-5.N{n}"), "eq: fN 5", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let xs = xvars(&p.u);
        let a = c.qpow(p.alpha);
        let q = c.q();
        let mut pre = cplx(1.0, 0.0);
        for &x in &xs {
            pre *= theta_q(a * x, &c)? / theta_q(x, &c)?;
        }
        let inv: Vec<C64> = xs.iter().map(|&x| q / (a * x)).collect();
        Ok(Sides::scalar(f_n_eval(&xs, a, &c)?, pre * f_n_eval(&inv, a, &c)?))
    });
    r.add(format!("FN-6.N{n}"), "eq: fN 6", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let xs = xvars(&p.u);
        let a = c.qpow(p.alpha);
        let q = c.q();
        let lhs = (1.0 - a) * f_n_eval(&xs, a * q, &c)? + a * f_n_eval(&scale(&xs, 0, q), a, &c)?;
        Ok(Sides::scalar(lhs, f_n_eval(&xs, a, &c)?))
    });
    r.add(format!("FN-7.N{n}"), "eq: fN 7", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let xs = xvars(&p.u);
        let a = c.qpow(p.alpha);
        let x: C64 = xs.iter().product();
        let t = |k: usize| f_n_eval(&scale(&xs, 0, c.qpowf(k as f64)), a, &c);
        Ok(Sides::scalar(t(n + 1)? + a * x * t(1)?, t(n)? + x * t(0)?))
    });
    r.add(format!("FNQ-5.N{n}"), "eq: fNq 5", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let xs = xvars(&p.u);
        let q = c.q();
        let x: C64 = xs.iter().product();
        let inv: Vec<C64> = xs.iter().map(|&v| 1.0 / v).collect();
        Ok(Sides::scalar(f_n_eval(&inv, q, &c)?, x * f_n_eval(&xs, q, &c)?))
    });
    r.add(format!("FNQ-6.N{n}"), "eq: fNq 6", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let xs = xvars(&p.u);
        let q = c.q();
        let x: C64 = xs.iter().product();
        let lhs = f_n_eval(&scale(&xs, 0, c.qpowf(n as f64)), q, &c)?;
        Ok(Sides::scalar(lhs, 1.0 - x * f_n_eval(&xs, q, &c)?))
    });
}
