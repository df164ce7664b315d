use super::{cplx, cx, sgn, shifted, total, Reg};
use crate::completion::{h_n_combination, h_n_combination_even, mu_n_completed};
use crate::identities::{DomainSpec, ParamPoint, Sides, Suite, TOL_QUADRATURE, TOL_SERIES};
use crate::mu::mu_n_eval;
use crate::qcore::{e2pi, epi, QContext, C64, I};
use crate::Result;

pub(super) fn register(r: &mut Reg) {
    for (n, m) in [(1usize, 1usize), (1, 2), (3, 1), (3, 2)] {
        odd(r, n, m);
    }
    even(r, 2, 1);
    for n in 1..=3usize {
        for m in 1..=2usize {
            shifts(r, n, m);
        }
    }
}

/// `u_j / (K tau - 1)` and `-tau / (K tau - 1)`.
fn moved(p: &ParamPoint, k: f64) -> (Vec<C64>, C64) {
    let den = k * p.tau - 1.0;
    (p.u.iter().map(|&x| x / den).collect(), -p.tau / den)
}

/// `sum_j e^{pi i (2j-1)(u + N/2)} q^{N(2j-1)(4m-2j+1)/8}`.
fn theta_tail(u: C64, n: usize, m: usize, sign: f64, c: &QContext) -> C64 {
    let nf = n as f64;
    (1..=m)
        .map(|j| {
            let a = (2 * j - 1) as f64;
            epi(sign * a * (u + nf / 2.0)) * c.qpowf(nf / 8.0 * a * (4.0 * m as f64 - a))
        })
        .sum()
}

fn odd(r: &mut Reg, n: usize, m: usize) {
    let s = Suite::Modular;
    let t = TOL_QUADRATURE;
    let k = (m * n) as f64;
    let (nf, mf) = (n as f64, m as f64);
    let dom = move || DomainSpec::near_cusp((m * n) as f64, n + 1);
    let tag = format!("N{n}M{m}");
    // i^{m/2} e^{pi i m u^2/(K tau - 1)} / sqrt(1 - K tau)
    let pref = move |p: &ParamPoint| {
        let u = total(&p.u);
        epi(cplx(mf / 4.0, 0.0)) * epi(mf * u * u / (k * p.tau - 1.0)) / (1.0 - k * p.tau).sqrt()
    };
    r.add(format!("ODD-TRANS-1.{tag}"), "eq: odd trans 1", s, t, dom(), move |p| {
        let c = cx(p)?;
        let lhs = epi(cplx(mf * nf / 4.0, 0.0)) * mu_n_completed(&p.u, &c.at(p.tau + mf)?)?;
        Ok(Sides::scalar(lhs, mu_n_completed(&p.u, &c)?))
    });
    r.add(format!("ODD-TRANS-2.{tag}"), "eq: odd trans 2", s, t, dom(), move |p| {
        let c = cx(p)?;
        let (w, tp) = moved(p, k);
        Ok(Sides::scalar(pref(p) * mu_n_completed(&w, &c.at(tp)?)?, mu_n_completed(&p.u, &c)?))
    });
    r.add(format!("ODD-MUN-1.{tag}"), "eq: odd mun 1", s, t, dom(), move |p| {
        let c = cx(p)?;
        let rhs = epi(cplx(mf * nf / 4.0, 0.0)) * mu_n_eval(&p.u, &c.at(p.tau + mf)?)?;
        Ok(Sides::scalar(mu_n_eval(&p.u, &c)?, rhs))
    });
    r.add(format!("ODD-MUN-2.{tag}"), "eq: odd mun 2", s, t, dom(), move |p| {
        let c = cx(p)?;
        let (w, tp) = moved(p, k);
        let u = total(&p.u);
        let corr = epi(cplx(((mf + 1.0) / 2.0 - nf) / 2.0, 0.0)) / (2.0 * mf.sqrt()) * h_n_combination(u, n, m, &c)?;
        let rhs = pref(p) * mu_n_eval(&w, &c.at(tp)?)? - corr;
        Ok(Sides::scalar(mu_n_eval(&p.u, &c)?, rhs))
    });
    // h_N and h~_N difference equations
    let dom1 = move || DomainSpec::near_cusp((m * n) as f64, 1);
    let hn_gauss = move |u: C64, tau: C64| -> C64 {
        (1..=m)
            .map(|j| {
                let a = (2 * j - 1) as f64;
                let w = u + a / (2.0 * mf);
                sgn(j as i64) * epi(cplx(a * a / (4.0 * mf), 0.0)) * epi(mf * w * w / (k * tau - 1.0))
            })
            .sum()
    };
    r.add(format!("HNODD-1.{tag}"), "coro: odd 2", s, t, dom1(), move |p| {
        let c = cx(p)?;
        let u = p.u[0];
        let lhs = h_n_combination(u + 1.0, n, m, &c)? + h_n_combination(u, n, m, &c)?;
        let rhs = epi(cplx(-0.25, 0.0)) * 2.0 * mf.sqrt() / (1.0 - k * p.tau).sqrt() * hn_gauss(u, p.tau);
        Ok(Sides::scalar(lhs, rhs))
    });
    r.add(format!("HNODD-2.{tag}"), "coro: odd 2", s, t, dom1(), move |p| {
        let c = cx(p)?;
        let u = p.u[0];
        let lhs = h_n_combination(u + k * p.tau - 1.0, n, m, &c)?;
        let rhs = -sgn(m as i64) * e2pi(mf * u) * c.qpowf(mf * mf * nf / 2.0) * h_n_combination(u, n, m, &c)?
            + 2.0 * mf.sqrt() * I.powu(n as u32) * epi(cplx(-(mf + 1.0) / 4.0, 0.0)) * theta_tail(u, n, m, 1.0, &c);
        Ok(Sides::scalar(lhs, rhs))
    });
    let h_tilde = move |us: &[C64], c: &QContext| -> Result<C64> {
        let u = total(us);
        let den = k * c.tau() - 1.0;
        let w: Vec<C64> = us.iter().map(|&x| x / den).collect();
        let pre = epi(cplx(mf / 4.0, 0.0)) * epi(mf * u * u / den) / (1.0 - k * c.tau()).sqrt();
        Ok(pre * mu_n_eval(&w, &c.at(-c.tau() / den)?)? - mu_n_eval(us, c)?)
    };
    r.add(format!("HNT-1.{tag}"), "defi: hNtilde", s, t, dom(), move |p| {
        let c = cx(p)?;
        let u = total(&p.u);
        let lhs = h_tilde(&shifted(&p.u, 0, k * p.tau - 1.0), &c)?;
        let rhs = -sgn(m as i64) * e2pi(mf * u) * c.qpowf(mf * mf * nf / 2.0) * h_tilde(&p.u, &c)?
            + theta_tail(u, n, m, 1.0, &c);
        Ok(Sides::scalar(lhs, rhs))
    });
    r.add(format!("HNT-2.{tag}"), "defi: hNtilde", s, t, dom(), move |p| {
        let c = cx(p)?;
        let u = total(&p.u);
        let lhs = h_tilde(&p.u, &c)? + h_tilde(&shifted(&p.u, 0, cplx(1.0, 0.0)), &c)?;
        let rhs = epi(cplx((mf / 2.0 - nf) / 2.0, 0.0)) / (1.0 - k * p.tau).sqrt() * hn_gauss(u, p.tau);
        Ok(Sides::scalar(lhs, rhs))
    });
}

fn even(r: &mut Reg, n: usize, m: usize) {
    let s = Suite::Modular;
    let t = TOL_QUADRATURE;
    let k = (2 * m * n) as f64;
    let (nf, mf) = (n as f64, m as f64);
    let dom = move || DomainSpec::near_cusp((2 * m * n) as f64, n + 1);
    let tag = format!("N{n}M{m}");
    let pref = move |p: &ParamPoint| {
        let u = total(&p.u);
        -e2pi(mf * u * u / (k * p.tau - 1.0)) / (1.0 - k * p.tau).sqrt()
    };
    r.add(format!("EVEN-TRANS-1.{tag}"), "eq: even trans 1", s, t, dom(), move |p| {
        let c = cx(p)?;
        let rhs = epi(cplx(mf * nf / 4.0, 0.0)) * mu_n_completed(&p.u, &c.at(p.tau + mf)?)?;
        Ok(Sides::scalar(mu_n_completed(&p.u, &c)?, rhs))
    });
    r.add(format!("EVEN-TRANS-2.{tag}"), "eq: even trans 2", s, t, dom(), move |p| {
        let c = cx(p)?;
        let (w, tp) = moved(p, k);
        Ok(Sides::scalar(mu_n_completed(&p.u, &c)?, pref(p) * mu_n_completed(&w, &c.at(tp)?)?))
    });
    r.add(format!("EVEN-MUN-1.{tag}"), "eq: even mun 1", s, t, dom(), move |p| {
        let c = cx(p)?;
        let rhs = epi(cplx(mf * nf / 4.0, 0.0)) * mu_n_eval(&p.u, &c.at(p.tau + mf)?)?;
        Ok(Sides::scalar(mu_n_eval(&p.u, &c)?, rhs))
    });
    r.add(format!("EVEN-MUN-2.{tag}"), "eq: even mun 2", s, t, dom(), move |p| {
        even_mun2(p, n, m, 0.5 - nf)
    });
}

/// Second even-N law with the power of `i` in front of the Mordell sum
/// left as a parameter.
pub(super) fn even_mun2(p: &ParamPoint, n: usize, m: usize, i_power: f64) -> Result<Sides> {
    let c = cx(p)?;
    let k = (2 * m * n) as f64;
    let mf = m as f64;
    let u = total(&p.u);
    let (w, tp) = moved(p, k);
    let pref = -e2pi(mf * u * u / (k * p.tau - 1.0)) / (1.0 - k * p.tau).sqrt();
    let corr = epi(cplx(i_power / 2.0, 0.0)) / (2.0 * (2.0 * mf).sqrt()) * h_n_combination_even(u, n, m, &c)?;
    let rhs = pref * mu_n_eval(&w, &c.at(tp)?)? + corr;
    Ok(Sides::scalar(mu_n_eval(&p.u, &c)?, rhs))
}

fn shifts(r: &mut Reg, n: usize, m: usize) {
    let s = Suite::Modular;
    let (nf, mf) = (n as f64, m as f64);
    let dom = move || DomainSpec::standard(n + 1);
    r.add(format!("PLUS-MNTAU.N{n}M{m}"), "eq: +mNtau", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let u = total(&p.u);
        let lhs = mu_n_eval(&shifted(&p.u, 0, p.tau * (mf * nf)), &c)?;
        let rhs = sgn((m * n) as i64) * e2pi(mf * u) * c.qpowf(mf * mf * nf / 2.0) * mu_n_eval(&p.u, &c)?
            + theta_tail(u, n, m, 1.0, &c);
        Ok(Sides::scalar(lhs, rhs))
    });
    r.add(format!("MINUS-MNTAU.N{n}M{m}"), "eq: -mNtau", s, TOL_SERIES, dom(), move |p| {
        let c = cx(p)?;
        let u = total(&p.u);
        let lhs = mu_n_eval(&shifted(&p.u, 0, -p.tau * (mf * nf)), &c)?;
        let rhs = sgn((m * n) as i64) * e2pi(-mf * u) * c.qpowf(mf * mf * nf / 2.0) * mu_n_eval(&p.u, &c)?
            - theta_tail(u, n, m, -1.0, &c);
        Ok(Sides::scalar(lhs, rhs))
    });
}
