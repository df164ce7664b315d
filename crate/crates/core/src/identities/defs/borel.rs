use super::{cx, total, Reg};
use crate::borel::{
    borel_f_tilde, borel_g0, borel_transform, borel_transform_n, f_tilde_series, laplace_eval, laplace_n_eval,
    FormalSeries,
};
use crate::identities::{DomainSpec, Sides, Suite, TOL_MODULAR};
use crate::mu::{f_n_eval, hat_mu_n_eval, mu_zwegers};
use crate::qcore::{e2pi, epi, qpoch_ratio, C64, I};

const TOL_EXACT: f64 = 1e-12;
const TOL_OPERATOR: f64 = 1e-10;

pub(super) fn register(r: &mut Reg) {
    let s = Suite::Borel;
    let xl = || DomainSpec::standard(0).aux_polar(2, 0.3, 1.5);

    for m in [0i32, 1, 3, -2] {
        r.add(format!("RES-MONO.M{m}"), "mono summation", s, TOL_EXACT, xl(), move |p| {
            let c = cx(p)?;
            let (x, lam) = (p.aux[0], p.aux[1]);
            let mf = m as f64;
            let k = c.qpowf(mf * (mf - 1.0) / 2.0);
            Ok(Sides::scalar(laplace_eval(|xi| Ok(k * xi.powi(m)), x, lam, &c)?, x.powi(m)))
        });
    }
    r.add("RES-MU", "q-Borel Laplace transformation", s, TOL_MODULAR, DomainSpec::standard(2), |p| {
        let c = cx(p)?;
        let (u, v) = (p.u[0], p.u[1]);
        let l = laplace_eval(|xi| borel_g0(xi, &c), e2pi(u - v), -e2pi(u), &c)?;
        let rhs = -I * epi(u - v) * c.qpowf(-0.125) * l;
        Ok(Sides::scalar(mu_zwegers(u, v, &c)?, rhs))
    });
    r.add("RES-BG0", "q-Borel Laplace transformation", s, TOL_EXACT, DomainSpec::standard(0).aux_polar(1, 0.05, 0.3), |p| {
        let c = cx(p)?;
        let xi = p.aux[0] * c.q().norm();
        let b = borel_transform(&FormalSeries::g0(&c), &c);
        Ok(Sides::scalar(b.eval(xi, &c)?, borel_g0(xi, &c)?))
    });
    for n in 1..=2u32 {
        r.add(format!("RES-BN.N{n}"), "func: mua div sol", s, TOL_EXACT, DomainSpec::standard(0).aux_polar(1, 0.05, 0.3), move |p| {
            let c = cx(p)?;
            let a = c.qpow(p.alpha);
            let xi = p.aux[0] * c.qabs_pow(n as f64);
            let b = borel_transform_n(&f_tilde_series(a, n, &c), n, &c);
            Ok(Sides::scalar(b.eval(xi, &c)?, borel_f_tilde(a, n, xi, &c)?))
        });
    }

    // one-variable intertwining of x^m T^n with L_q and L_q o B_q
    for (m, n) in [(1i32, 0i32), (2, 1), (0, 2), (1, 2)] {
        r.add(format!("RES-OP.N1M{m}K{n}"), "q-Borel Laplace transformation", s, TOL_OPERATOR, xl(), move |p| {
            let c = cx(p)?;
            let (x, lam) = (p.aux[0], p.aux[1]);
            let (mf, nf) = (m as f64, n as f64);
            let g = |xi: C64| borel_g0(xi, &c);
            let lhs = laplace_eval(|xi| Ok(xi.powi(m) * g(xi * c.qpowf(nf))?), x, lam, &c)?;
            let rhs = c.qpowf(-mf * (mf - 1.0) / 2.0) * x.powi(m) * laplace_eval(g, x * c.qpowf(nf - mf), lam, &c)?;
            Ok(Sides::scalar(lhs, rhs))
        });
        r.add(format!("RES-LB.N1M{m}K{n}"), "q-Borel Laplace transformation", s, TOL_OPERATOR, xl(), move |p| {
            let c = cx(p)?;
            let (x, lam) = (p.aux[0], p.aux[1]);
            let (mf, nf) = (m as f64, n as f64);
            let g = |xi: C64| borel_g0(xi, &c);
            let k = c.qpowf(mf * (mf - 1.0) / 2.0);
            let lhs = laplace_eval(|xi| Ok(k * xi.powi(m) * g(xi * c.qpowf(mf + nf))?), x, lam, &c)?;
            let rhs = x.powi(m) * laplace_eval(g, x * c.qpowf(nf), lam, &c)?;
            Ok(Sides::scalar(lhs, rhs))
        });
    }
    // the same for the order-2 transforms
    let l3 = || DomainSpec::standard(0).aux_polar(3, 0.4, 1.4);
    for (m, n) in [(1i32, 0i32), (1, 3), (2, 1), (0, 2), (-1, 1)] {
        let id = |pre: &str| format!("{pre}.N2M{m}K{n}");
        r.add(id("RES-OP"), "q-Borel Laplace transformation", s, TOL_OPERATOR, l3(), move |p| {
            let c = cx(p)?;
            let lams = &p.aux[..3];
            let (mf, nf) = (m as f64, n as f64);
            let g = |xi: C64| borel_g0(xi, &c);
            let lhs = laplace_n_eval(|xi| Ok(xi.powi(m) * g(xi * c.qpowf(nf))?), lams, &c)?;
            let moved = [lams[0], lams[1], lams[2] * c.qpowf(nf - 2.0 * mf)];
            let rhs = c.qpowf(-mf * (mf - 1.0)) * lams[2].powi(m) * laplace_n_eval(g, &moved, &c)?;
            Ok(Sides::scalar(lhs, rhs))
        });
        r.add(id("RES-LB"), "q-Borel Laplace transformation", s, TOL_OPERATOR, l3(), move |p| {
            let c = cx(p)?;
            let lams = &p.aux[..3];
            let (mf, nf) = (m as f64, n as f64);
            let g = |xi: C64| borel_g0(xi, &c);
            let k = c.qpowf(mf * (mf - 1.0));
            let lhs = laplace_n_eval(|xi| Ok(k * xi.powi(m) * g(xi * c.qpowf(2.0 * mf + nf))?), lams, &c)?;
            let moved = [lams[0], lams[1], lams[2] * c.qpowf(nf)];
            Ok(Sides::scalar(lhs, lams[2].powi(m) * laplace_n_eval(g, &moved, &c)?))
        });
    }

    for n in 1..=2usize {
        r.add(format!("RES-QBFN.N{n}"), "eq: qB and fN", s, TOL_MODULAR, DomainSpec::standard(0).aux_polar(n + 1, 0.2, 1.2), move |p| {
            let c = cx(p)?;
            let a = c.qpow(p.alpha);
            let lams = &p.aux[..=n];
            let l = laplace_n_eval(|xi| borel_f_tilde(a, n as u32, xi, &c), lams, &c)?;
            let mut xs = vec![lams[0]];
            xs.extend(lams.windows(2).map(|w| w[1] / w[0]));
            Ok(Sides::scalar(l, f_n_eval(&xs, a, &c)?))
        });
        r.add(format!("RES-MULMUA.N{n}"), "eq: mul mua and qB", s, TOL_MODULAR, DomainSpec::standard(n + 1), move |p| {
            let c = cx(p)?;
            let al = p.alpha;
            let a = c.qpow(al);
            let u = total(&p.u);
            let lams: Vec<C64> = (0..=n)
                .map(|j| {
                    let sign = if j % 2 == 0 { -1.0 } else { 1.0 };
                    sign * e2pi(total(&p.u[..=j]))
                })
                .collect();
            let l = laplace_n_eval(|xi| borel_f_tilde(a, n as u32, xi, &c), &lams, &c)?;
            let lhs = I.powu(n as u32) * epi(al * u) * c.qpowf(-(n as f64) / 8.0) * l;
            Ok(Sides::scalar(lhs, hat_mu_n_eval(&p.u, al, &c)?))
        });
    }
    // the Laplace image in the last variable solves the order N+1 equation
    for n in 1..=2usize {
        r.add(format!("RES-GMMU.N{n}"), "eq: GMmu", s, TOL_OPERATOR, DomainSpec::standard(0).aux_polar(n + 1, 0.3, 1.5), move |p| {
            let c = cx(p)?;
            let a = c.qpow(p.alpha);
            let f = |x: C64| {
                let mut lams = p.aux[..n].to_vec();
                lams.push(x);
                laplace_n_eval(|xi| borel_f_tilde(a, n as u32, xi, &c), &lams, &c)
            };
            let x = p.aux[n];
            let t: Vec<C64> = (0..=n + 1).map(|k| f(x * c.q().powi(k as i32))).collect::<crate::Result<_>>()?;
            Ok(Sides::scalar(t[n + 1] + a * x * t[1], t[n] + x * t[0]))
        });
    }
    r.add("RES-FACT", "factorized eq", s, TOL_OPERATOR, xl(), |p| {
        let c = cx(p)?;
        let (x, lam) = (p.aux[0], p.aux[1]);
        let q = c.q();
        let t = |k: i32| laplace_eval(|xi| borel_g0(xi, &c), x * q.powi(k), lam, &c);
        let (t0, t1, t2) = (t(0)?, t(1)?, t(2)?);
        Ok(Sides::scalar(t2 - (1.0 - x * q) * t1, x * t0))
    });
    // x^{alpha/2} g with g the Laplace image; the power is divided out
    r.add("RES-MUAEQ", "eq: mua equation", s, TOL_OPERATOR, xl(), |p| {
        let c = cx(p)?;
        let (x, lam) = (p.aux[0], p.aux[1]);
        let q = c.q();
        let a = c.qpow(p.alpha);
        let t = |k: i32| laplace_eval(|xi| qpoch_ratio(a, -xi / a, &c), x * q.powi(k), lam, &c);
        let (t0, t1, t2) = (t(0)?, t(1)?, t(2)?);
        Ok(Sides::scalar(a * t2 - a * (1.0 - x * q) * t1, x * q * t0))
    });
    r.add("RES-NEST", "q-Borel Laplace transformation", s, TOL_MODULAR, DomainSpec::standard(0).aux_polar(3, 0.2, 1.2), |p| {
        let c = cx(p)?;
        let a = c.qpow(p.alpha);
        let lams = &p.aux[..3];
        let g = |xi: C64| borel_f_tilde(a, 2, xi, &c);
        let inner = |y: C64| laplace_eval(g, y, lams[0], &c);
        Ok(Sides::scalar(laplace_eval(inner, lams[2], lams[1], &c)?, laplace_n_eval(g, lams, &c)?))
    });
}
