use super::{cplx, cx, xvars, Reg};
use crate::identities::{DomainSpec, Sides, Suite, TOL_SERIES};
use crate::mu::{f1_eval, hat_mu_n_eval, hat_mu_n_series, mu_generalized, mu_n_eval, mu_zwegers, HatMuReading};
use crate::qcore::{e2pi, epi, q_hypergeometric, qpoch_inf, theta_q, C64, I};

pub(super) fn register(r: &mut Reg) {
    let s = Suite::Genmu;

    r.add("GENMU-A0", "generalized mu", s, TOL_SERIES, DomainSpec::standard(2), |p| {
        let c = cx(p)?;
        let v = mu_generalized(p.u[0], p.u[1], cplx(0.0, 0.0), &c)?;
        Ok(Sides::scalar(v, -I * c.qpowf(-0.125)))
    });
    r.add("GENMU-A1", "generalized mu", s, TOL_SERIES, DomainSpec::standard(2), |p| {
        let c = cx(p)?;
        let v = mu_generalized(p.u[0], p.u[1], cplx(1.0, 0.0), &c)?;
        Ok(Sides::scalar(v, mu_zwegers(p.u[0], p.u[1], &c)?))
    });
    r.add(
        "GENMU-F1",
        "relation between the generalized mu function and the function f1",
        s,
        TOL_SERIES,
        DomainSpec::standard(2),
        |p| {
            let c = cx(p)?;
            let (u, v, al) = (p.u[0], p.u[1], p.alpha);
            let f = f1_eval(-e2pi(u - al * p.tau), -e2pi(p.tau - v), c.qpow(al), &c)?;
            let rhs = -I * c.qpowf(-0.125) * epi(al * (u - v)) * f;
            Ok(Sides::scalar(mu_generalized(u, v, al, &c)?, rhs))
        },
    );
    r.add("MULMUA-MUA", "eq: mul mua and mua", s, TOL_SERIES, DomainSpec::standard(2), |p| {
        let c = cx(p)?;
        let (u, v, al) = (p.u[0], p.u[1], p.alpha);
        let rhs = -epi(al * (al - 1.0) * p.tau) * hat_mu_n_eval(&[u - al * p.tau, p.tau - v], al, &c)?;
        Ok(Sides::scalar(mu_generalized(u, v, al, &c)?, rhs))
    });
    r.add("MU1-MU", "definition of mu_N", s, TOL_SERIES, DomainSpec::standard(2), |p| {
        let c = cx(p)?;
        Ok(Sides::scalar(mu_n_eval(&p.u, &c)?, -mu_zwegers(p.u[0], -p.u[1], &c)?))
    });
    for n in 1..=3usize {
        r.add(format!("HATMU-MU.N{n}"), "eq: mul mua and mul mu", s, TOL_SERIES, DomainSpec::standard(n + 1), |p| {
            let c = cx(p)?;
            Ok(Sides::scalar(hat_mu_n_eval(&p.u, cplx(1.0, 0.0), &c)?, mu_n_eval(&p.u, &c)?))
        });
        r.add(format!("HATMU-DEF.N{n}"), "eq: mua and fN", s, TOL_SERIES, DomainSpec::standard(n + 1), |p| {
            let c = cx(p)?;
            let lhs = hat_mu_n_series(&p.u, p.alpha, HatMuReading::Exponential, &c)?;
            Ok(Sides::scalar(lhs, hat_mu_n_eval(&p.u, p.alpha, &c)?))
        });
    }

    // f_1 and its q-difference equations; x_j = -e^{2 pi i u_j}, a = q^alpha
    let fdom = |k: usize| DomainSpec::standard(k);
    r.add("F1-1", "eq: f1 1", s, TOL_SERIES, fdom(3), |p| {
        let c = cx(p)?;
        let x = xvars(&p.u);
        let (x0, x1, y) = (x[0], x[1], x[2]);
        let a = c.qpow(p.alpha);
        let t = |z: C64| theta_q(z, &c);
        let q = c.q();
        let pre = qpoch_inf(q, &c) * t(-a)? * t(-y)? * t(-x1 * y / x0)?
            / (qpoch_inf(q / a, &c) * t(x0)? * t(x1)? * t(y / x0)? * t(x1 * y)?);
        let phi = q_hypergeometric(&[q / a], &[cplx(0.0, 0.0)], a * x0 * x1, &c)?;
        let rhs = f1_eval(x0 / y, x1 * y, a, &c)? + pre * phi;
        Ok(Sides::scalar(f1_eval(x0, x1, a, &c)?, rhs))
    });
    r.add("F1-2", "eq: f1 2", s, TOL_SERIES, fdom(2), |p| {
        let c = cx(p)?;
        let x = xvars(&p.u);
        let a = c.qpow(p.alpha);
        Ok(Sides::scalar(f1_eval(x[0] * c.q(), x[1], a, &c)?, f1_eval(x[0], x[1] * c.q(), a, &c)?))
    });
    r.add("F1-3", "eq: f1 3", s, TOL_SERIES, fdom(2), |p| {
        let c = cx(p)?;
        let x = xvars(&p.u);
        let a = c.qpow(p.alpha);
        Ok(Sides::scalar(f1_eval(x[0], x[1], a, &c)?, f1_eval(x[1], x[0], a, &c)?))
    });
    r.add("F1-4", "eq: f1 4", s, TOL_SERIES, fdom(2), |p| {
        let c = cx(p)?;
        let x = xvars(&p.u);
        let a = c.qpow(p.alpha);
        let q = c.q();
        let t = |z: C64| theta_q(z, &c);
        let pre = t(a * x[0])? * t(a * x[1])? / (t(x[0])? * t(x[1])?);
        Ok(Sides::scalar(f1_eval(x[0], x[1], a, &c)?, pre * f1_eval(q / (a * x[0]), q / (a * x[1]), a, &c)?))
    });

    // shifts: Ta = (a -> aq), Tx = (x0 -> x0 q)
    struct Shifts {
        f: C64,
        ta: C64,
        tx: C64,
        tatx: C64,
        a: C64,
        xx: C64,
    }
    fn shifts(p: &crate::identities::ParamPoint) -> crate::Result<(Shifts, crate::qcore::QContext, Vec<C64>)> {
        let c = cx(p)?;
        let x = xvars(&p.u);
        let a = c.qpow(p.alpha);
        let q = c.q();
        let sh = Shifts {
            f: f1_eval(x[0], x[1], a, &c)?,
            ta: f1_eval(x[0], x[1], a * q, &c)?,
            tx: f1_eval(x[0] * q, x[1], a, &c)?,
            tatx: f1_eval(x[0] * q, x[1], a * q, &c)?,
            a,
            xx: x[0] * x[1],
        };
        Ok((sh, c, x))
    }
    r.add("QF1-1", "qeq: f1 1", s, TOL_SERIES, fdom(2), |p| {
        let (v, _, _) = shifts(p)?;
        Ok(Sides::scalar(v.tatx + v.a * v.xx * v.ta, v.tx))
    });
    r.add("QF1-2", "qeq: f1 2", s, TOL_SERIES, fdom(2), |p| {
        let (v, _, _) = shifts(p)?;
        let k = 1.0 - v.a + v.a * v.a * v.xx;
        Ok(Sides::scalar(k * v.ta + v.a * v.tatx, v.f))
    });
    r.add("QF1-3", "qeq: f1 3", s, TOL_SERIES, fdom(2), |p| {
        let (v, _, _) = shifts(p)?;
        let k = 1.0 - v.a + v.a * v.a * v.xx;
        Ok(Sides::scalar(k * v.tx - (1.0 - v.a) * v.tatx, v.a * v.xx * v.f))
    });
    r.add("QF1-4", "qeq: f1 4", s, TOL_SERIES, fdom(2), |p| {
        let (v, _, _) = shifts(p)?;
        Ok(Sides::scalar((1.0 - v.a) * v.ta + v.a * v.tx, v.f))
    });
    r.add("QF1-5", "qeq: f1 5", s, TOL_SERIES, fdom(2), |p| {
        let (v, c, x) = shifts(p)?;
        let q = c.q();
        let tx2 = f1_eval(x[0] * q * q, x[1], v.a, &c)?;
        Ok(Sides::scalar(tx2, (1.0 - v.a * v.xx) * v.tx + v.xx * v.f))
    });
    r.add("QF1-6", "qeq: f1 6", s, TOL_SERIES, fdom(2), |p| {
        let (v, c, x) = shifts(p)?;
        let q = c.q();
        let ta2 = f1_eval(x[0], x[1], v.a * q * q, &c)?;
        let k = 1.0 - v.a + v.a * v.a * v.xx;
        Ok(Sides::scalar((1.0 - v.a * q) * ta2 + q * v.f, (1.0 + k * q) * v.ta))
    });
}
