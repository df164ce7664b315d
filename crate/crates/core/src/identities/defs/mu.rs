use super::{cplx, cx, th, Reg};
use crate::completion::{mordell_h, mu_completed};
use crate::identities::{DomainSpec, Sides, Suite, TOL_MODULAR, TOL_QUADRATURE, TOL_SERIES};
use crate::mu::mu_zwegers;
use crate::qcore::{dedekind_eta, e2pi, epi, jacobi_theta, I};

pub(super) fn register(r: &mut Reg) {
    let s = Suite::Mu;
    let d2 = || DomainSpec::standard(2);

    r.add("MU-1", "mu relation 1", s, TOL_SERIES, d2(), |p| {
        let c = cx(p)?;
        let (u, v) = (p.u[0], p.u[1]);
        let m = mu_zwegers(u, v, &c)?;
        Ok(Sides::vector(vec![mu_zwegers(u + 1.0, v, &c)?, mu_zwegers(u, v + 1.0, &c)?], vec![-m, -m]))
    });
    r.add("MU-2", "mu relation 2", s, TOL_SERIES, d2(), |p| {
        let c = cx(p)?;
        let (u, v) = (p.u[0], p.u[1]);
        let m = mu_zwegers(u, v, &c)?;
        let rhs = -e2pi(u - v) * c.qpowf(0.5) * m - I * epi(u - v) * c.qpowf(0.375);
        Ok(Sides::scalar(mu_zwegers(u + p.tau, v, &c)?, rhs))
    });
    r.add("MU-3", "mu relation 3", s, TOL_SERIES, d2().aux_like_u(1), |p| {
        let c = cx(p)?;
        let (u, v, z) = (p.u[0], p.u[1], p.aux[0]);
        let eta = dedekind_eta(&c);
        let corr = I * eta * eta * eta * jacobi_theta(u + v + z, &c) * jacobi_theta(z, &c)
            / (th(u + z, &c)? * th(v + z, &c)? * th(u, &c)? * th(v, &c)?);
        Ok(Sides::scalar(mu_zwegers(u + z, v + z, &c)?, mu_zwegers(u, v, &c)? + corr))
    });
    r.add("MU-4", "mu relation 4", s, TOL_SERIES, d2(), |p| {
        let c = cx(p)?;
        let (u, v) = (p.u[0], p.u[1]);
        let m = mu_zwegers(u, v, &c)?;
        let lhs = vec![mu_zwegers(u + p.tau, v + p.tau, &c)?, mu_zwegers(-u, -v, &c)?, mu_zwegers(v, u, &c)?];
        Ok(Sides::vector(lhs, vec![m; 3]))
    });
    r.add("MU-5", "mu relation 5", s, TOL_SERIES, d2(), |p| {
        let c = cx(p)?;
        let (u, v) = (p.u[0], p.u[1]);
        let rhs = epi(cplx(-0.25, 0.0)) * mu_zwegers(u, v, &c)?;
        Ok(Sides::scalar(mu_zwegers(u, v, &c.at(p.tau + 1.0)?)?, rhs))
    });
    r.add("MU-6", "mu relation 6", s, TOL_QUADRATURE, DomainSpec::near_i(2), |p| {
        let c = cx(p)?;
        let (u, v, t) = (p.u[0], p.u[1], p.tau);
        let lhs = epi((u - v) * (u - v) / t) / (-I * t).sqrt() * mu_zwegers(u / t, v / t, &c.at(-1.0 / t)?)?;
        let rhs = -mu_zwegers(u, v, &c)? + mordell_h(u - v, &c)? / (2.0 * I);
        Ok(Sides::scalar(lhs, rhs))
    });

    // the completed function
    r.add("MUT-1", "mu tilde elliptic 1", s, TOL_SERIES, d2(), |p| {
        let c = cx(p)?;
        let (u, v) = (p.u[0], p.u[1]);
        let m = mu_completed(u, v, &c)?;
        Ok(Sides::vector(vec![mu_completed(u + 1.0, v, &c)?, mu_completed(u, v + 1.0, &c)?], vec![-m, -m]))
    });
    r.add("MUT-2", "mu tilde elliptic 2", s, TOL_SERIES, d2(), |p| {
        let c = cx(p)?;
        let (u, v, t) = (p.u[0], p.u[1], p.tau);
        let m = mu_completed(u, v, &c)?;
        let a = -e2pi(v - u) * c.qpowf(-0.5) * mu_completed(u + t, v, &c)?;
        let b = -e2pi(u - v) * c.qpowf(-0.5) * mu_completed(u, v + t, &c)?;
        Ok(Sides::vector(vec![a, b], vec![m, m]))
    });
    r.add("MUT-3", "mu tilde modular T", s, TOL_SERIES, d2(), |p| {
        let c = cx(p)?;
        let (u, v) = (p.u[0], p.u[1]);
        let lhs = epi(cplx(0.25, 0.0)) * mu_completed(u, v, &c.at(p.tau + 1.0)?)?;
        Ok(Sides::scalar(lhs, mu_completed(u, v, &c)?))
    });
    r.add("MUT-4", "mu tilde modular S", s, TOL_MODULAR, DomainSpec::near_i(2), |p| {
        let c = cx(p)?;
        let (u, v, t) = (p.u[0], p.u[1], p.tau);
        let lhs = -epi((u - v) * (u - v) / t) / (-I * t).sqrt() * mu_completed(u / t, v / t, &c.at(-1.0 / t)?)?;
        Ok(Sides::scalar(lhs, mu_completed(u, v, &c)?))
    });
    r.add("MUT-SYM", "mu tilde symmetry", s, TOL_SERIES, d2(), |p| {
        let c = cx(p)?;
        let (u, v) = (p.u[0], p.u[1]);
        Ok(Sides::scalar(mu_completed(u, v, &c)?, mu_completed(v, u, &c)?))
    });
}
