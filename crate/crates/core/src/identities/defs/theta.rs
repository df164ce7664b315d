use super::{cplx, cx, Reg};
use crate::identities::{DomainSpec, Sides, Suite, TOL_MODULAR};
use crate::qcore::{
    basic_series, dedekind_eta, epi, jacobi_theta, jacobi_theta_series, lattice_theta, lattice_theta_dual, q_hypergeometric,
    qpoch_inf, qpoch_order, theta_q, theta_q_series, SymMatrix, C64, I,
};

const TOL_FOUNDATION: f64 = 1e-10;
const TOL_ORACLE: f64 = 1e-12;

pub(super) fn register(r: &mut Reg) {
    let s = Suite::Theta;
    let one_u = || DomainSpec::standard(1);
    let no_guard = |mut d: DomainSpec| {
        d.guard_u = false;
        d
    };

    r.add("THETA-1", "theta relation 1", s, TOL_FOUNDATION, no_guard(one_u()), |p| {
        let c = cx(p)?;
        Ok(Sides::scalar(jacobi_theta(p.u[0] + 1.0, &c), -jacobi_theta(p.u[0], &c)))
    });
    r.add("THETA-2", "theta relation 2", s, TOL_FOUNDATION, no_guard(one_u()), |p| {
        let c = cx(p)?;
        let u = p.u[0];
        let f = -(-std::f64::consts::PI * I * (p.tau + 2.0 * u)).exp();
        Ok(Sides::scalar(jacobi_theta(u + p.tau, &c), f * jacobi_theta(u, &c)))
    });
    r.add("THETA-3", "theta relation 3", s, TOL_FOUNDATION, no_guard(one_u()), |p| {
        let c = cx(p)?;
        let c1 = c.at(p.tau + 1.0)?;
        Ok(Sides::scalar(jacobi_theta(p.u[0], &c1), epi(cplx(0.25, 0.0)) * jacobi_theta(p.u[0], &c)))
    });
    r.add("THETA-4", "theta relation 4", s, TOL_MODULAR.min(1e-9), no_guard(DomainSpec::near_i(1)), |p| {
        let c = cx(p)?;
        let cs = c.at(-1.0 / p.tau)?;
        let u = p.u[0];
        let rhs = -I * (-I * p.tau).sqrt() * epi(u * u / p.tau) * jacobi_theta(u, &c);
        Ok(Sides::scalar(jacobi_theta(u / p.tau, &cs), rhs))
    });
    let xdom = || DomainSpec::standard(0).aux_polar(1, 0.3, 3.0);
    r.add("THETA-5", "theta relation 5", s, TOL_FOUNDATION, xdom(), |p| {
        let c = cx(p)?;
        let x = p.aux[0];
        Ok(Sides::scalar(theta_q(x, &c)?, x * theta_q(x * c.q(), &c)?))
    });
    r.add("THETA-6", "theta relation 6", s, TOL_FOUNDATION, xdom(), |p| {
        let c = cx(p)?;
        let x = p.aux[0];
        Ok(Sides::scalar(theta_q(x, &c)?, x * theta_q(1.0 / x, &c)?))
    });
    r.add("ETA-1", "eta relation 1", s, TOL_FOUNDATION, DomainSpec::standard(0), |p| {
        let c = cx(p)?;
        Ok(Sides::scalar(dedekind_eta(&c.at(p.tau + 1.0)?), epi(cplx(1.0 / 12.0, 0.0)) * dedekind_eta(&c)))
    });
    r.add("ETA-2", "eta relation 2", s, 1e-9, DomainSpec::near_i(0), |p| {
        let c = cx(p)?;
        Ok(Sides::scalar(dedekind_eta(&c.at(-1.0 / p.tau)?), (-I * p.tau).sqrt() * dedekind_eta(&c)))
    });

    let forms: [(&str, SymMatrix); 3] = [
        ("D2", SymMatrix::hat(3)),
        ("D3", SymMatrix::new(3, &[2.0, 1.0, 0.0, 1.0, 2.0, 1.0, 0.0, 1.0, 2.0]).expect("positive definite")),
        ("R2", SymMatrix::new(2, &[1.5, 0.3, 0.3, 0.8]).expect("positive definite")),
    ];
    for (name, m) in forms {
        let d = m.dim();
        r.add(format!("MULTHETA-4.{name}"), "mul theta relation 4", s, 1e-9, no_guard(DomainSpec::near_i(d)), move |p| {
            let c = cx(p)?;
            let cs = c.at(-1.0 / p.tau)?;
            let scaled: Vec<C64> = p.u.iter().map(|&u| u / p.tau).collect();
            let lhs = lattice_theta(&m, &scaled, &cs)?;
            let quad = m.bilinear_inv(&p.u, &p.u);
            let pref = (-I * p.tau).powf(d as f64 / 2.0) * epi(quad / p.tau) / m.det().sqrt();
            Ok(Sides::scalar(lhs, pref * lattice_theta_dual(&m, &p.u, &c)?))
        });
    }

    r.add("ORACLE-THQ", "theta_q series and product", s, TOL_ORACLE, xdom(), |p| {
        let c = cx(p)?;
        Ok(Sides::scalar(theta_q(p.aux[0], &c)?, theta_q_series(p.aux[0], &c)?))
    });
    r.add("ORACLE-VTH", "vartheta series and product", s, TOL_ORACLE, no_guard(one_u()), |p| {
        let c = cx(p)?;
        // also exercise the reduction of Im u by a few periods
        let u = p.u[0] + (p.choice % 5) as f64 * p.tau - 2.0 * p.tau;
        Ok(Sides::scalar(jacobi_theta(u, &c), jacobi_theta_series(u, &c)?))
    });
    r.add(
        "POCH-1",
        "q-Pochhammer symbol",
        s,
        TOL_ORACLE,
        DomainSpec::standard(0).aux_polar(1, 0.2, 1.5).aux_like_u(1),
        |p| {
            // (x)_alpha (q^alpha x)_beta = (x)_{alpha+beta}
            let c = cx(p)?;
            let (x, a, b) = (p.aux[0], p.alpha, p.aux[1]);
            let lhs = qpoch_order(x, a, &c)? * qpoch_order(c.qpow(a) * x, b, &c)?;
            Ok(Sides::scalar(lhs, qpoch_order(x, a + b, &c)?))
        },
    );
    r.add(
        "QHYP-1",
        "basic hypergeometric series",
        s,
        TOL_ORACLE,
        DomainSpec::standard(0).aux_polar(3, 0.3, 0.9),
        |p| {
            // q-Gauss: 2phi1(a, b; c; c/(ab)) = (c/a, c/b)_inf / (c, c/(ab))_inf, with |c/(ab)| < 1
            let c = cx(p)?;
            let (a, b, cc) = (p.aux[0] + 1.5, p.aux[1] + 1.8, 0.5 * p.aux[2]);
            let z = cc / (a * b);
            let lhs = q_hypergeometric(&[a, b], &[cc], z, &c)?;
            let rhs = qpoch_inf(cc / a, &c) * qpoch_inf(cc / b, &c) / (qpoch_inf(cc, &c) * qpoch_inf(z, &c));
            Ok(Sides::scalar(lhs, rhs))
        },
    );
    r.add("QHYP-2", "basic hypergeometric series", s, TOL_ORACLE, DomainSpec::standard(0).aux_polar(2, 0.2, 0.9), |p| {
        // q-binomial theorem: 1phi0(a; -; z) = (az)_inf / (z)_inf
        let c = cx(p)?;
        let (a, z) = (3.0 * p.aux[0], p.aux[1]);
        let lhs = basic_series(&[a], &[], z, 0, &c)?;
        Ok(Sides::scalar(lhs, qpoch_inf(a * z, &c) / qpoch_inf(z, &c)))
    });
}
