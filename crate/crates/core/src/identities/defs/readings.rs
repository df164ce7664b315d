//! Competing readings of displays whose typeset form is ambiguous or off by
//! a sign or constant. Each group should have exactly one passing member.

use super::completion::{hn1_rhs, sts_sides, StsForm};
use super::modular::even_mun2;
use super::mulmu::{mulmua3, mulmua6};
use super::{appendix, cx, xvars, Reg};
use crate::completion::h_n_vector;
use crate::identities::{DomainSpec, Sides, TOL_QUADRATURE, TOL_SERIES};
use crate::mu::{f1_eval, hat_mu_n_eval, hat_mu_n_series, mu_generalized, mu_n_eval, mu_zwegers, HatMuReading};
use crate::qcore::{e2pi, epi, C64, I};

pub(super) fn register(r: &mut Reg) {
    for (label, reading) in [("typeset", HatMuReading::Typeset), ("exponential", HatMuReading::Exponential)] {
        r.reading("HATMU-DEF", label, format!("READ-HATMU-DEF.{label}"), "eq: mua and fN", TOL_SERIES, DomainSpec::standard(3), move |p| {
            let c = cx(p)?;
            Ok(Sides::scalar(hat_mu_n_series(&p.u, p.alpha, reading, &c)?, hat_mu_n_eval(&p.u, p.alpha, &c)?))
        });
    }

    for (label, which) in [("minus-v", 0u8), ("v", 1), ("tau-minus-v", 2)] {
        r.reading("MULMUA-MUA", label, format!("READ-MULMUA-MUA.{label}"), "eq: mul mua and mua", TOL_SERIES, DomainSpec::standard(2), move |p| {
            let c = cx(p)?;
            let (u, v, al) = (p.u[0], p.u[1], p.alpha);
            let second = match which {
                0 => -v,
                1 => v,
                _ => p.tau - v,
            };
            let rhs = -epi(al * (al - 1.0) * p.tau) * hat_mu_n_eval(&[u - al * p.tau, second], al, &c)?;
            Ok(Sides::scalar(mu_generalized(u, v, al, &c)?, rhs))
        });
    }

    for (label, dl, dr) in [("printed", 1.0, 1.0), ("alpha-both", 0.0, 0.0), ("alpha-right", 1.0, 0.0), ("alpha-left", 0.0, 1.0)] {
        r.reading("MULMUA-6", label, format!("READ-MULMUA-6.{label}"), "mul mua relation 6", TOL_SERIES, DomainSpec::standard(3), move |p| {
            let c = cx(p)?;
            let (a, b) = mulmua6(p, 2, &c, dl, dr)?;
            Ok(Sides::scalar(a, b))
        });
    }

    for (label, scale) in [("printed", false), ("x-on-constant", true)] {
        r.reading("MULMUA-3", label, format!("READ-MULMUA-3.{label}"), "mul mua relation 3", TOL_SERIES, DomainSpec::standard(3), move |p| {
            let c = cx(p)?;
            let (a, b) = mulmua3(p, 2, &c, scale)?;
            Ok(Sides::scalar(a, b))
        });
    }

    for (label, constant_q) in [("printed", false), ("constant-q", true)] {
        r.reading("QF1-6", label, format!("READ-QF1-6.{label}"), "qeq: f1 6", TOL_SERIES, DomainSpec::standard(2), move |p| {
            let c = cx(p)?;
            let x = xvars(&p.u);
            let a = c.qpow(p.alpha);
            let q = c.q();
            let f = f1_eval(x[0], x[1], a, &c)?;
            let ta = f1_eval(x[0], x[1], a * q, &c)?;
            let ta2 = f1_eval(x[0], x[1], a * q * q, &c)?;
            let k = 1.0 - a + a * a * x[0] * x[1];
            let constant = if constant_q { q } else { C64::new(1.0, 0.0) };
            Ok(Sides::scalar((1.0 - a * q) * ta2 + constant * f, (1.0 + k * q) * ta))
        });
    }

    for (label, lead) in [("printed", C64::new(2.0, 0.0)), ("times-minus-i", -2.0 * I)] {
        r.reading("HN-1", label, format!("READ-HN-1.{label}"), "eq: HN relation 1", TOL_QUADRATURE, DomainSpec::near_i(1), move |p| {
            let c = cx(p)?;
            let n = 2usize;
            let nf = n as f64;
            let u = p.u[0];
            let hh = h_n_vector(u + nf * p.tau, n, &c)?;
            let h0 = h_n_vector(u, n, &c)?;
            let f = e2pi(u) * c.qpowf(nf / 2.0);
            let lhs = hh.iter().zip(&h0).map(|(a, b)| a - f * b).collect();
            let rhs = (0..n).map(|k| hn1_rhs(u, n, k, &c, lead * (-I).powu(n as u32))).collect();
            Ok(Sides::vector(lhs, rhs))
        });
    }

    for (label, pw) in [("printed", -2.5), ("i-power-half-minus-n", -1.5)] {
        r.reading("EVEN-MUN-2", label, format!("READ-EVEN-MUN-2.{label}"), "eq: even mun 2", TOL_QUADRATURE, DomainSpec::near_cusp(4.0, 3), move |p| {
            even_mun2(p, 2, 1, pw)
        });
    }

    for (label, sign) in [("plus", 1.0), ("minus", -1.0)] {
        r.reading("MU1-MU", label, format!("READ-MU1-MU.{label}"), "definition of mu_N", TOL_SERIES, DomainSpec::standard(2), move |p| {
            let c = cx(p)?;
            Ok(Sides::scalar(mu_n_eval(&p.u, &c)?, sign * mu_zwegers(p.u[0], -p.u[1], &c)?))
        });
    }

    for (label, x1_sign) in [("printed", 1.0), ("minus-x1", -1.0)] {
        r.reading("RIEMANN", label, format!("READ-RIEMANN.{label}"), "prop: appendix 1", TOL_SERIES, DomainSpec::standard(0).aux_polar(4, 0.7, 1.4), move |p| {
            let c = cx(p)?;
            let (a, b) = appendix::riemann(p, &c, x1_sign)?;
            Ok(Sides::scalar(a, b))
        });
    }

    for (label, fixed) in [("printed", false), ("sign-fixed", true)] {
        r.reading("STS-2", label, format!("READ-STS-2.{label}"), "eq: modular STS 2", TOL_QUADRATURE, DomainSpec::near_i(3), move |p| {
            sts_sides(p, 2, 1, StsForm::Explicit { sign_fixed: fixed })
        });
    }
}
