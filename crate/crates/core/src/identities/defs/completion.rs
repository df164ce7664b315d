use super::vector::s_factor;
use super::{cplx, cx, mat_vec, sgn, shifted, total, zeta, Reg};
use crate::completion::{h_n_vector, m_n_completed, mordell_h, mordell_h_info, mordell_h_panels, mu_n_completed, r_function};
use crate::identities::{DomainSpec, ParamPoint, Sides, Suite, TOL_QUADRATURE};
use crate::qcore::{e2pi, epi, C64, I};
use crate::Result;

pub(super) fn register(r: &mut Reg) {
    scalar_laws(r);
    for n in 2..=3usize {
        vector_laws(r, n);
        for m in 1..=2usize {
            r.add(format!("STS-1.N{n}M{m}"), "eq: modular STS", Suite::Completion, TOL_QUADRATURE, DomainSpec::near_i(n + 1), move |p| {
                sts_sides(p, n, m, StsForm::Factored)
            });
            r.add(format!("STS-2.N{n}M{m}"), "eq: modular STS 2", Suite::Completion, TOL_QUADRATURE, DomainSpec::near_i(n + 1), move |p| {
                sts_sides(p, n, m, StsForm::Explicit { sign_fixed: true })
            });
        }
    }
    for n in 1..=3usize {
        r.add(format!("MUNCOMP.N{n}"), "eq: modular completion of muN", Suite::Completion, TOL_QUADRATURE, DomainSpec::standard(n + 1), |p| {
            let c = cx(p)?;
            Ok(Sides::scalar(mu_n_completed(&p.u, &c)?, m_n_completed(&p.u, &c)?[0]))
        });
    }
}

fn scalar_laws(r: &mut Reg) {
    let s = Suite::Completion;
    let t = TOL_QUADRATURE;
    let d1 = || DomainSpec::standard(1);
    r.add("R-1", "eq: R 1", s, t, d1(), |p| {
        let c = cx(p)?;
        let u = p.u[0];
        Ok(Sides::scalar(r_function(u + 1.0, &c)?, -r_function(u, &c)?))
    });
    r.add("R-2", "eq: R 2", s, t, d1(), |p| {
        let c = cx(p)?;
        let u = p.u[0];
        let rhs = -e2pi(u) * c.qpowf(0.5) * r_function(u, &c)? + 2.0 * epi(u) * c.qpowf(0.375);
        Ok(Sides::scalar(r_function(u + p.tau, &c)?, rhs))
    });
    r.add("R-3", "eq: R 3", s, t, d1(), |p| {
        let c = cx(p)?;
        let u = p.u[0];
        Ok(Sides::scalar(r_function(u, &c.at(p.tau + 1.0)?)?, epi(cplx(-0.25, 0.0)) * r_function(u, &c)?))
    });
    r.add("R-4", "eq: R 4", s, t, DomainSpec::near_i(1), |p| {
        let c = cx(p)?;
        let (u, tau) = (p.u[0], p.tau);
        let lhs = epi(u * u / tau) / (-I * tau).sqrt() * r_function(u / tau, &c.at(-1.0 / tau)?)?;
        Ok(Sides::scalar(lhs, -r_function(u, &c)? + mordell_h(u, &c)?))
    });
    r.add("H-1", "eq: h relation 1", s, t, d1(), |p| {
        let c = cx(p)?;
        let (u, tau) = (p.u[0], p.tau);
        let rhs = 2.0 / (-I * tau).sqrt() * epi((u + 0.5) * (u + 0.5) / tau);
        Ok(Sides::scalar(mordell_h(u, &c)? + mordell_h(u + 1.0, &c)?, rhs))
    });
    r.add("H-2", "eq: h relation 2", s, t, d1(), |p| {
        let c = cx(p)?;
        let (u, tau) = (p.u[0], p.tau);
        let lhs = mordell_h(u, &c)? + e2pi(-u) * c.qpowf(-0.5) * mordell_h(u + tau, &c)?;
        Ok(Sides::scalar(lhs, 2.0 * epi(-u) * c.qpowf(-0.125)))
    });
    r.add("H-QUAD", "defi: h", s, 1e-10, d1(), |p| {
        let c = cx(p)?;
        let (h, info) = mordell_h_info(p.u[0], &c)?;
        Ok(Sides::scalar(h, mordell_h_panels(p.u[0], &c, 2 * info.panels).0))
    });
    for n in 2..=3usize {
        r.add(format!("RREL.N{n}"), "lem: R relation", s, t, d1(), move |p| {
            let c = cx(p)?;
            let (u, tau) = (p.u[0], p.tau);
            let nf = n as f64;
            let lhs = (-I).powu(n as u32 + 1) * epi(-(nf - 1.0) * u) * c.qpowf((nf - 1.0).powi(2) / (8.0 * nf))
                * r_function(u, &c.at(tau / nf)?)?;
            let big = c.at(nf * tau)?;
            let mut rhs = C64::new(0.0, 0.0);
            for k in 0..n {
                let kf = k as f64;
                let arg = nf * u + kf * tau - (nf - 1.0) / 2.0 * tau + (nf + 1.0) / 2.0;
                rhs += sgn(k as i64) * e2pi(-kf * u) * c.qpowf(-kf * (kf - nf + 1.0) / (2.0 * nf)) * r_function(arg, &big)?;
            }
            Ok(Sides::scalar(lhs, rhs))
        });
    }
}

fn vector_laws(r: &mut Reg, n: usize) {
    let s = Suite::Completion;
    let t = TOL_QUADRATURE;
    let nf = n as f64;
    let dom = || DomainSpec::standard(n + 1);
    let zn = zeta(n);
    r.add(format!("MNCOMP-1.N{n}"), "eq: MN completion 1", s, t, dom(), move |p| {
        let c = cx(p)?;
        let a = m_n_completed(&shifted(&p.u, 0, cplx(1.0, 0.0)), &c)?;
        let lhs = (0..n).map(|k| -zn.powu(k as u32) * a[k]).collect();
        Ok(Sides::vector(lhs, m_n_completed(&p.u, &c)?))
    });
    r.add(format!("MNCOMP-2.N{n}"), "eq: MN completion 2", s, t, dom(), move |p| {
        let c = cx(p)?;
        let u = total(&p.u);
        let b = m_n_completed(&shifted(&p.u, 0, p.tau), &c)?;
        let f = -e2pi(-u / nf) * c.qpowf(-1.0 / (2.0 * nf));
        let lhs = (0..n).map(|k| f * b[(k + n - 1) % n]).collect();
        Ok(Sides::vector(lhs, m_n_completed(&p.u, &c)?))
    });
    r.add(format!("MNCOMP-3.N{n}"), "eq: MN completion 3", s, t, DomainSpec::near_i(n + 1), move |p| {
        let c = cx(p)?;
        let a = m_n_completed(&p.u, &c.at(p.tau + 1.0)?)?;
        let lhs = (0..n)
            .map(|k| {
                let kf = k as f64;
                epi(cplx(nf / 4.0, 0.0)) * sgn(k as i64) * epi(cplx(kf * kf / nf, 0.0)) * a[k]
            })
            .collect();
        Ok(Sides::vector(lhs, m_n_completed(&p.u, &c)?))
    });
    r.add(format!("MNCOMP-4.N{n}"), "eq: MN completion 4", s, t, DomainSpec::near_i(n + 1), move |p| {
        let c = cx(p)?;
        let tau = p.tau;
        let scaled: Vec<C64> = p.u.iter().map(|&x| x / tau).collect();
        let d = m_n_completed(&scaled, &c.at(-1.0 / tau)?)?;
        let f = s_factor(total(&p.u), n, tau);
        let lhs = mat_vec(n, |j, k| f * zn.powi(-((j * k) as i32)), &d);
        Ok(Sides::vector(lhs, m_n_completed(&p.u, &c)?))
    });
    r.add(format!("HN-1.N{n}"), "eq: HN relation 1", s, t, DomainSpec::near_i(1), move |p| {
        let c = cx(p)?;
        let (u, tau) = (p.u[0], p.tau);
        let hh = h_n_vector(u + nf * tau, n, &c)?;
        let h0 = h_n_vector(u, n, &c)?;
        let f = sgn(n as i64) * e2pi(u) * c.qpowf(nf / 2.0);
        let lhs = hh.iter().zip(&h0).map(|(a, b)| a - f * b).collect();
        let rhs = (0..n).map(|k| hn1_rhs(u, n, k, &c, -2.0 * I * (-I).powu(n as u32))).collect();
        Ok(Sides::vector(lhs, rhs))
    });
    r.add(format!("HN-2.N{n}"), "eq: HN relation 2", s, t, DomainSpec::near_i(1), move |p| {
        let c = cx(p)?;
        let (u, tau) = (p.u[0], p.tau);
        let hh = h_n_vector(u + nf, n, &c)?;
        let h0 = h_n_vector(u, n, &c)?;
        let f = 2.0 / (nf.sqrt() * (-I * tau).sqrt());
        let lhs = hh.iter().zip(&h0).map(|(a, b)| a - sgn(n as i64) * b).collect();
        let rhs = (0..n)
            .map(|k| {
                f * (0..n)
                    .map(|j| {
                        let w = u - j as f64 + nf / 2.0;
                        sgn(j as i64) * zn.powi(-((j * k) as i32)) * epi(w * w / (nf * tau))
                    })
                    .sum::<C64>()
            })
            .collect();
        Ok(Sides::vector(lhs, rhs))
    });
    r.add(format!("TH-1.N{n}"), "eq: tH relation 1", s, t, DomainSpec::near_i(n + 1), move |p| {
        let c = cx(p)?;
        let u = total(&p.u);
        let h1 = h_tilde(&shifted(&p.u, 0, nf * p.tau), &c)?;
        let h0 = h_tilde(&p.u, &c)?;
        let f = sgn(n as i64) * e2pi(u) * c.qpowf(nf / 2.0);
        let lhs = h1.iter().zip(&h0).map(|(a, b)| a - f * b).collect();
        let rhs = (0..n)
            .map(|k| {
                let kf = k as f64;
                -I.powu(n as u32) * epi(u) * c.qpowf(3.0 * nf / 8.0) * sgn(k as i64) * e2pi(-kf * u / nf)
                    * c.qpowf(-kf * (kf + nf) / (2.0 * nf))
            })
            .collect();
        Ok(Sides::vector(lhs, rhs))
    });
    r.add(format!("TH-2.N{n}"), "eq: tH relation 2", s, t, DomainSpec::near_i(n + 1), move |p| {
        let c = cx(p)?;
        let (u, tau) = (total(&p.u), p.tau);
        let h2 = h_tilde(&shifted(&p.u, 0, cplx(nf, 0.0)), &c)?;
        let h0 = h_tilde(&p.u, &c)?;
        let lhs = h2.iter().zip(&h0).map(|(a, b)| a - sgn(n as i64) * b).collect();
        let w: Vec<C64> = (0..n)
            .map(|k| {
                let x = u - k as f64 + nf / 2.0;
                sgn(k as i64) * epi(x * x / (nf * tau))
            })
            .collect();
        let f = sgn(n as i64) * I / (nf.sqrt() * (-I * tau).sqrt());
        Ok(Sides::vector(lhs, mat_vec(n, |j, k| f * zn.powi(-((j * k) as i32)), &w)))
    });
    r.add(format!("HR.N{n}"), "H and R", s, t, DomainSpec::near_i(1), move |p| {
        let c = cx(p)?;
        let (u, tau) = (p.u[0], p.tau);
        let big = c.at(nf * tau)?;
        let dual = c.at(-nf / tau)?;
        let mut lhs = Vec::with_capacity(n);
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            let kf = k as f64;
            let pre = sgn(k as i64) * e2pi(-kf * u / nf) * epi(-tau * kf * kf / nf);
            let rr = r_function(u + kf * tau + (nf + 1.0) / 2.0, &big)?;
            let hh = mordell_h(u + kf * tau - (nf - 1.0) / 2.0, &big)?;
            lhs.push(pre * (rr - sgn(n as i64) * hh));
            let w = sgn(k as i64) * e2pi(-kf * u / (nf * tau)) * epi(cplx(kf * kf, 0.0) / (nf * tau));
            v.push(w * r_function(u / tau - kf / tau + (nf + 1.0) / 2.0, &dual)?);
        }
        let f = s_factor(u, n, tau);
        Ok(Sides::vector(lhs, mat_vec(n, |j, k| f * zn.powi(-((j * k) as i32)), &v)))
    });
}

/// Entry `k` of the right side of the first `H_N` relation with leading
/// constant `lead`.
pub(super) fn hn1_rhs(u: C64, n: usize, k: usize, c: &crate::qcore::QContext, lead: C64) -> C64 {
    let (kf, nf) = (k as f64, n as f64);
    -lead * epi(u) * c.qpowf(3.0 * nf / 8.0) * sgn(k as i64) * e2pi(-kf * u / nf) * c.qpowf(-kf / 2.0 - kf * kf / (2.0 * nf))
}

/// `H~_N`: the S-transformed `M_N` minus `M_N`.
fn h_tilde(us: &[C64], c: &crate::qcore::QContext) -> Result<Vec<C64>> {
    let n = us.len() - 1;
    let tau = c.tau();
    let scaled: Vec<C64> = us.iter().map(|&x| x / tau).collect();
    let ms = crate::mu::m_n_vector(&scaled, &c.at(-1.0 / tau)?)?;
    let m = crate::mu::m_n_vector(us, c)?;
    let f = s_factor(total(us), n, tau);
    let zn = zeta(n);
    let s = mat_vec(n, |j, k| f * zn.powi(-((j * k) as i32)), &ms);
    Ok(s.iter().zip(&m).map(|(a, b)| a - b).collect())
}

pub(super) enum StsForm {
    Factored,
    Explicit { sign_fixed: bool },
}

/// Both sides of the `Z W^m Z` law for the completed vector.
pub(super) fn sts_sides(p: &ParamPoint, n: usize, m: usize, form: StsForm) -> Result<Sides> {
    let c = cx(p)?;
    let (tau, u) = (p.tau, total(&p.u));
    let (nf, mf) = (n as f64, m as f64);
    let den = mf * tau - 1.0;
    let w: Vec<C64> = p.u.iter().map(|&x| x / den).collect();
    let mp = m_n_completed(&w, &c.at(-tau / den)?)?;
    let base = epi(cplx(mf * nf / 4.0, 0.0)) * epi(mf * u * u / (nf * den)) / (nf * (1.0 - mf * tau).sqrt());
    let z2 = epi(cplx(1.0 / nf, 0.0));
    let rhs = match form {
        StsForm::Factored => {
            let zn = zeta(n);
            let wdiag = |k: usize| {
                let kf = k as f64;
                (sgn(k as i64) * epi(cplx(kf * kf / nf, 0.0))).powu(m as u32)
            };
            let entry = |j: usize, k: usize| -> C64 {
                (0..n).map(|l| zn.powi(-((j * l) as i32)) * wdiag(l) * zn.powi(-((l * k) as i32))).sum()
            };
            mat_vec(n, |j, k| sgn(n as i64 + 1) * base * entry(j, k), &mp)
        }
        StsForm::Explicit { sign_fixed } => {
            let lead = if sign_fixed { sgn(n as i64 + 1) * base } else { base };
            let entry = |j: usize, k: usize| -> C64 {
                (0..n)
                    .map(|l| {
                        let e = (m * l * l) as i32 - 2 * (l * (j + k)) as i32;
                        sgn((m * l) as i64) * z2.powi(e)
                    })
                    .sum()
            };
            mat_vec(n, |j, k| lead * entry(j, k), &mp)
        }
    };
    Ok(Sides::vector(m_n_completed(&p.u, &c)?, rhs))
}
