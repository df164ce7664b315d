use super::{cplx, cx, mat_vec, permutation, sgn, shifted, total, zeta, Reg};
use crate::completion::h_n_vector;
use crate::identities::{DomainSpec, Sides, Suite, TOL_MODULAR, TOL_QUADRATURE};
use crate::mu::{m_n_vector, nu_eval, phi_n_eval};
use crate::qcore::{e2pi, epi, lattice_theta, lattice_theta_dual, SymMatrix, C64, I};

pub(super) fn register(r: &mut Reg) {
    for n in 2..=3usize {
        vector_laws(r, n);
        nu_laws(r, n);
        phi_laws(r, n);
        modular_laws(r, n);
    }
}

/// `v_j = u_0 + u_1 - u_{j+1}`.
fn v_of(us: &[C64]) -> Vec<C64> {
    (2..us.len()).map(|j| us[0] + us[1] - us[j]).collect()
}

/// `(-i)^{N+1} e^{pi i u^2/(N tau)} / (sqrt(N) sqrt(-i tau))`.
pub(super) fn s_factor(u: C64, n: usize, tau: C64) -> C64 {
    let nf = n as f64;
    (-I).powu(n as u32 + 1) * epi(u * u / (nf * tau)) / (nf.sqrt() * (-I * tau).sqrt())
}

fn vector_laws(r: &mut Reg, n: usize) {
    let s = Suite::MN;
    let nf = n as f64;
    let dom = || DomainSpec::standard(n + 1);
    r.add(format!("MN-1.N{n}"), "eq: MN 1", s, TOL_MODULAR, dom(), move |p| {
        let c = cx(p)?;
        let m1 = m_n_vector(&shifted(&p.u, 0, cplx(1.0, 0.0)), &c)?;
        let z = zeta(n);
        let lhs = (0..n).map(|k| z.powu(k as u32) * m1[k]).collect();
        Ok(Sides::vector(lhs, m_n_vector(&p.u, &c)?.iter().map(|x| -x).collect()))
    });
    r.add(format!("MN-2.N{n}"), "eq: MN 2", s, TOL_MODULAR, dom(), move |p| {
        let c = cx(p)?;
        let u = total(&p.u);
        let mt = m_n_vector(&shifted(&p.u, 0, p.tau), &c)?;
        let f = e2pi(-u / nf - p.tau / (2.0 * nf));
        let lhs = (0..n).map(|k| f * mt[(k + n - 1) % n]).collect();
        let mut rhs: Vec<C64> = m_n_vector(&p.u, &c)?.iter().map(|x| -x).collect();
        rhs[0] -= (-I).powu(n as u32) * epi(-u) * c.qpowf(-nf / 8.0);
        Ok(Sides::vector(lhs, rhs))
    });
    r.add(format!("MN-3.N{n}"), "eq: MN 3", s, TOL_MODULAR, DomainSpec::standard(n + 2), move |p| {
        let c = cx(p)?;
        let us = &p.u[..=n];
        let z = p.u[n + 1];
        let moved = shifted(&shifted(us, 0, -z), 1, z);
        let a = m_n_vector(&moved, &c)?;
        let b = m_n_vector(us, &c)?;
        Ok(Sides::vector(a.iter().zip(&b).map(|(x, y)| x - y).collect(), phi_n_eval(us, z, &c)?))
    });
    r.add(format!("MN-4.N{n}"), "eq: MN 4", s, TOL_MODULAR, dom(), move |p| {
        let c = cx(p)?;
        let perm: Vec<C64> = permutation(n + 1, p.choice).into_iter().map(|i| p.u[i]).collect();
        Ok(Sides::vector(m_n_vector(&p.u, &c)?, m_n_vector(&perm, &c)?))
    });
    r.add(format!("MN-5.N{n}"), "eq: MN 5", s, TOL_MODULAR, dom(), move |p| {
        let c = cx(p)?;
        let i = 1 + (p.choice as usize) % n;
        let j = 1 + (i + (p.choice as usize / 5) % (n - 1)) % n;
        let moved = shifted(&shifted(&p.u, i, -p.tau), j, p.tau);
        Ok(Sides::vector(m_n_vector(&moved, &c)?, m_n_vector(&p.u, &c)?))
    });
}

fn nu_laws(r: &mut Reg, n: usize) {
    let s = Suite::MN;
    let nf = n as f64;
    let dom = || DomainSpec::standard(n + 1);
    r.add(format!("NU-1.N{n}"), "lem: nu 1", s, TOL_MODULAR, dom(), move |p| {
        let c = cx(p)?;
        let moved = shifted(&p.u, 0, cplx(1.0, 0.0));
        let z = zeta(n);
        let mut l = Vec::new();
        let mut rr = Vec::new();
        for k in 0..n {
            l.push(nu_eval(&moved, k, &c)?);
            rr.push(z.powi(-(k as i32)) * nu_eval(&p.u, k, &c)?);
        }
        Ok(Sides::vector(l, rr))
    });
    r.add(format!("NU-2.N{n}"), "lem: nu 2", s, TOL_MODULAR, dom(), move |p| {
        let c = cx(p)?;
        let moved = shifted(&p.u, 0, p.tau);
        let e1 = v_of(&p.u).iter().sum::<C64>() / nf;
        let f = e2pi(-e1 - p.tau * (nf - 1.0) / (2.0 * nf));
        let mut l = Vec::new();
        let mut rr = Vec::new();
        for k in 0..n {
            l.push(nu_eval(&moved, k, &c)?);
            rr.push(f * nu_eval(&p.u, (k + 1) % n, &c)?);
        }
        Ok(Sides::vector(l, rr))
    });
    r.add(format!("NU-3.N{n}"), "lem: nu 3", s, TOL_MODULAR, DomainSpec::near_i(n + 1), move |p| {
        let c = cx(p)?;
        let t1 = c.at(p.tau + 1.0)?;
        let mut l = Vec::new();
        let mut rr = Vec::new();
        for k in 0..n {
            let kf = k as f64;
            l.push(nu_eval(&p.u, k, &t1)?);
            rr.push(sgn(k as i64) * epi(cplx(-kf * kf / nf, 0.0)) * nu_eval(&p.u, k, &c)?);
        }
        Ok(Sides::vector(l, rr))
    });
    r.add(format!("NU-4.N{n}"), "lem: nu4", s, TOL_MODULAR, DomainSpec::near_i(n + 1), move |p| {
        let c = cx(p)?;
        let tau = p.tau;
        let st = c.at(-1.0 / tau)?;
        let scaled: Vec<C64> = p.u.iter().map(|&x| x / tau).collect();
        let v = v_of(&p.u);
        let shat = SymMatrix::hat(n);
        let pre = (-I * tau).powf((nf - 1.0) / 2.0) / nf.sqrt() * epi(shat.bilinear_inv(&v, &v) / tau);
        let base: Vec<C64> = (0..n).map(|j| nu_eval(&p.u, j, &c)).collect::<crate::Result<_>>()?;
        let z = zeta(n);
        let mut l = Vec::new();
        let mut rr = Vec::new();
        for k in 0..n {
            l.push(nu_eval(&scaled, k, &st)?);
            rr.push(pre * (0..n).map(|j| z.powu((j * k) as u32) * base[j]).sum::<C64>());
        }
        Ok(Sides::vector(l, rr))
    });
    r.add(format!("NU-CLOSED.N{n}"), "nu to thetaS", s, TOL_MODULAR, dom(), move |p| {
        let c = cx(p)?;
        let u = total(&p.u);
        let v = v_of(&p.u);
        let shat = SymMatrix::hat(n);
        let mut l = Vec::new();
        let mut rr = Vec::new();
        for k in 0..n {
            let kf = k as f64;
            let w: Vec<C64> = v.iter().map(|&x| x + kf * p.tau).collect();
            let pre = e2pi(kf * (p.u[0] + p.u[1]) - kf * u / nf) * epi(p.tau * kf * kf * (nf - 1.0) / nf);
            l.push(nu_eval(&p.u, k, &c)?);
            rr.push(pre * lattice_theta(&shat, &w, &c)?);
        }
        Ok(Sides::vector(l, rr))
    });
    r.add(format!("THETAS-TRANS.N{n}"), "thetaS trans", s, TOL_MODULAR, dom(), move |p| {
        let c = cx(p)?;
        let v = v_of(&p.u);
        let sv: C64 = v.iter().sum();
        let shat = SymMatrix::hat(n);
        let mut rhs = C64::new(0.0, 0.0);
        for k in 0..n {
            let kf = k as f64;
            let w: Vec<C64> = v.iter().map(|&x| x + kf * p.tau).collect();
            rhs += e2pi(sv * kf / nf) * epi(p.tau * kf * kf * (nf - 1.0) / nf) * lattice_theta(&shat, &w, &c)?;
        }
        Ok(Sides::scalar(lattice_theta_dual(&shat, &v, &c)?, rhs))
    });
}

fn phi_laws(r: &mut Reg, n: usize) {
    let s = Suite::MN;
    let nf = n as f64;
    let dom = || DomainSpec::standard(n + 2);
    let split = move |p: &crate::identities::ParamPoint| (p.u[..=n].to_vec(), p.u[n + 1]);
    r.add(format!("PHI-1.N{n}"), "eq: PhiN 1", s, TOL_MODULAR, dom(), move |p| {
        let c = cx(p)?;
        let (us, z) = split(p);
        let f = phi_n_eval(&us, z, &c)?;
        let zn = zeta(n);
        let rhs = (0..n).map(|k| -zn.powi(-(k as i32)) * f[k]).collect();
        Ok(Sides::vector(phi_n_eval(&shifted(&us, 0, cplx(1.0, 0.0)), z, &c)?, rhs))
    });
    r.add(format!("PHI-2.N{n}"), "eq: PhiN 2", s, TOL_MODULAR, dom(), move |p| {
        let c = cx(p)?;
        let (us, z) = split(p);
        let f = phi_n_eval(&us, z, &c)?;
        let cc = -e2pi(total(&us) / nf + p.tau / (2.0 * nf));
        let rhs = (0..n).map(|k| cc * f[(k + 1) % n]).collect();
        Ok(Sides::vector(phi_n_eval(&shifted(&us, 0, p.tau), z, &c)?, rhs))
    });
    r.add(format!("PHI-3.N{n}"), "eq: PhiN 3", s, TOL_MODULAR, DomainSpec::near_i(n + 2), move |p| {
        let c = cx(p)?;
        let (us, z) = split(p);
        let f = phi_n_eval(&us, z, &c)?;
        let rhs = (0..n)
            .map(|k| {
                let kf = k as f64;
                epi(cplx(-nf / 4.0, 0.0)) * sgn(k as i64) * epi(cplx(-kf * kf / nf, 0.0)) * f[k]
            })
            .collect();
        Ok(Sides::vector(phi_n_eval(&us, z, &c.at(p.tau + 1.0)?)?, rhs))
    });
    r.add(format!("PHI-4.N{n}"), "eq: PhiN 4", s, TOL_MODULAR, DomainSpec::near_i(n + 2), move |p| {
        let c = cx(p)?;
        let (us, z) = split(p);
        let tau = p.tau;
        let f = phi_n_eval(&us, z, &c)?;
        let scaled: Vec<C64> = us.iter().map(|&x| x / tau).collect();
        let lhs = phi_n_eval(&scaled, z / tau, &c.at(-1.0 / tau)?)?;
        let u = total(&us);
        let cc = (-I * tau).sqrt() / ((-I).powu(n as u32 + 1) * nf.sqrt()) * epi(-u * u / (nf * tau));
        let zn = zeta(n);
        let rhs = mat_vec(n, |j, k| cc * zn.powu((j * k) as u32), &f);
        Ok(Sides::vector(lhs, rhs))
    });
}

fn modular_laws(r: &mut Reg, n: usize) {
    let s = Suite::MN;
    let nf = n as f64;
    r.add(format!("MNMOD-1.N{n}"), "eq: MN modular 1", s, TOL_MODULAR, DomainSpec::near_i(n + 1), move |p| {
        let c = cx(p)?;
        let m1 = m_n_vector(&p.u, &c.at(p.tau + 1.0)?)?;
        let rhs = (0..n)
            .map(|k| {
                let kf = k as f64;
                epi(cplx(nf / 4.0, 0.0)) * sgn(k as i64) * epi(cplx(kf * kf / nf, 0.0)) * m1[k]
            })
            .collect();
        Ok(Sides::vector(m_n_vector(&p.u, &c)?, rhs))
    });
    r.add(format!("MNMOD-2.N{n}"), "eq: MN modular 2", s, TOL_QUADRATURE, DomainSpec::near_i(n + 1), move |p| {
        let c = cx(p)?;
        let tau = p.tau;
        let u = total(&p.u);
        let scaled: Vec<C64> = p.u.iter().map(|&x| x / tau).collect();
        let ms = m_n_vector(&scaled, &c.at(-1.0 / tau)?)?;
        let h = h_n_vector(u, n, &c)?;
        let f = s_factor(u, n, tau);
        let zn = zeta(n);
        let mut rhs = mat_vec(n, |j, k| f * zn.powi(-((j * k) as i32)), &ms);
        for (x, hj) in rhs.iter_mut().zip(&h) {
            *x -= sgn(n as i64) * 0.5 * I * hj;
        }
        Ok(Sides::vector(m_n_vector(&p.u, &c)?, rhs))
    });
}
