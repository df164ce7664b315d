use super::mu_n_eval;
use crate::error::{Error, Result};
use crate::qcore::{dedekind_eta, e2pi, lattice_theta_shifted, vartheta_checked, QContext, SymMatrix, C64, I, PI};

/// `nu_{N,k}(u)`: the theta series of the `(N-1)`-dimensional form
/// `sum n_i^2 + (sum n_i)^2` over `Z^{N-1} + k/N`, twisted by
/// `v_j = u_0 + u_1 - u_{j+1}`. Equal to 1 when `N = 1`.
pub fn nu_eval(us: &[C64], k: usize, ctx: &QContext) -> Result<C64> {
    if us.len() < 2 {
        return Err(Error::InvalidInput("nu needs at least two variables".into()));
    }
    let n = us.len() - 1;
    if n == 1 {
        return Ok(C64::new(1.0, 0.0));
    }
    let v: Vec<C64> = (2..=n).map(|j| us[0] + us[1] - us[j]).collect();
    let shift = vec![k as f64 / n as f64; n - 1];
    lattice_theta_shifted(&SymMatrix::hat(n), &v, &shift, ctx)
}

/// The vector `Phi_N(u; z)` with entries
/// `i eta^3 vartheta(z) vartheta(z-u_0+u_1) / (vartheta(z-u_0) vartheta(z+u_1) prod vartheta(u_j)) nu_{N,k}(u)`.
pub fn phi_n_eval(us: &[C64], z: C64, ctx: &QContext) -> Result<Vec<C64>> {
    if us.len() < 2 {
        return Err(Error::InvalidInput("Phi_N needs at least two variables".into()));
    }
    let n = us.len() - 1;
    let eta = dedekind_eta(ctx);
    let mut pre = I * eta * eta * eta * crate::qcore::jacobi_theta(z, ctx) * crate::qcore::jacobi_theta(z - us[0] + us[1], ctx)
        / (vartheta_checked(z - us[0], ctx)? * vartheta_checked(z + us[1], ctx)?);
    for &u in us {
        pre /= vartheta_checked(u, ctx)?;
    }
    (0..n).map(|k| Ok(pre * nu_eval(us, k, ctx)?)).collect()
}

/// `M_N(u)` with entries `(-1)^k e^{-2 pi i k u/N} q^{-k^2/(2N)} mu_N(u_0 + k tau, u_1, ..., u_N)`.
pub fn m_n_vector(us: &[C64], ctx: &QContext) -> Result<Vec<C64>> {
    if us.len() < 2 {
        return Err(Error::InvalidInput("M_N needs at least two variables".into()));
    }
    let n = us.len() - 1;
    let nf = n as f64;
    let u: C64 = us.iter().sum();
    let tau = ctx.tau();
    (0..n)
        .map(|k| {
            let kf = k as f64;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let mut shifted = us.to_vec();
            shifted[0] += kf * tau;
            let pref = sign * e2pi(-kf * u / nf) * (-PI * I * tau * kf * kf / nf).exp();
            Ok(pref * mu_n_eval(&shifted, ctx)?)
        })
        .collect()
}
