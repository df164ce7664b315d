//! Appell-Lerch sums: Zwegers' mu, its Pochhammer generalization, the
//! multivariable `mu_N`, `f_N` and the vector valued forms built on them.

mod multi;
mod vector;
mod zwegers;

pub use multi::{f1_eval, f_n_eval, hat_mu_n_eval, hat_mu_n_series, mu_n_eval, HatMuReading};
pub use vector::{m_n_vector, nu_eval, phi_n_eval};
pub use zwegers::{mu_generalized, mu_zwegers};

use crate::error::{Error, Result};
use crate::qcore::{QContext, C64};

const DENOM_TOL: f64 = 1e-12;

pub(crate) fn checked_inv(d: C64, what: &str) -> Result<C64> {
    if d.norm() < DENOM_TOL {
        return Err(Error::PoleProximity(format!("{what}: denominator vanishes")));
    }
    Ok(1.0 / d)
}

/// `theta_q(x)`, rejecting points where it (nearly) vanishes. The size is
/// judged against `theta_q(|x|)` on the same circle.
pub(crate) fn theta_q_checked(x: C64, ctx: &QContext) -> Result<C64> {
    let t = crate::qcore::theta_q(x, ctx)?;
    let scale = crate::qcore::theta_q(C64::new(x.norm(), 0.0), ctx)?.norm();
    if t.norm() < 1e-10 * scale {
        return Err(Error::PoleProximity(format!("theta_q({x}) is within the pole guard")));
    }
    Ok(t)
}
