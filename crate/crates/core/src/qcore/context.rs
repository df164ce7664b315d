use crate::error::{Error, Result};
pub use num_complex::Complex64 as C64;
pub use std::f64::consts::PI;

pub const I: C64 = C64::new(0.0, 1.0);

/// `exp(2 pi i z)`.
#[inline]
pub fn e2pi(z: C64) -> C64 {
    (2.0 * PI * I * z).exp()
}

/// `exp(pi i z)`.
#[inline]
pub fn epi(z: C64) -> C64 {
    (PI * I * z).exp()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    /// relative size below which a series term is dropped
    pub eps_term: f64,
    /// hard cap on summation index (or lattice shell radius)
    pub max_index: usize,
    /// relative size below which a whole lattice shell counts as negligible
    pub lattice_shell_eps: f64,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy { eps_term: 1e-16, max_index: 512, lattice_shell_eps: 1e-16 }
    }
}

/// A point in the upper half plane together with the truncation rules used
/// for every sum evaluated there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QContext {
    tau: C64,
    q: C64,
    policy: TruncationPolicy,
}

impl QContext {
    pub fn new(tau: C64) -> Result<Self> {
        Self::with_policy(tau, TruncationPolicy::default())
    }

    pub fn with_policy(tau: C64, policy: TruncationPolicy) -> Result<Self> {
        if !(tau.im > 0.0) || !tau.re.is_finite() || !tau.im.is_finite() {
            return Err(Error::InvalidInput(format!("tau must lie in the upper half plane, got {tau}")));
        }
        Ok(QContext { tau, q: e2pi(tau), policy })
    }

    /// Same truncation policy at another tau.
    pub fn at(&self, tau: C64) -> Result<Self> {
        Self::with_policy(tau, self.policy)
    }

    #[inline]
    pub fn tau(&self) -> C64 {
        self.tau
    }

    #[inline]
    pub fn q(&self) -> C64 {
        self.q
    }

    #[inline]
    pub fn policy(&self) -> &TruncationPolicy {
        &self.policy
    }

    /// `q^c = exp(2 pi i tau c)`.
    #[inline]
    pub fn qpow(&self, c: C64) -> C64 {
        e2pi(self.tau * c)
    }

    #[inline]
    pub fn qpowf(&self, c: f64) -> C64 {
        e2pi(self.tau * c)
    }

    /// `|q|^c` without forming q.
    #[inline]
    pub fn qabs_pow(&self, c: f64) -> f64 {
        (-2.0 * PI * self.tau.im * c).exp()
    }
}
