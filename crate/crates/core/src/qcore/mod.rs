//! Shared q-series machinery: the evaluation context, Pochhammer symbols,
//! theta functions, lattice sums and basic hypergeometric series.

mod context;
mod hypergeometric;
mod lattice;
mod pochhammer;
mod sum;
mod theta;

pub use context::{e2pi, epi, QContext, TruncationPolicy, C64, I, PI};
pub use hypergeometric::{basic_series, q_hypergeometric};
pub use lattice::{lattice_sum, lattice_theta, lattice_theta_dual, lattice_theta_shifted, SymMatrix};
pub use pochhammer::{qpoch_finite, qpoch_inf, qpoch_order, qpoch_ratio};
pub use sum::{bilateral_sum, CompensatedSum};
pub use theta::{
    dedekind_eta, jacobi_theta, jacobi_theta_series, ln_theta_q, theta_q, theta_q_ratio,
    theta_q_series, vartheta_checked,
};
