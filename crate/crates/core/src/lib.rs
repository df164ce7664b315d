//! Numerical toolkit for Appell-Lerch type sums.
//!
//! The crate evaluates Zwegers' mu function, its generalization with a
//! Pochhammer parameter, the multivariable sums `mu_N` and `hat mu_N`, the
//! vector valued forms built from them and their non-holomorphic
//! completions. It also implements q-Borel resummation and the connection
//! problem for a family of q-difference equations, plus a registry of
//! identities that can be checked numerically at random points.
//!
//! Conventions: `q = e^{2 pi i tau}`, every fractional power of `q` means
//! `exp(2 pi i tau c)`, and `sqrt(-i tau)` is the principal branch.

pub mod borel;
pub mod completion;
pub mod error;
pub mod identities;
pub mod mu;
pub mod qcore;
pub mod qdiff;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
pub use qcore::{QContext, TruncationPolicy};
