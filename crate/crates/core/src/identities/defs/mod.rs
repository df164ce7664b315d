//! Identity definitions, grouped by suite.

mod appendix;
mod borel;
mod completion;
mod genmu;
mod modular;
mod mu;
mod mulmu;
mod readings;
mod theta;
mod vector;

use std::sync::Arc;

use super::{DomainSpec, Identity, ParamPoint, Sides, Suite};
use crate::error::Result;
use crate::qcore::{e2pi, vartheta_checked, QContext, C64};

pub(super) struct Reg {
    v: Vec<Identity>,
}

impl Reg {
    pub(super) fn add<F>(&mut self, id: impl Into<String>, tag: &str, suite: Suite, tol: f64, domain: DomainSpec, f: F)
    where
        F: Fn(&ParamPoint) -> Result<Sides> + Send + Sync + 'static,
    {
        let id = id.into();
        debug_assert!(self.v.iter().all(|i| i.id != id), "duplicate identity {id}");
        self.v.push(Identity { id, tag: tag.to_string(), suite, tol, domain, reading: None, eval: Arc::new(f) });
    }

    /// A candidate reading of a display; `group` collects the competitors.
    #[allow(clippy::too_many_arguments)]
    pub(super) fn reading<F>(&mut self, group: &str, label: &str, id: impl Into<String>, tag: &str, tol: f64, domain: DomainSpec, f: F)
    where
        F: Fn(&ParamPoint) -> Result<Sides> + Send + Sync + 'static,
    {
        self.add(id, tag, Suite::Adjudication, tol, domain, f);
        self.v.last_mut().expect("just pushed").reading = Some((group.to_string(), label.to_string()));
    }
}

pub(super) fn build() -> Vec<Identity> {
    let mut r = Reg { v: Vec::new() };
    theta::register(&mut r);
    mu::register(&mut r);
    genmu::register(&mut r);
    mulmu::register(&mut r);
    vector::register(&mut r);
    completion::register(&mut r);
    modular::register(&mut r);
    borel::register(&mut r);
    appendix::register(&mut r);
    readings::register(&mut r);
    r.v
}

// small helpers shared by the definition files

fn cx(p: &ParamPoint) -> Result<QContext> {
    QContext::new(p.tau)
}

fn th(u: C64, c: &QContext) -> Result<C64> {
    vartheta_checked(u, c)
}

fn cplx(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn sgn(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `us` with `d` added to entry `j`.
fn shifted(us: &[C64], j: usize, d: C64) -> Vec<C64> {
    let mut v = us.to_vec();
    v[j] += d;
    v
}

fn total(us: &[C64]) -> C64 {
    us.iter().sum()
}

fn zeta(n: usize) -> C64 {
    e2pi(cplx(1.0 / n as f64, 0.0))
}

/// `x_j = -e^{2 pi i u_j}`.
fn xvars(us: &[C64]) -> Vec<C64> {
    us.iter().map(|&u| -e2pi(u)).collect()
}

/// Fisher-Yates shuffle of `0..n` driven by the point's free random bits.
fn permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    let mut s = seed | 1;
    for i in (1..n).rev() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        idx.swap(i, (s % (i as u64 + 1)) as usize);
    }
    idx
}

/// `mat * v` for a square matrix given by an entry rule.
fn mat_vec(n: usize, entry: impl Fn(usize, usize) -> C64, v: &[C64]) -> Vec<C64> {
    (0..n).map(|j| (0..n).map(|k| entry(j, k) * v[k]).sum()).collect()
}
