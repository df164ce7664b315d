use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::qcore::{vartheta_checked, QContext, C64};

#[derive(Debug, Clone, PartialEq)]
pub enum TauDomain {
    Box { re: (f64, f64), im: (f64, f64) },
    /// `tau = (1+i)/k (1 + 0.1 t) + 0.02 i`, `t` uniform in `[-1, 1]`: close to
    /// the cusp `1/k`, so that `-tau/(k tau - 1)` stays well inside the half plane.
    NearCusp { k: f64 },
}

/// Distribution of an auxiliary complex parameter.
#[derive(Debug, Clone, PartialEq)]
pub enum AuxDist {
    Box { re: (f64, f64), im: (f64, f64) },
    /// modulus uniform in `r`, argument uniform in `[0, 2 pi)`
    Polar { r: (f64, f64) },
}

/// Where parameters are drawn from.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainSpec {
    pub tau: TauDomain,
    pub n_u: usize,
    pub u_re: (f64, f64),
    pub u_im: (f64, f64),
    pub alpha_re: (f64, f64),
    pub alpha_im: (f64, f64),
    pub aux: Vec<AuxDist>,
    /// require `|vartheta(u_j)|` above the pole guard for every `u_j`
    pub guard_u: bool,
    pub max_resamples: usize,
}

impl Default for DomainSpec {
    fn default() -> Self {
        DomainSpec {
            tau: TauDomain::Box { re: (-0.3, 0.3), im: (0.8, 1.4) },
            n_u: 0,
            u_re: (-0.45, 0.45),
            u_im: (-0.3, 0.3),
            alpha_re: (0.2, 0.9),
            alpha_im: (-0.2, 0.2),
            aux: Vec::new(),
            guard_u: true,
            max_resamples: 100,
        }
    }
}

impl DomainSpec {
    pub fn standard(n_u: usize) -> Self {
        DomainSpec { n_u, ..Default::default() }
    }

    /// tau near `i` and small u, for identities that also evaluate at `-1/tau`.
    pub fn near_i(n_u: usize) -> Self {
        DomainSpec {
            tau: TauDomain::Box { re: (-0.2, 0.2), im: (0.9, 1.1) },
            n_u,
            u_re: (-0.3, 0.3),
            u_im: (-0.2, 0.2),
            ..Default::default()
        }
    }

    pub fn near_cusp(k: f64, n_u: usize) -> Self {
        DomainSpec { tau: TauDomain::NearCusp { k }, n_u, u_re: (-0.2, 0.2), u_im: (-0.1, 0.1), ..Default::default() }
    }

    /// Append `n` auxiliary values drawn like the u's.
    pub fn aux_like_u(mut self, n: usize) -> Self {
        for _ in 0..n {
            self.aux.push(AuxDist::Box { re: self.u_re, im: self.u_im });
        }
        self
    }

    pub fn aux_polar(mut self, n: usize, lo: f64, hi: f64) -> Self {
        for _ in 0..n {
            self.aux.push(AuxDist::Polar { r: (lo, hi) });
        }
        self
    }

    pub fn tau_box(mut self, re: (f64, f64), im: (f64, f64)) -> Self {
        self.tau = TauDomain::Box { re, im };
        self
    }

    pub fn u_box(mut self, re: (f64, f64), im: (f64, f64)) -> Self {
        self.u_re = re;
        self.u_im = im;
        self
    }
}

/// One sampled parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamPoint {
    pub tau: C64,
    pub u: Vec<C64>,
    pub alpha: C64,
    pub aux: Vec<C64>,
    /// free random bits for identities that pick indices or permutations
    pub choice: u64,
}

fn uniform(rng: &mut ChaCha8Rng, (lo, hi): (f64, f64)) -> f64 {
    lo + (hi - lo) * rng.gen::<f64>()
}

pub(crate) struct Sampler<'a> {
    rng: ChaCha8Rng,
    spec: &'a DomainSpec,
    attempts: usize,
}

impl<'a> Sampler<'a> {
    pub(crate) fn new(spec: &'a DomainSpec, seed: u64, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        Sampler { rng, spec, attempts: 0 }
    }

    fn draw(&mut self) -> ParamPoint {
        let s = self.spec;
        let rng = &mut self.rng;
        let tau = match s.tau {
            TauDomain::Box { re, im } => C64::new(uniform(rng, re), uniform(rng, im)),
            TauDomain::NearCusp { k } => {
                let t = uniform(rng, (-1.0, 1.0));
                C64::new(1.0, 1.0) / k * (1.0 + 0.1 * t) + C64::new(0.0, 0.02)
            }
        };
        let u = (0..s.n_u).map(|_| C64::new(uniform(rng, s.u_re), uniform(rng, s.u_im))).collect();
        let alpha = C64::new(uniform(rng, s.alpha_re), uniform(rng, s.alpha_im));
        let aux = s
            .aux
            .iter()
            .map(|d| match *d {
                AuxDist::Box { re, im } => C64::new(uniform(rng, re), uniform(rng, im)),
                AuxDist::Polar { r } => C64::from_polar(uniform(rng, r), uniform(rng, (0.0, std::f64::consts::TAU))),
            })
            .collect();
        ParamPoint { tau, u, alpha, aux, choice: rng.gen() }
    }

    fn admissible(&self, p: &ParamPoint) -> bool {
        let Ok(ctx) = QContext::new(p.tau) else { return false };
        !self.spec.guard_u || p.u.iter().all(|&u| vartheta_checked(u, &ctx).is_ok())
    }

    /// Next point passing the domain guards; attempts are counted across calls.
    pub(crate) fn next_guarded(&mut self) -> Result<ParamPoint> {
        while self.attempts < self.spec.max_resamples {
            self.attempts += 1;
            let p = self.draw();
            if self.admissible(&p) {
                return Ok(p);
            }
        }
        Err(Error::SamplingExhausted(self.spec.max_resamples))
    }
}

/// Deterministic point number `index` of the stream `seed`.
pub fn sample_point(spec: &DomainSpec, seed: u64, index: u64) -> Result<ParamPoint> {
    Sampler::new(spec, seed, index).next_guarded()
}
