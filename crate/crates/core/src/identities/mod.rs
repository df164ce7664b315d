//! Registry of identities checked numerically at random parameter points.
//!
//! Each identity evaluates both sides at a sampled [`ParamPoint`] and
//! reports the relative residual
//! `max_k |lhs_k - rhs_k| / max(max |lhs|, max |rhs|, 1e-30)`.

mod defs;
mod report;
mod sampling;

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qcore::C64;

pub use report::{AdjudicationReport, ReadingOutcome, VerificationReport};
pub use sampling::{sample_point, AuxDist, DomainSpec, ParamPoint, TauDomain};

/// Tolerance classes.
pub const TOL_SERIES: f64 = 1e-9;
pub const TOL_MODULAR: f64 = 1e-8;
pub const TOL_QUADRATURE: f64 = 1e-6;

const RESIDUAL_FLOOR: f64 = 1e-30;

/// Coverage table: one row per display, `tag<TAB>id<TAB>suite`.
pub const COVERAGE_TABLE: &str = include_str!("coverage.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Theta,
    Mu,
    Genmu,
    Mulmu,
    MN,
    Completion,
    Modular,
    Borel,
    Appendix,
    /// competing readings of displays suspected to contain typos
    Adjudication,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Theta,
        Suite::Mu,
        Suite::Genmu,
        Suite::Mulmu,
        Suite::MN,
        Suite::Completion,
        Suite::Modular,
        Suite::Borel,
        Suite::Appendix,
        Suite::Adjudication,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theta => "theta",
            Suite::Mu => "mu",
            Suite::Genmu => "genmu",
            Suite::Mulmu => "mulmu",
            Suite::MN => "MN",
            Suite::Completion => "completion",
            Suite::Modular => "modular",
            Suite::Borel => "borel",
            Suite::Appendix => "appendix",
            Suite::Adjudication => "adjudication",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|x| x.name().eq_ignore_ascii_case(s))
    }
}

/// Both sides of an identity at one point. Scalar identities use length-1 vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Sides {
    pub lhs: Vec<C64>,
    pub rhs: Vec<C64>,
}

impl Sides {
    pub fn scalar(lhs: C64, rhs: C64) -> Self {
        Sides { lhs: vec![lhs], rhs: vec![rhs] }
    }

    pub fn vector(lhs: Vec<C64>, rhs: Vec<C64>) -> Self {
        Sides { lhs, rhs }
    }

    pub fn residual(&self) -> f64 {
        let diff = self.lhs.iter().zip(&self.rhs).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        let scale = self.lhs.iter().chain(&self.rhs).map(|z| z.norm()).fold(RESIDUAL_FLOOR, f64::max);
        if self.lhs.len() != self.rhs.len() || !diff.is_finite() || !scale.is_finite() {
            return f64::INFINITY;
        }
        diff / scale
    }
}

pub type Evaluator = Arc<dyn Fn(&ParamPoint) -> Result<Sides> + Send + Sync>;

/// A registered identity.
#[derive(Clone)]
pub struct Identity {
    pub id: String,
    /// label of the display being checked
    pub tag: String,
    pub suite: Suite,
    pub tol: f64,
    pub domain: DomainSpec,
    /// `(group, label)` for competing readings of one display
    pub reading: Option<(String, String)>,
    eval: Evaluator,
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("tag", &self.tag)
            .field("suite", &self.suite)
            .field("tol", &self.tol)
            .finish()
    }
}

impl Identity {
    pub fn sides(&self, p: &ParamPoint) -> Result<Sides> {
        (self.eval)(p)
    }
}

/// All registered identities, in a fixed order.
pub fn registry() -> &'static [Identity] {
    static REG: OnceLock<Vec<Identity>> = OnceLock::new();
    REG.get_or_init(defs::build)
}

pub fn find(id: &str) -> Result<&'static Identity> {
    family(id).first().copied().ok_or_else(|| Error::Unknown(id.to_string()))
}

/// An exact id, or else every member `id.<variant>` of a family such as
/// `MNCOMP-4` (variants `MNCOMP-4.N2`, `MNCOMP-4.N3`).
pub fn family(id: &str) -> Vec<&'static Identity> {
    if let Some(i) = registry().iter().find(|i| i.id == id) {
        return vec![i];
    }
    let prefix = format!("{id}.");
    registry().iter().filter(|i| i.id.starts_with(&prefix)).collect()
}

/// Identities belonging to a suite name; `"all"` covers every suite except
/// the adjudication one.
pub fn suite_members(suite: &str) -> Result<Vec<&'static Identity>> {
    if suite.eq_ignore_ascii_case("all") {
        return Ok(registry().iter().filter(|i| i.suite != Suite::Adjudication).collect());
    }
    let s = Suite::parse(suite).ok_or_else(|| Error::Unknown(format!("suite {suite}")))?;
    Ok(registry().iter().filter(|i| i.suite == s).collect())
}

/// Relative residual of a registered identity at a given point.
///
/// A family id resolves to the first member whose parameter shape matches
/// the point.
pub fn evaluate_identity(id: &str, point: &ParamPoint) -> Result<f64> {
    let members = family(id);
    let ident = members
        .iter()
        .find(|i| i.domain.n_u == point.u.len() && i.domain.aux.len() == point.aux.len())
        .or_else(|| members.first())
        .ok_or_else(|| Error::Unknown(id.to_string()))?;
    ident.sides(point).map(|s| s.residual()).map_err(|e| annotate(e, id, point))
}

fn annotate(e: Error, id: &str, p: &ParamPoint) -> Error {
    let msg = format!("{id} at tau = {}, u = {:?}: {e}", p.tau, p.u);
    match e {
        Error::PoleProximity(_) => Error::PoleProximity(msg),
        Error::NonConvergent(_) => Error::NonConvergent(msg),
        Error::DivergentSeries(_) => Error::DivergentSeries(msg),
        Error::PoleInDenominator(_) => Error::PoleInDenominator(msg),
        Error::ZeroArgument(_) => Error::ZeroArgument(msg),
        Error::KernelPole(_) => Error::KernelPole(msg),
        Error::QuadratureFailure(_) => Error::QuadratureFailure(msg),
        Error::ParameterDegeneracy(_) => Error::ParameterDegeneracy(msg),
        other => other,
    }
}

fn is_guard_failure(e: &Error) -> bool {
    matches!(e, Error::PoleProximity(_) | Error::KernelPole(_) | Error::ParameterDegeneracy(_))
}

/// FNV-1a, used to give each identity its own sample stream.
fn id_hash(id: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Evaluate sample `index` of an identity. Points where an evaluator
/// reports a pole (beyond the generic theta guard) are redrawn from the
/// same stream.
fn run_sample(ident: &Identity, seed: u64, index: u64) -> std::result::Result<f64, String> {
    let stream_seed = seed ^ id_hash(&ident.id);
    let mut sampler = sampling::Sampler::new(&ident.domain, stream_seed, index);
    for _ in 0..ident.domain.max_resamples {
        let p = match sampler.next_guarded() {
            Ok(p) => p,
            Err(e) => return Err(e.to_string()),
        };
        match ident.sides(&p) {
            Ok(s) => return Ok(s.residual()),
            Err(e) if is_guard_failure(&e) => continue,
            Err(e) => return Err(annotate(e, &ident.id, &p).to_string()),
        }
    }
    Err(Error::SamplingExhausted(ident.domain.max_resamples).to_string())
}

/// Run one identity at `n_samples` points.
pub fn verify_identity(ident: &Identity, seed: u64, n_samples: usize, tol: Option<f64>) -> VerificationReport {
    let start = Instant::now();
    let tol = tol.unwrap_or(ident.tol);
    let outcomes: Vec<std::result::Result<f64, String>> =
        (0..n_samples as u64).into_par_iter().map(|i| run_sample(ident, seed, i)).collect();
    let mut max = 0.0f64;
    let mut sum = 0.0;
    let mut error = None;
    for o in &outcomes {
        match o {
            Ok(r) => {
                max = if r.is_nan() { f64::INFINITY } else { max.max(*r) };
                sum += r;
            }
            Err(e) => {
                max = f64::INFINITY;
                sum = f64::INFINITY;
                error.get_or_insert_with(|| e.clone());
            }
        }
    }
    let mean = if n_samples == 0 { 0.0 } else { sum / n_samples as f64 };
    VerificationReport {
        id: ident.id.clone(),
        tag: ident.tag.clone(),
        suite: ident.suite.name().to_string(),
        seed,
        n_samples,
        max_rel_residual: max,
        mean_rel_residual: mean,
        tol,
        pass: max <= tol,
        wall_time: start.elapsed().as_secs_f64(),
        error,
        note: if n_samples == 0 { Some("no samples".into()) } else { None },
    }
}

/// Run every identity of a suite. Failures are recorded in the reports.
pub fn run_suite(suite: &str, seed: u64, n_samples: usize, tol_override: Option<f64>) -> Result<Vec<VerificationReport>> {
    let members = suite_members(suite)?;
    Ok(members.par_iter().map(|i| verify_identity(i, seed, n_samples, tol_override)).collect())
}

/// Run each group of competing readings and report which of them pass.
pub fn adjudicate(seed: u64, n_samples: usize) -> Vec<AdjudicationReport> {
    let readings: Vec<&Identity> = registry().iter().filter(|i| i.reading.is_some()).collect();
    let reports: Vec<VerificationReport> = readings.par_iter().map(|i| verify_identity(i, seed, n_samples, None)).collect();
    let mut groups: Vec<AdjudicationReport> = Vec::new();
    for (ident, rep) in readings.iter().zip(reports) {
        let (group, label) = ident.reading.clone().expect("filtered on readings");
        let outcome = ReadingOutcome {
            label,
            id: rep.id.clone(),
            max_rel_residual: rep.max_rel_residual,
            pass: rep.pass,
        };
        match groups.iter_mut().find(|g| g.group == group) {
            Some(g) => g.readings.push(outcome),
            None => groups.push(AdjudicationReport { group, tag: ident.tag.clone(), readings: vec![outcome], exactly_one: false }),
        }
    }
    for g in &mut groups {
        g.exactly_one = g.readings.iter().filter(|r| r.pass).count() == 1;
    }
    groups
}

/// Parsed rows of [`COVERAGE_TABLE`] as `(tag, id, suite)`.
pub fn coverage_rows() -> Vec<(String, String, String)> {
    COVERAGE_TABLE
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .filter_map(|l| {
            let mut it = l.split('\t');
            Some((it.next()?.to_string(), it.next()?.to_string(), it.next()?.to_string()))
        })
        .collect()
}
