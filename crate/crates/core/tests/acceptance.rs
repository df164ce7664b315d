//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the test
//! target exits non-zero if any criterion fails. Runs without the libtest
//! harness so the lines are always shown.

use std::time::Instant;

use mu_lab::identities::{adjudicate, registry, verify_identity, Identity, VerificationReport};

const SEED: u64 = 1;

/// An id family (exact id or `prefix.` variants) with its pinned tolerance.
struct Check {
    family: &'static str,
    tol: f64,
}

const fn c(family: &'static str, tol: f64) -> Check {
    Check { family, tol }
}

struct Criterion {
    name: &'static str,
    checks: Vec<Check>,
    samples: usize,
    /// wall clock budget in seconds
    budget: Option<f64>,
}

fn members(family: &str) -> Vec<&'static Identity> {
    let dotted = format!("{family}.");
    registry().iter().filter(|i| i.id == family || i.id.starts_with(&dotted)).collect()
}

fn run(cr: &Criterion) -> (bool, String) {
    let start = Instant::now();
    let mut reports: Vec<VerificationReport> = Vec::new();
    let mut missing = Vec::new();
    for ch in &cr.checks {
        let ms = members(ch.family);
        if ms.is_empty() {
            missing.push(ch.family);
        }
        for m in ms {
            reports.push(verify_identity(m, SEED, cr.samples, Some(ch.tol)));
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("{} ({:.2e} > {:.0e})", r.id, r.max_rel_residual, r.tol))
        .collect();
    let worst = reports.iter().map(|r| r.max_rel_residual / r.tol).fold(0.0, f64::max);
    let in_budget = cr.budget.map_or(true, |b| elapsed <= b);
    let pass = failed.is_empty() && missing.is_empty() && in_budget;
    let mut detail = format!(
        "{} checks x {} points, worst residual/tol {:.1e}, {:.1}s",
        reports.len(),
        cr.samples,
        worst,
        elapsed
    );
    if let Some(b) = cr.budget {
        detail.push_str(&format!(" (budget {b:.0}s)"));
    }
    if !missing.is_empty() {
        detail.push_str(&format!("; unregistered: {missing:?}"));
    }
    if !failed.is_empty() {
        detail.push_str(&format!("; failing: {}", failed.join(", ")));
    }
    (pass, detail)
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            name: "foundation",
            checks: vec![
                c("THETA-1", 1e-10),
                c("THETA-2", 1e-10),
                c("THETA-3", 1e-10),
                c("THETA-4", 1e-9),
                c("THETA-5", 1e-10),
                c("THETA-6", 1e-10),
                c("ETA-1", 1e-10),
                c("ETA-2", 1e-9),
                c("MULTHETA-4", 1e-9),
            ],
            samples: 50,
            budget: Some(30.0),
        },
        Criterion {
            name: "mu",
            checks: vec![
                c("MU-1", 1e-9),
                c("MU-2", 1e-9),
                c("MU-3", 1e-9),
                c("MU-4", 1e-9),
                c("MU-5", 1e-9),
                c("MU-6", 1e-6),
                c("MUT-1", 1e-6),
                c("MUT-2", 1e-6),
                c("MUT-3", 1e-6),
                c("MUT-4", 1e-6),
            ],
            samples: 30,
            budget: Some(120.0),
        },
        Criterion {
            name: "resummation",
            checks: vec![
                c("RES-MONO", 1e-12),
                c("RES-QBFN", 1e-8),
                c("RES-MULMUA", 1e-8),
                c("RES-OP", 1e-10),
                c("RES-LB", 1e-10),
            ],
            samples: 20,
            budget: None,
        },
        Criterion {
            name: "multivariable",
            checks: vec![
                c("MULMUA-1", 1e-8),
                c("MULMUA-2", 1e-8),
                c("MULMUA-3", 1e-8),
                c("MULMUA-4", 1e-7),
                c("MULMUA-5", 1e-8),
                c("MULMUA-6", 1e-7),
                c("MUN-1", 1e-8),
                c("MUN-2", 1e-8),
                c("MUN-3", 1e-8),
                c("MUN-4", 1e-8),
                c("MUN-5", 1e-8),
                c("MUN-6", 1e-8),
                c("MUN-OP", 1e-8),
                c("RES-FACT", 1e-8),
            ],
            samples: 10,
            budget: Some(600.0),
        },
        Criterion {
            name: "f-function",
            checks: vec![
                c("F1-1", 1e-9),
                c("F1-2", 1e-9),
                c("F1-3", 1e-9),
                c("F1-4", 1e-9),
                c("QF1-1", 1e-9),
                c("QF1-2", 1e-9),
                c("QF1-3", 1e-9),
                c("QF1-4", 1e-9),
                c("QF1-5", 1e-9),
                c("QF1-6", 1e-9),
                c("FN-1", 1e-9),
                c("FN-2", 1e-9),
                c("FN-3", 1e-9),
                c("FN-4", 1e-9),
                c("FN-5", 1e-9),
                c("FN-6", 1e-9),
                c("FN-7", 1e-9),
                c("FNQ-1", 1e-9),
                c("FNQ-2", 1e-9),
                c("FNQ-3", 1e-9),
                c("FNQ-4", 1e-9),
                c("FNQ-5", 1e-9),
                c("FNQ-6", 1e-9),
            ],
            samples: 20,
            budget: None,
        },
        Criterion {
            name: "vector/modular",
            checks: vec![
                c("MN-1", 1e-8),
                c("MN-2", 1e-8),
                c("MN-3", 1e-8),
                c("MN-4", 1e-8),
                c("MN-5", 1e-8),
                c("NU-1", 1e-8),
                c("NU-2", 1e-8),
                c("NU-3", 1e-8),
                c("NU-4", 1e-8),
                c("PHI-1", 1e-8),
                c("PHI-2", 1e-8),
                c("PHI-3", 1e-8),
                c("PHI-4", 1e-8),
                c("MNMOD-1", 1e-8),
                c("MNMOD-2", 1e-6),
                c("MNCOMP-1", 1e-6),
                c("MNCOMP-2", 1e-6),
                c("MNCOMP-3", 1e-6),
                c("MNCOMP-4", 1e-6),
                c("RREL", 1e-6),
            ],
            samples: 5,
            budget: Some(900.0),
        },
        Criterion {
            name: "odd/even N",
            checks: vec![
                c("ODD-TRANS-1", 1e-6),
                c("ODD-TRANS-2", 1e-6),
                c("ODD-MUN-1", 1e-6),
                c("ODD-MUN-2", 1e-6),
                c("EVEN-TRANS-1", 1e-6),
                c("EVEN-TRANS-2", 1e-6),
                c("EVEN-MUN-1", 1e-6),
                c("EVEN-MUN-2", 1e-6),
            ],
            samples: 20,
            budget: None,
        },
        Criterion {
            name: "connection problem",
            checks: vec![
                c("APP-CONV", 1e-9),
                c("APP-TPHI", 1e-8),
                c("APP-SYM", 1e-8),
                c("APP-QDIFF", 1e-8),
                c("APP-REL", 1e-8),
            ],
            samples: 20,
            budget: None,
        },
        Criterion {
            name: "oracles",
            checks: vec![
                c("ORACLE-THQ", 1e-12),
                c("ORACLE-VTH", 1e-12),
                c("NU-CLOSED", 1e-9),
                c("H-QUAD", 1e-10),
            ],
            samples: 50,
            budget: None,
        },
    ]
}

fn adjudication() -> (bool, String) {
    let groups = adjudicate(SEED, 20);
    let mut parts = Vec::new();
    for g in &groups {
        let winners: Vec<&str> = g.readings.iter().filter(|r| r.pass).map(|r| r.label.as_str()).collect();
        parts.push(format!("{}={}", g.group, if winners.is_empty() { "none".into() } else { winners.join("|") }));
    }
    let pass = !groups.is_empty() && groups.iter().all(|g| g.exactly_one);
    (pass, format!("{} groups: {}", groups.len(), parts.join(", ")))
}

fn main() {
    let mut all = true;
    for (k, cr) in criteria().iter().enumerate() {
        let (pass, detail) = run(cr);
        all &= pass;
        println!("[{}] {} {}: {}", k + 1, if pass { "PASS" } else { "FAIL" }, cr.name, detail);
    }
    let (pass, detail) = adjudication();
    all &= pass;
    println!("[10] {} typo adjudication: {}", if pass { "PASS" } else { "FAIL" }, detail);
    if !all {
        eprintln!("some acceptance criteria failed");
        std::process::exit(1);
    }
}
