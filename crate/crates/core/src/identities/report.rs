use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub tag: String,
    pub suite: String,
    pub seed: u64,
    pub n_samples: usize,
    pub max_rel_residual: f64,
    pub mean_rel_residual: f64,
    pub tol: f64,
    pub pass: bool,
    /// seconds
    pub wall_time: f64,
    pub error: Option<String>,
    pub note: Option<String>,
}

impl VerificationReport {
    /// Same report with the timing zeroed, for comparisons.
    pub fn without_timing(&self) -> Self {
        VerificationReport { wall_time: 0.0, ..self.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReadingOutcome {
    pub label: String,
    pub id: String,
    pub max_rel_residual: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdjudicationReport {
    pub group: String,
    pub tag: String,
    pub readings: Vec<ReadingOutcome>,
    /// exactly one reading passes
    pub exactly_one: bool,
}
