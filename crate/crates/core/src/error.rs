use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument too close to a pole: {0}")]
    PoleProximity(String),
    #[error("sum did not converge: {0}")]
    NonConvergent(String),
    #[error("divergent series: {0}")]
    DivergentSeries(String),
    #[error("denominator parameter hits a pole: {0}")]
    PoleInDenominator(String),
    #[error("zero argument: {0}")]
    ZeroArgument(String),
    #[error("Laplace kernel has a pole: {0}")]
    KernelPole(String),
    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),
    #[error("no admissible sample after {0} attempts")]
    SamplingExhausted(usize),
    #[error("degenerate parameters: {0}")]
    ParameterDegeneracy(String),
    #[error("unknown identity or suite: {0}")]
    Unknown(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
