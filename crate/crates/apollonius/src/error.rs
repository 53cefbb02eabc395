use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ratio must be non-negative, got {0}")]
    NegativeRatio(f64),

    #[error("entropy derivatives require r² > 0, got {0}")]
    NonPositiveRatioSquared(f64),

    #[error("focus {0} has no bipolar coordinates")]
    FocusHasNoBipolarChart(num_complex::Complex64),

    #[error("gate is not unitary")]
    NonUnitaryGate,

    #[error("state norm deviates from 1 by {0:e}")]
    NotNormalized(f64),

    #[error("cannot normalize the zero vector")]
    ZeroVector,

    #[error("qubit count must be at least 1")]
    ZeroQubits,

    #[error("dense expansion is capped at 20 qubits, got {0}")]
    TooManyQubits(usize),

    #[error("degenerate Apollonius {kind} (r = {ratio}) has no center or radius")]
    DegenerateCircle { kind: &'static str, ratio: f64 },

    #[error("finite-difference step must be positive, got {0}")]
    NonPositiveStep(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
