use thiserror::Error;

use crate::dist::ExGaussParams;

pub type Result<T> = std::result::Result<T, ExgError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExgError {
    /// sigma or tau not strictly positive, or a non-finite field.
    #[error("invalid ex-Gaussian parameters (mu={mu}, sigma={sigma}, tau={tau}): sigma and tau must be finite and > 0")]
    InvalidParams { mu: f64, sigma: f64, tau: f64 },

    /// Skewness outside the open interval (0, 2) cannot be mapped to real parameters.
    #[error("skewness t={t} is outside (0, 2); no real ex-Gaussian parameters match")]
    SkewnessOutOfRange { t: f64 },

    #[error("{name}={value} is outside its domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("sample is empty")]
    EmptySample,

    #[error("need at least {needed} observations, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("non-finite value {value} at index {index}")]
    NonFinite { index: usize, value: f64 },

    #[error("zero variance")]
    ZeroVariance,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("degenerate histogram: {0}")]
    DegenerateHistogram(&'static str),

    #[error("least-squares system is rank deficient (need {needed} distinct abscissae)")]
    RankDeficient { needed: usize },

    #[error("no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("search left the valid parameter domain repeatedly after {iterations} iterations; last valid iterate {last:?}")]
    SearchDiverged {
        last: ExGaussParams,
        iterations: usize,
    },

    #[error("method {0} is not supported here")]
    UnsupportedMethod(&'static str),

    #[error("bootstrap replicate {replicate} failed {attempts} refits in a row: {last_error}")]
    BootstrapAborted {
        replicate: usize,
        attempts: usize,
        last_error: String,
    },
}

impl ExgError {
    pub(crate) fn domain(name: &'static str, value: f64, domain: &'static str) -> Self {
        ExgError::Domain {
            name,
            value,
            domain,
        }
    }
}
