use std::collections::BTreeMap;

use exg_core::{ExGaussParams, ExGaussStats, FitResult, GofReport, Method, TrimReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1.0.0";

/// Machine-readable output of the `fit`, `quantile`, `gof` and `trim`
/// commands.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub command: String,
    pub inputs: Inputs,
    /// Keyed by method name (`quantile` for the quantile command).
    pub results: BTreeMap<String, Outcome>,
    /// `None` when the run was asked not to record timing.
    pub timing: Option<Timing>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_seconds: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Inputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub methods: Option<Vec<Method>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_bins: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grad_tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ExGaussParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail_frac: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_cut: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub replicates: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Outcome {
    Ok(Payload),
    Failed { kind: String, error: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Gof(GofReport),
    Trim(TrimPayload),
    Fit(FitPayload),
    Quantile(QuantilePayload),
}

/// A fit with both parameterizations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitPayload {
    #[serde(flatten)]
    pub fit: FitResult,
    pub stats: ExGaussStats,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuantilePayload {
    pub alpha: f64,
    pub z: f64,
    pub params: ExGaussParams,
    pub stats: ExGaussStats,
}

/// Trim summary; the kept observations go to a separate file on request.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrimPayload {
    pub tail_frac: f64,
    pub lo_cut: Option<f64>,
    pub hi_cut: f64,
    pub n_removed_left: usize,
    pub n_removed_right: usize,
    pub n_total: usize,
    pub n_kept: usize,
    pub pre_fit: ExGaussParams,
}

impl From<&TrimReport> for TrimPayload {
    fn from(r: &TrimReport) -> Self {
        Self {
            tail_frac: r.tail_frac,
            lo_cut: r.lo_cut,
            hi_cut: r.hi_cut,
            n_removed_left: r.n_removed_left,
            n_removed_right: r.n_removed_right,
            n_total: r.n_total,
            n_kept: r.trimmed.len(),
            pre_fit: r.pre_fit,
        }
    }
}
