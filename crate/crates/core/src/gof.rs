//! Kolmogorov-Smirnov statistic, parametric-bootstrap p-values and tail
//! trimming.
//!
//! The KS statistic is reported count-scaled, `N * D`, with `D` the classical
//! two-sided distance. The bootstrap compares like with like, so p-values
//! do not depend on the scaling.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dist::{exgauss_cdf, zalp_exgauss, ExGaussParams};
use crate::error::{ExgError, Result};
use crate::estimation::{fit, max_lkhd, FitResult, Method, SearchConfig};
use crate::sampling::{sample_exg, RngStream};
use crate::stats::Sample;

/// Classical two-sided KS distance on already sorted data.
fn distance_sorted(sorted: &[f64], p: &ExGaussParams) -> f64 {
    let n = sorted.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in sorted.iter().enumerate() {
        let f = exgauss_cdf(x, p);
        let above = (i + 1) as f64 / n - f;
        let below = f - i as f64 / n;
        d = d.max(above.abs()).max(below.abs());
    }
    d
}

/// Classical KS distance `D` between the empirical CDF of `s` and the model.
pub fn ks_distance(s: &Sample, p: &ExGaussParams) -> f64 {
    distance_sorted(&s.sorted(), p)
}

/// Count-scaled KS statistic `N * D`.
pub fn ks_stat(s: &Sample, p: &ExGaussParams) -> f64 {
    s.len() as f64 * ks_distance(s, p)
}

/// Which form of the KS statistic the bootstrap compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KsScale {
    /// `N * D`.
    #[default]
    Count,
    /// `D`.
    Classical,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GofConfig {
    pub replicates: usize,
    pub seed: u64,
    /// Histogram bins for least-squares refits; `None` uses the default rule.
    pub n_bins: Option<usize>,
    /// Worker threads; `None` uses the rayon default.
    pub threads: Option<usize>,
    /// Failed refits tolerated per replicate before the bootstrap aborts.
    pub max_retries: usize,
    pub scale: KsScale,
    pub search: SearchConfig,
}

impl Default for GofConfig {
    fn default() -> Self {
        Self {
            replicates: 1000,
            seed: 0,
            n_bins: None,
            threads: None,
            max_retries: 5,
            scale: KsScale::Count,
            search: SearchConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GofReport {
    pub method: Method,
    /// Fit of the data.
    pub fit: FitResult,
    /// Data statistic against `fit.params`.
    pub ks: f64,
    /// Fraction of replicate statistics at or above `ks`.
    pub p: f64,
    pub replicates: usize,
    pub ks_mean: f64,
    /// Population standard deviation of the replicate statistics.
    pub ks_sd: f64,
    pub seed: u64,
    pub scale: KsScale,
    /// Replicate statistics in replicate order.
    pub replicate_ks: Vec<f64>,
    /// Refits that failed and were redrawn.
    pub refit_failures: usize,
    /// Refits that stopped before meeting the gradient tolerance.
    pub refit_nonconverged: usize,
}

impl GofReport {
    pub fn fitted(&self) -> &ExGaussParams {
        &self.fit.params
    }
}

struct Replicate {
    ks: f64,
    failures: usize,
    converged: bool,
}

fn scaled(d: f64, n: usize, scale: KsScale) -> f64 {
    match scale {
        KsScale::Count => n as f64 * d,
        KsScale::Classical => d,
    }
}

fn run_replicate(
    i: usize,
    n: usize,
    fitted: &ExGaussParams,
    method: Method,
    cfg: &GofConfig,
) -> Result<Replicate> {
    let mut rng = RngStream::with_stream(cfg.seed, i as u64 + 1);
    let mut failures = 0;
    loop {
        let draws = sample_exg(&mut rng, fitted, n);
        let refit = Sample::new(draws).and_then(|s| {
            let r = fit(&s, method, cfg.n_bins, &cfg.search)?;
            let mut sorted = s.into_values();
            sorted.sort_by(f64::total_cmp);
            Ok((distance_sorted(&sorted, &r.params), r.converged))
        });
        match refit {
            Ok((d, converged)) => {
                return Ok(Replicate {
                    ks: scaled(d, n, cfg.scale),
                    failures,
                    converged,
                })
            }
            Err(e) => {
                failures += 1;
                if failures > cfg.max_retries {
                    return Err(ExgError::BootstrapAborted {
                        replicate: i,
                        attempts: failures,
                        last_error: e.to_string(),
                    });
                }
            }
        }
    }
}

/// Parametric-bootstrap goodness of fit.
///
/// Fits `s` by `method`, then for each replicate draws a sample of the same
/// size from the fitted distribution on its own random stream (replicate `i`
/// uses stream `i + 1` of `cfg.seed`), refits it by the same method and
/// records its KS statistic against its own refit. The result does not depend
/// on the number of threads.
pub fn bootstrap_p(s: &Sample, method: Method, cfg: &GofConfig) -> Result<GofReport> {
    if method == Method::Stat {
        return Err(ExgError::UnsupportedMethod(method.name()));
    }
    if cfg.replicates == 0 {
        return Err(ExgError::domain("replicates", 0.0, "[1, inf)"));
    }
    let data_fit = fit(s, method, cfg.n_bins, &cfg.search)?;
    let n = s.len();
    let ks = scaled(ks_distance(s, &data_fit.params), n, cfg.scale);
    let fitted = data_fit.params;

    let work = || -> Vec<Result<Replicate>> {
        (0..cfg.replicates)
            .into_par_iter()
            .map(|i| run_replicate(i, n, &fitted, method, cfg))
            .collect()
    };
    let results = match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| ExgError::BootstrapAborted {
                replicate: 0,
                attempts: 0,
                last_error: e.to_string(),
            })?
            .install(work),
        None => work(),
    };

    let mut replicate_ks = Vec::with_capacity(cfg.replicates);
    let mut refit_failures = 0;
    let mut refit_nonconverged = 0;
    for r in results {
        let r = r?;
        replicate_ks.push(r.ks);
        refit_failures += r.failures;
        refit_nonconverged += usize::from(!r.converged);
    }
    let count = replicate_ks.iter().filter(|&&k| k >= ks).count();
    let reps = cfg.replicates as f64;
    let ks_mean = replicate_ks.iter().sum::<f64>() / reps;
    let ks_sd = (replicate_ks
        .iter()
        .map(|k| (k - ks_mean) * (k - ks_mean))
        .sum::<f64>()
        / reps)
        .sqrt();
    Ok(GofReport {
        method,
        fit: data_fit,
        ks,
        p: count as f64 / reps,
        replicates: cfg.replicates,
        ks_mean,
        ks_sd,
        seed: cfg.seed,
        scale: cfg.scale,
        replicate_ks,
        refit_failures,
        refit_nonconverged,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrimReport {
    pub tail_frac: f64,
    /// Point with left-tail area `tail_frac`; `None` when the left cut is off.
    pub lo_cut: Option<f64>,
    /// Point with right-tail area `tail_frac`.
    pub hi_cut: f64,
    pub n_removed_left: usize,
    pub n_removed_right: usize,
    pub n_total: usize,
    pub pre_fit: ExGaussParams,
    pub trimmed: Sample,
}

/// Pre-fit `s` by maximum likelihood, then remove observations beyond the
/// points with tail area `tail_frac` on each side.
pub fn trim(s: &Sample, tail_frac: f64, left: bool, cfg: &SearchConfig) -> Result<TrimReport> {
    check_tail(tail_frac)?;
    let pre_fit = max_lkhd(s, None, cfg)?.params;
    trim_with(s, tail_frac, left, &pre_fit)
}

fn check_tail(tail_frac: f64) -> Result<()> {
    if tail_frac > 0.0 && tail_frac < 0.5 {
        Ok(())
    } else {
        Err(ExgError::domain("tail_frac", tail_frac, "(0, 0.5)"))
    }
}

/// [`trim`] with given pre-fit parameters. Values equal to a cut are kept.
pub fn trim_with(
    s: &Sample,
    tail_frac: f64,
    left: bool,
    pre_fit: &ExGaussParams,
) -> Result<TrimReport> {
    check_tail(tail_frac)?;
    let hi_cut = zalp_exgauss(tail_frac, pre_fit)?;
    let lo_cut = if left {
        Some(zalp_exgauss(1.0 - tail_frac, pre_fit)?)
    } else {
        None
    };
    let lo = lo_cut.unwrap_or(f64::NEG_INFINITY);
    let n_removed_left = s.values().iter().filter(|&&x| x < lo).count();
    let n_removed_right = s.values().iter().filter(|&&x| x > hi_cut).count();
    let kept: Vec<f64> = s
        .values()
        .iter()
        .copied()
        .filter(|&x| x >= lo && x <= hi_cut)
        .collect();
    if kept.is_empty() {
        return Err(ExgError::InsufficientData { needed: 1, got: 0 });
    }
    Ok(TrimReport {
        tail_frac,
        lo_cut,
        hi_cut,
        n_removed_left,
        n_removed_right,
        n_total: s.len(),
        pre_fit: *pre_fit,
        trimmed: Sample::new(kept)?,
    })
}
