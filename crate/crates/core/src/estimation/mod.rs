//! Moment matching, histogram least squares and maximum likelihood fits.

mod objectives;
mod search;

use serde::{Deserialize, Serialize};

pub use objectives::{exg_lnlkhd, exg_sqr, exg_sqr_bins, LnLikelihood};
pub use search::SearchMethod;

use crate::dist::{stats_to_pars, ExGaussParams, ExGaussStats};
use crate::error::{ExgError, Result};
use crate::stats::{histogram, stats, Sample};
use objectives::{lnl_sum, sqr_sum};
use search::{minimize, Objective};

/// Estimation method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Moment matching.
    Stat,
    /// Least squares between histogram densities and the density.
    MinSqr,
    /// Maximum likelihood.
    MaxLkhd,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Stat => "stat",
            Method::MinSqr => "minsqr",
            Method::MaxLkhd => "maxlkhd",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "stat" => Ok(Method::Stat),
            "minsqr" => Ok(Method::MinSqr),
            "maxlkhd" => Ok(Method::MaxLkhd),
            other => Err(format!(
                "unknown method '{other}' (expected stat, minsqr or maxlkhd)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Tolerance on the scale-free gradient measure.
    pub grad_tol: f64,
    pub max_iter: usize,
    /// Skewness used for the starting point when the sample skewness is 2 or
    /// more.
    pub init_t_clamp: f64,
    pub method: SearchMethod,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            grad_tol: 1e-8,
            max_iter: 100_000,
            init_t_clamp: 1.9,
            method: SearchMethod::Bfgs,
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        if !(self.grad_tol > 0.0 && self.grad_tol.is_finite()) {
            return Err(ExgError::domain("grad_tol", self.grad_tol, "(0, inf)"));
        }
        if !(self.init_t_clamp > 0.0 && self.init_t_clamp < 2.0) {
            return Err(ExgError::domain(
                "init_t_clamp",
                self.init_t_clamp,
                "(0, 2)",
            ));
        }
        Ok(())
    }
}

/// Skewness substituted for non-positive sample skewness at initialization.
const INIT_T_FLOOR: f64 = 0.1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub params: ExGaussParams,
    pub method: Method,
    /// Log-likelihood for maxlkhd, sum of squared residuals for minsqr.
    pub objective: Option<f64>,
    pub iterations: usize,
    /// Scale-free gradient measure at termination (the quantity compared
    /// against `grad_tol`).
    pub gradient_norm: Option<f64>,
    pub converged: bool,
    pub n_bins: Option<usize>,
}

fn require_n(s: &Sample, needed: usize) -> Result<()> {
    if s.len() < needed {
        return Err(ExgError::InsufficientData {
            needed,
            got: s.len(),
        });
    }
    Ok(())
}

/// Moment-matching fit: the parameters whose mean, standard deviation and
/// skewness equal the sample's.
pub fn fit_stat(s: &Sample) -> Result<FitResult> {
    require_n(s, 3)?;
    let params = stats_to_pars(&stats(s)?)?;
    Ok(FitResult {
        params,
        method: Method::Stat,
        objective: None,
        iterations: 0,
        gradient_norm: None,
        converged: true,
        n_bins: None,
    })
}

/// Starting point from the sample moments, with the skewness clamped into
/// the convertible range.
pub fn auto_init(s: &Sample, cfg: &SearchConfig) -> Result<ExGaussParams> {
    let st = stats(s)?;
    let t = if st.t >= 2.0 {
        cfg.init_t_clamp
    } else if st.t <= 0.0 {
        INIT_T_FLOOR
    } else {
        st.t
    };
    stats_to_pars(&ExGaussStats::new(st.m, st.s, t)?)
}

struct NegLnL<'a> {
    xs: &'a [f64],
}

impl Objective for NegLnL<'_> {
    fn eval(&self, x: &[f64; 3]) -> Option<(f64, [f64; 3])> {
        let p = ExGaussParams::new(x[0], x[1], x[2]).ok()?;
        let (v, g) = lnl_sum(self.xs, &p);
        v.is_finite().then_some((-v, [-g[0], -g[1], -g[2]]))
    }
    fn scale(&self, _value: f64) -> f64 {
        self.xs.len() as f64
    }
}

/// Maximum-likelihood fit, starting from `init` or from [`auto_init`].
pub fn max_lkhd(s: &Sample, init: Option<ExGaussParams>, cfg: &SearchConfig) -> Result<FitResult> {
    require_n(s, 3)?;
    cfg.validate()?;
    let init = match init {
        Some(p) => p,
        None => auto_init(s, cfg)?,
    };
    let out = minimize(
        &NegLnL { xs: s.values() },
        &init,
        cfg.method,
        cfg.grad_tol,
        cfg.max_iter,
    )?;
    Ok(FitResult {
        params: out.params,
        method: Method::MaxLkhd,
        objective: Some(-out.objective),
        iterations: out.iterations,
        gradient_norm: Some(out.measure),
        converged: out.converged,
        n_bins: None,
    })
}

struct Sqr {
    centers: Vec<f64>,
    densities: Vec<f64>,
}

impl Objective for Sqr {
    fn eval(&self, x: &[f64; 3]) -> Option<(f64, [f64; 3])> {
        let p = ExGaussParams::new(x[0], x[1], x[2]).ok()?;
        let (v, g) = sqr_sum(&self.centers, &self.densities, &p);
        v.is_finite().then_some((v, g))
    }
    fn scale(&self, value: f64) -> f64 {
        value.max(f64::MIN_POSITIVE)
    }
}

/// Least-squares fit of the density to the histogram of `s`.
pub fn min_sqr(
    s: &Sample,
    n_bins: Option<usize>,
    init: Option<ExGaussParams>,
    cfg: &SearchConfig,
) -> Result<FitResult> {
    require_n(s, 3)?;
    cfg.validate()?;
    let h = histogram(s, n_bins)?;
    let init = match init {
        Some(p) => p,
        None => auto_init(s, cfg)?,
    };
    let obj = Sqr {
        centers: h.centers(),
        densities: h.densities.clone(),
    };
    let out = minimize(&obj, &init, cfg.method, cfg.grad_tol, cfg.max_iter)?;
    Ok(FitResult {
        params: out.params,
        method: Method::MinSqr,
        objective: Some(out.objective),
        iterations: out.iterations,
        gradient_norm: Some(out.measure),
        converged: out.converged,
        n_bins: Some(h.n_bins()),
    })
}

/// Fit by `method` with automatic initialization.
pub fn fit(
    s: &Sample,
    method: Method,
    n_bins: Option<usize>,
    cfg: &SearchConfig,
) -> Result<FitResult> {
    match method {
        Method::Stat => fit_stat(s),
        Method::MinSqr => min_sqr(s, n_bins, None, cfg),
        Method::MaxLkhd => max_lkhd(s, None, cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{sample_exg, RngStream};

    fn draws(seed: u64, n: usize, p: (f64, f64, f64)) -> Sample {
        let p = ExGaussParams::new(p.0, p.1, p.2).unwrap();
        Sample::new(sample_exg(&mut RngStream::new(seed), &p, n)).unwrap()
    }

    #[test]
    fn too_few_points() {
        let s = Sample::new(vec![1.0, 2.0]).unwrap();
        let cfg = SearchConfig::default();
        assert_eq!(
            fit_stat(&s).unwrap_err(),
            ExgError::InsufficientData { needed: 3, got: 2 }
        );
        assert!(max_lkhd(&s, None, &cfg).is_err());
        assert!(min_sqr(&s, None, None, &cfg).is_err());
    }

    #[test]
    fn bad_config() {
        let s = draws(1, 100, (500.0, 50.0, 100.0));
        let cfg = SearchConfig {
            grad_tol: 0.0,
            ..SearchConfig::default()
        };
        assert!(max_lkhd(&s, None, &cfg).is_err());
    }

    #[test]
    fn max_lkhd_converges_and_ascends() {
        let s = draws(3, 5000, (500.0, 50.0, 100.0));
        let cfg = SearchConfig::default();
        let init = auto_init(&s, &cfg).unwrap();
        let r = max_lkhd(&s, Some(init), &cfg).unwrap();
        assert!(r.converged, "{r:?}");
        assert!(r.gradient_norm.unwrap() <= cfg.grad_tol);
        assert!(r.objective.unwrap() >= exg_lnlkhd(&s, &init).value);
    }

    #[test]
    fn steepest_descent_path() {
        let s = draws(4, 2000, (500.0, 50.0, 100.0));
        let cfg = SearchConfig {
            method: SearchMethod::Steepest,
            grad_tol: 1e-6,
            ..SearchConfig::default()
        };
        let r = max_lkhd(&s, None, &cfg).unwrap();
        assert!(r.converged, "{r:?}");
        let b = max_lkhd(&s, None, &SearchConfig::default()).unwrap();
        for (a, b) in r.params.as_array().iter().zip(b.params.as_array()) {
            assert!((a - b).abs() < 1e-3 * b.abs(), "{a} vs {b}");
        }
        let q = min_sqr(&s, None, None, &cfg).unwrap();
        assert!(q.converged, "{q:?}");
    }

    #[test]
    fn min_sqr_records_bins() {
        let s = draws(5, 2396, (451.09, 47.33, 146.81));
        let r = min_sqr(&s, None, None, &SearchConfig::default()).unwrap();
        assert_eq!(r.n_bins, Some(98));
        assert!(r.converged, "{r:?}");
    }

    #[test]
    fn method_names_round_trip() {
        for m in [Method::Stat, Method::MinSqr, Method::MaxLkhd] {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("lsq".parse::<Method>().is_err());
    }
}
