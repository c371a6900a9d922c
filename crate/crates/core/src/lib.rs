//! Ex-Gaussian distribution toolkit.
//!
//! Stable evaluation of the density, CDF and quantiles, seeded sampling,
//! three estimators (moment matching, histogram least squares and maximum
//! likelihood), Kolmogorov-Smirnov bootstrap goodness of fit and tail
//! trimming.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dist;
pub mod error;
pub mod estimation;
pub mod gof;
pub mod sampling;
pub mod special;
pub mod stats;

pub use dist::{
    exgauss_cdf, exgauss_cdf_lamb, exgauss_ln_pdf, exgauss_ln_pdf_grad, exgauss_pdf,
    exgauss_pdf_grad, exgauss_pdf_lamb, exgauss_pdf_lamb_traced, exgauss_sf, gaussian_pdf,
    pars_to_stats, stats_to_pars, zalp_exgauss, zalp_exgauss_lamb, ExGaussParams, ExGaussStats,
    PdfBranch,
};
pub use error::{ExgError, Result};
pub use estimation::{
    auto_init, exg_lnlkhd, exg_sqr, exg_sqr_bins, fit, fit_stat, max_lkhd, min_sqr, FitResult,
    LnLikelihood, Method, SearchConfig, SearchMethod,
};
pub use gof::{
    bootstrap_p, ks_distance, ks_stat, trim, trim_with, GofConfig, GofReport, KsScale, TrimReport,
};
pub use sampling::{drand, drand_exg, drand_exp, drand_gauss, sample_exg, RngStream};
pub use stats::{histogram, stats, stats_his, Histogram, Sample};
