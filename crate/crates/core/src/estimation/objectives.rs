use serde::{Deserialize, Serialize};

use crate::dist::{exgauss_ln_pdf_grad, exgauss_pdf, exgauss_pdf_grad, ExGaussParams};
use crate::error::{ExgError, Result};
use crate::stats::{Histogram, Sample};

/// Log-likelihood of a sample with its gradient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LnLikelihood {
    pub value: f64,
    /// Derivatives with respect to `(mu, sigma, tau)`.
    pub gradient: [f64; 3],
    /// Indices of observations whose density underflows to zero. Their
    /// log-density is still finite and included in `value`.
    pub extreme_points: Vec<usize>,
}

pub fn exg_lnlkhd(s: &Sample, p: &ExGaussParams) -> LnLikelihood {
    let (value, gradient) = lnl_sum(s.values(), p);
    let extreme_points = s
        .values()
        .iter()
        .enumerate()
        .filter(|(_, &x)| exgauss_pdf(x, p) == 0.0)
        .map(|(i, _)| i)
        .collect();
    LnLikelihood {
        value,
        gradient,
        extreme_points,
    }
}

pub(crate) fn lnl_sum(xs: &[f64], p: &ExGaussParams) -> (f64, [f64; 3]) {
    let mut value = 0.0;
    let mut g = [0.0; 3];
    for &x in xs {
        let (v, d) = exgauss_ln_pdf_grad(x, p);
        value += v;
        g[0] += d[0];
        g[1] += d[1];
        g[2] += d[2];
    }
    (value, g)
}

/// Sum of squared differences between histogram densities and the density at
/// the bin centers, with its gradient.
pub fn exg_sqr(h: &Histogram, p: &ExGaussParams) -> (f64, [f64; 3]) {
    sqr_sum(&h.centers(), &h.densities, p)
}

/// [`exg_sqr`] on explicit `(center, density)` columns.
pub fn exg_sqr_bins(
    centers: &[f64],
    densities: &[f64],
    p: &ExGaussParams,
) -> Result<(f64, [f64; 3])> {
    if centers.len() != densities.len() {
        return Err(ExgError::LengthMismatch {
            left: centers.len(),
            right: densities.len(),
        });
    }
    Ok(sqr_sum(centers, densities, p))
}

pub(crate) fn sqr_sum(centers: &[f64], densities: &[f64], p: &ExGaussParams) -> (f64, [f64; 3]) {
    let mut value = 0.0;
    let mut g = [0.0; 3];
    for (&c, &d) in centers.iter().zip(densities) {
        let (f, df) = exgauss_pdf_grad(c, p);
        let r = d - f;
        value += r * r;
        g[0] -= 2.0 * r * df[0];
        g[1] -= 2.0 * r * df[1];
        g[2] -= 2.0 * r * df[2];
    }
    (value, g)
}
