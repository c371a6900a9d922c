use super::{Histogram, Sample};
use crate::dist::ExGaussStats;
use crate::error::{ExgError, Result};

/// Mean, standard deviation and skewness of a sample.
///
/// Population moments: both `S` and `t` divide by `N`, not `N - 1`, since
/// they are matched against distribution moments.
pub fn stats(s: &Sample) -> Result<ExGaussStats> {
    let v = s.values();
    if v.len() < 2 {
        return Err(ExgError::InsufficientData {
            needed: 2,
            got: v.len(),
        });
    }
    weighted_stats(v.iter().map(|&x| (x, 1.0)))
}

/// [`stats`] computed from bin centers weighted by counts.
pub fn stats_his(h: &Histogram) -> Result<ExGaussStats> {
    if h.n_bins() < 2 {
        return Err(ExgError::DegenerateHistogram("need at least two bins"));
    }
    let centers = h.centers();
    weighted_stats(centers.into_iter().zip(h.counts.iter().map(|&c| c as f64)))
}

fn weighted_stats(points: impl Iterator<Item = (f64, f64)> + Clone) -> Result<ExGaussStats> {
    let total: f64 = points.clone().map(|(_, w)| w).sum();
    let m = points.clone().map(|(x, w)| w * x).sum::<f64>() / total;
    let (mut m2, mut m3) = (0.0, 0.0);
    for (x, w) in points {
        let d = x - m;
        m2 += w * d * d;
        m3 += w * d * d * d;
    }
    m2 /= total;
    m3 /= total;
    let s = m2.sqrt();
    if !(s > 0.0) {
        return Err(ExgError::ZeroVariance);
    }
    ExGaussStats::new(m, s, m3 / (s * s * s))
}

/// Pearson linear correlation coefficient.
pub fn correlation(xs: &Sample, ys: &Sample) -> Result<f64> {
    let (x, y) = (xs.values(), ys.values());
    if x.len() != y.len() {
        return Err(ExgError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(ExgError::InsufficientData {
            needed: 2,
            got: x.len(),
        });
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(ExgError::ZeroVariance);
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}
