use crate::error::{ExgError, Result};

/// Least-squares polynomial of the given degree through `points`.
///
/// Returns coefficients in ascending powers. Solved by Householder QR on the
/// Vandermonde matrix with abscissae centered and scaled to [-1, 1].
pub fn minsquare(points: &[(f64, f64)], degree: usize) -> Result<Vec<f64>> {
    let ncoef = degree + 1;
    let mut xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    if xs.len() < ncoef || points.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
        return Err(ExgError::RankDeficient { needed: ncoef });
    }
    let (lo, hi) = (xs[0], xs[xs.len() - 1]);
    let center = 0.5 * (lo + hi);
    let half = if hi > lo { 0.5 * (hi - lo) } else { 1.0 };

    let m = points.len();
    // column-major Vandermonde in the scaled variable
    let mut a = vec![vec![0.0; m]; ncoef];
    for (i, &(x, _)) in points.iter().enumerate() {
        let t = (x - center) / half;
        let mut pow = 1.0;
        for col in a.iter_mut() {
            col[i] = pow;
            pow *= t;
        }
    }
    let mut rhs: Vec<f64> = points.iter().map(|p| p.1).collect();

    for k in 0..ncoef {
        let norm = a[k][k..].iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(ExgError::RankDeficient { needed: ncoef });
        }
        let alpha = if a[k][k] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = a[k][k..].to_vec();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|x| x * x).sum();
        if vnorm2 > 0.0 {
            for col in a.iter_mut().skip(k) {
                let dot: f64 = v.iter().zip(&col[k..]).map(|(a, b)| a * b).sum();
                let f = 2.0 * dot / vnorm2;
                for (c, vi) in col[k..].iter_mut().zip(&v) {
                    *c -= f * vi;
                }
            }
            let dot: f64 = v.iter().zip(&rhs[k..]).map(|(a, b)| a * b).sum();
            let f = 2.0 * dot / vnorm2;
            for (r, vi) in rhs[k..].iter_mut().zip(&v) {
                *r -= f * vi;
            }
        }
    }
    let scale = a
        .iter()
        .enumerate()
        .map(|(k, col)| col[k].abs())
        .fold(0.0, f64::max);
    let mut c = vec![0.0; ncoef];
    for k in (0..ncoef).rev() {
        let diag = a[k][k];
        if diag.abs() <= 1e-12 * scale {
            return Err(ExgError::RankDeficient { needed: ncoef });
        }
        let s: f64 = (k + 1..ncoef).map(|j| a[j][k] * c[j]).sum();
        c[k] = (rhs[k] - s) / diag;
    }
    Ok(unscale(&c, center, half))
}

/// Expand sum c_k ((x - center)/half)^k into ascending powers of x.
fn unscale(c: &[f64], center: f64, half: f64) -> Vec<f64> {
    let n = c.len();
    let mut out = vec![0.0; n];
    // binomial expansion of ((x - center)/half)^k
    let mut basis = vec![1.0];
    for (k, &ck) in c.iter().enumerate() {
        if k > 0 {
            let mut next = vec![0.0; k + 1];
            for (j, &b) in basis.iter().enumerate() {
                next[j + 1] += b / half;
                next[j] -= b * center / half;
            }
            basis = next;
        }
        for (j, &b) in basis.iter().enumerate() {
            out[j] += ck * b;
        }
    }
    out
}
