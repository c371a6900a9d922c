use crate::error::{ExgError, Result};

/// One node of a quadrature partition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussPoint {
    pub node: f64,
    pub weight: f64,
}

/// Gauss-Legendre nodes and weights for `n` points on `[a, b]`.
///
/// Roots of P_n by Newton iteration from the Tricomi initial guesses; the
/// weights `2 / ((1 - x^2) P_n'(x)^2)` are scaled to the interval, so they
/// sum to `b - a`.
pub fn int_points_gauss(a: f64, b: f64, n: usize) -> Result<Vec<GaussPoint>> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(ExgError::domain("b - a", b - a, "(0, inf)"));
    }
    if n == 0 {
        return Err(ExgError::domain("n", 0.0, "[1, inf)"));
    }
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut pts = vec![
        GaussPoint {
            node: 0.0,
            weight: 0.0
        };
        n
    ];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        pts[i] = GaussPoint {
            node: mid - half * x,
            weight: half * w,
        };
        pts[n - 1 - i] = GaussPoint {
            node: mid + half * x,
            weight: half * w,
        };
    }
    if n % 2 == 1 {
        // pin the middle node exactly
        pts[n / 2].node = mid;
    }
    Ok(pts)
}

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}

/// Weighted sum of function values over a partition.
pub fn intsum(f_values: &[f64], partition: &[GaussPoint]) -> Result<f64> {
    if f_values.len() != partition.len() {
        return Err(ExgError::LengthMismatch {
            left: f_values.len(),
            right: partition.len(),
        });
    }
    Ok(f_values
        .iter()
        .zip(partition)
        .map(|(f, p)| f * p.weight)
        .sum())
}

/// Composite Gauss-Legendre integral of `f` over `[a, b]`: `panels` equal
/// sub-intervals with `order` nodes each.
pub fn integral(
    f: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    panels: usize,
    order: usize,
) -> Result<f64> {
    if panels == 0 {
        return Err(ExgError::domain("panels", 0.0, "[1, inf)"));
    }
    let unit = int_points_gauss(-1.0, 1.0, order)?;
    let h = (b - a) / panels as f64;
    if !(h > 0.0) {
        return Err(ExgError::domain("b - a", b - a, "(0, inf)"));
    }
    let mut total = 0.0;
    for k in 0..panels {
        let lo = a + k as f64 * h;
        let mid = lo + 0.5 * h;
        let panel: f64 = unit
            .iter()
            .map(|p| p.weight * f(mid + 0.5 * h * p.node))
            .sum();
        total += 0.5 * h * panel;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point_is_midpoint() {
        let p = int_points_gauss(2.0, 6.0, 1).unwrap();
        assert_eq!(
            p,
            vec![GaussPoint {
                node: 4.0,
                weight: 4.0
            }]
        );
    }

    #[test]
    fn polynomial_exactness() {
        let p = int_points_gauss(0.0, 1.0, 3).unwrap();
        let f: Vec<f64> = p.iter().map(|q| q.node.powi(4)).collect();
        assert!((intsum(&f, &p).unwrap() - 0.2).abs() < 1e-14);

        let p2 = int_points_gauss(0.0, 1.0, 2).unwrap();
        let f2: Vec<f64> = p2.iter().map(|q| q.node * q.node).collect();
        assert!((intsum(&f2, &p2).unwrap() - 1.0 / 3.0).abs() < 1e-15);

        let ones = vec![1.0; p.len()];
        assert!((intsum(&ones, &p).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn errors() {
        assert!(int_points_gauss(1.0, 1.0, 3).is_err());
        assert!(int_points_gauss(0.0, 1.0, 0).is_err());
        let p = int_points_gauss(0.0, 1.0, 3).unwrap();
        assert!(intsum(&[1.0], &p).is_err());
    }

    #[test]
    fn composite_integral() {
        let v = integral(|x| x.sin(), 0.0, std::f64::consts::PI, 8, 10).unwrap();
        assert!((v - 2.0).abs() < 1e-14);
    }
}
