//! Line-search minimizer shared by the least-squares and likelihood fits.
//!
//! Directions are either the negative gradient (steepest descent) or a BFGS
//! quasi-Newton direction; both use Armijo backtracking. A trial point outside
//! the parameter domain counts as an infinite objective and is backtracked.
//!
//! Stopping uses the scale-free measure `|g| * ell / scale`, where `ell` is the
//! standard deviation of the starting distribution and `scale` is supplied by
//! the objective (the sample size for the likelihood, the current objective
//! value for least squares).

use serde::{Deserialize, Serialize};

use crate::dist::ExGaussParams;
use crate::error::{ExgError, Result};

/// Direction rule of the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMethod {
    /// Plain gradient direction.
    Steepest,
    /// Gradient direction preconditioned by a BFGS inverse-Hessian estimate.
    #[default]
    Bfgs,
}

const ARMIJO_C: f64 = 1e-4;
const CONTRACTION: f64 = 0.5;
const MAX_BACKTRACKS: usize = 80;
const WOLFE_DELTA: f64 = 0.1;
const WOLFE_SIGMA: f64 = 0.9;
/// Relative objective increase treated as rounding noise.
const FLOOR_REL: f64 = 1e-12;

pub(crate) struct Outcome {
    pub params: ExGaussParams,
    pub objective: f64,
    pub measure: f64,
    pub iterations: usize,
    pub converged: bool,
}

pub(crate) trait Objective {
    /// Value and gradient, or `None` where undefined.
    fn eval(&self, x: &[f64; 3]) -> Option<(f64, [f64; 3])>;
    /// Divides the gradient norm in the stopping rule.
    fn scale(&self, value: f64) -> f64;
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm(a: &[f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

fn to_params(x: &[f64; 3]) -> Option<ExGaussParams> {
    ExGaussParams::new(x[0], x[1], x[2]).ok()
}

pub(crate) fn minimize(
    obj: &impl Objective,
    init: &ExGaussParams,
    method: SearchMethod,
    grad_tol: f64,
    max_iter: usize,
) -> Result<Outcome> {
    let ell = init.sd();
    let mut x = init.as_array();
    let (mut f, mut g) = obj.eval(&x).ok_or(ExgError::SearchDiverged {
        last: *init,
        iterations: 0,
    })?;
    let measure = |f: f64, g: &[f64; 3]| norm(g) * ell / obj.scale(f);

    let mut h = [[0.0; 3]; 3];
    let mut h_ready = false;
    let mut last_step = 0.01 * ell / norm(&g).max(f64::MIN_POSITIVE);
    let mut iterations = 0;
    let mut bb_step: Option<f64> = None;

    while iterations < max_iter {
        if measure(f, &g) <= grad_tol {
            return Ok(Outcome {
                params: to_params(&x).expect("iterates stay valid"),
                objective: f,
                measure: measure(f, &g),
                iterations,
                converged: true,
            });
        }
        let (d, mut step) = match method {
            SearchMethod::Steepest => ([-g[0], -g[1], -g[2]], bb_step.unwrap_or(2.0 * last_step)),
            SearchMethod::Bfgs if h_ready => {
                let mut d = [0.0; 3];
                for i in 0..3 {
                    d[i] = -(h[i][0] * g[0] + h[i][1] * g[1] + h[i][2] * g[2]);
                }
                (d, 1.0)
            }
            SearchMethod::Bfgs => ([-g[0], -g[1], -g[2]], last_step),
        };
        let mut slope = dot(&g, &d);
        let d = if slope >= 0.0 {
            // BFGS estimate lost positive definiteness; fall back to the gradient
            h_ready = false;
            slope = -dot(&g, &g);
            [-g[0], -g[1], -g[2]]
        } else {
            d
        };

        let mut accepted = None;
        let mut saw_valid = false;
        for _ in 0..MAX_BACKTRACKS {
            let xt = [x[0] + step * d[0], x[1] + step * d[1], x[2] + step * d[2]];
            if to_params(&xt).is_some() {
                if let Some((ft, gt)) = obj.eval(&xt) {
                    saw_valid = true;
                    let sufficient = ft <= f + ARMIJO_C * step * slope;
                    // near the optimum the decrease falls below rounding noise in
                    // the objective; fall back to the derivative along the line
                    let slope_t = dot(&gt, &d);
                    let at_floor = ft <= f + FLOOR_REL * f.abs()
                        && slope_t >= WOLFE_SIGMA * slope
                        && slope_t <= (2.0 * WOLFE_DELTA - 1.0) * slope;
                    if ft.is_finite() && (sufficient || at_floor) {
                        accepted = Some((xt, ft, gt));
                        break;
                    }
                }
            }
            step *= CONTRACTION;
        }
        let Some((xn, fnew, gn)) = accepted else {
            if !saw_valid {
                return Err(ExgError::SearchDiverged {
                    last: to_params(&x).expect("iterates stay valid"),
                    iterations,
                });
            }
            // no acceptable point along the direction: stalled
            break;
        };
        iterations += 1;
        last_step = step;

        let s = [xn[0] - x[0], xn[1] - x[1], xn[2] - x[2]];
        let y = [gn[0] - g[0], gn[1] - g[1], gn[2] - g[2]];
        let sy = dot(&s, &y);
        if method == SearchMethod::Steepest {
            // Barzilai-Borwein trial length along the next gradient
            bb_step = (sy > 0.0).then(|| dot(&s, &s) / sy);
        } else {
            if sy > 1e-12 * norm(&s) * norm(&y) {
                if !h_ready {
                    let gamma = sy / dot(&y, &y);
                    h = [[gamma, 0.0, 0.0], [0.0, gamma, 0.0], [0.0, 0.0, gamma]];
                    h_ready = true;
                }
                bfgs_update(&mut h, &s, &y, sy);
            } else {
                h_ready = false;
            }
        }
        x = xn;
        f = fnew;
        g = gn;
    }
    Ok(Outcome {
        params: to_params(&x).expect("iterates stay valid"),
        objective: f,
        measure: measure(f, &g),
        iterations,
        converged: measure(f, &g) <= grad_tol,
    })
}

/// Inverse-Hessian BFGS update `H <- (I - rho s y') H (I - rho y s') + rho s s'`.
fn bfgs_update(h: &mut [[f64; 3]; 3], s: &[f64; 3], y: &[f64; 3], sy: f64) {
    let rho = 1.0 / sy;
    let mut hy = [0.0; 3];
    for i in 0..3 {
        hy[i] = h[i][0] * y[0] + h[i][1] * y[1] + h[i][2] * y[2];
    }
    let yhy = dot(y, &hy);
    for i in 0..3 {
        for j in 0..3 {
            h[i][j] += -rho * (hy[i] * s[j] + s[i] * hy[j]) + (rho * rho * yhy + rho) * s[i] * s[j];
        }
    }
}
