use crate::error::{ExgError, Result};

/// Root of `f` inside `bracket`, to within `tol` in x.
///
/// Bisection safeguarded secant (Illinois variant of false position): the
/// secant step is tried first, and a bisection step is forced whenever the
/// bracket failed to halve over the previous two iterations.
pub fn zero(f: impl Fn(f64) -> f64, bracket: (f64, f64), tol: f64) -> Result<f64> {
    let (mut a, mut b) = if bracket.0 <= bracket.1 {
        bracket
    } else {
        (bracket.1, bracket.0)
    };
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(ExgError::NoSignChange { lo: a, hi: b });
    }
    let mut side = 0i8;
    let mut width_two_back = f64::INFINITY;
    let mut width_one_back = b - a;
    for _ in 0..200 {
        let width = b - a;
        let tol_here = tol.max(4.0 * f64::EPSILON * a.abs().max(b.abs()));
        if width <= tol_here {
            break;
        }
        let secant = (a * fb - b * fa) / (fb - fa);
        let bisect_forced = width > 0.5 * width_two_back;
        let c = if bisect_forced || !(secant > a && secant < b) {
            0.5 * (a + b)
        } else {
            secant
        };
        let fc = f(c);
        if fc == 0.0 {
            return Ok(c);
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = c;
            fa = fc;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        }
        width_two_back = width_one_back;
        width_one_back = width;
    }
    Ok(if fa.abs() < fb.abs() { a } else { b })
}
