//! Bracketed scalar search: golden-section maximization and bisection.

use crate::error::{Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`.
///
/// Returns `(x_max, f(x_max))` once the bracket is narrower than `tol`.
/// Comparison-based bracketing cannot localize a smooth maximum better than
/// about sqrt(machine epsilon); follow with [`parabolic_refine_max`] when
/// more accuracy is needed. Edge regions evaluating to `-inf` are trimmed
/// correctly as long as the two interior probes never both land in one.
pub fn golden_section_max<F>(
    f: F,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    max_iter: usize,
) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::Domain(format!(
            "invalid search interval [{lo}, {hi}]"
        )));
    }
    let inv_phi2 = 1.0 - INV_PHI;
    let mut x1 = lo + inv_phi2 * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..max_iter {
        if hi - lo < tol {
            let x = 0.5 * (lo + hi);
            return Ok((x, f(x)));
        }
        if f1 > f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = lo + inv_phi2 * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    Err(Error::Solver(format!(
        "golden-section search did not shrink below {tol} within {max_iter} iterations"
    )))
}

/// Refines a located maximum of `f` by repeated parabolic fits through
/// `x - w, x, x + w`, staying inside `[lo, hi]`.
///
/// Exact (to round-off) in one round when `f` is locally quadratic, which is
/// what comparison-based bracketing needs to get from ~sqrt(eps) down to
/// full precision. Returns the input point unchanged if the fit degenerates.
pub fn parabolic_refine_max<F>(f: F, mut x: f64, w: f64, rounds: usize, lo: f64, hi: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    for _ in 0..rounds {
        // The fitted-vertex noise scales like eps/(w |f''|), so keep the
        // probe width fixed rather than shrinking it.
        let span = w.min(x - lo).min(hi - x);
        if span.is_nan() || span <= 0.0 {
            break;
        }
        let (fm, f0, fp) = (f(x - span), f(x), f(x + span));
        let denom = 2.0 * f0 - fm - fp;
        // denom = -w^2 f'' + O(w^4); it must be positive at a maximum.
        if !denom.is_finite() || denom <= 0.0 {
            break;
        }
        let step = 0.5 * span * (fp - fm) / denom;
        if !step.is_finite() {
            break;
        }
        x = (x + step).clamp(lo, hi);
    }
    x
}

/// Bisection root of a sign-changing `f` on `[lo, hi]`, to width `tol`.
pub fn bisect_root<F>(f: F, mut lo: f64, mut hi: f64, tol: f64, max_iter: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::Domain(format!("invalid bracket [{lo}, {hi}]")));
    }
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::Bracket(format!(
            "no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}"
        )));
    }
    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        if hi - lo < tol {
            return Ok(mid);
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::Solver(format!(
        "bisection did not shrink below {tol} within {max_iter} iterations"
    )))
}

/// Bisection on a boolean predicate that holds at `lo` and fails at `hi`;
/// returns the flip point to within `tol`.
pub fn bisect_predicate<F>(
    pred: F,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
    max_iter: usize,
) -> Result<f64>
where
    F: Fn(f64) -> bool,
{
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::Domain(format!("invalid bracket [{lo}, {hi}]")));
    }
    if !pred(lo) || pred(hi) {
        return Err(Error::Bracket(format!(
            "predicate must hold at {lo} and fail at {hi}"
        )));
    }
    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        if hi - lo < tol {
            return Ok(mid);
        }
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::Solver(format!(
        "predicate bisection did not shrink below {tol} within {max_iter} iterations"
    )))
}
