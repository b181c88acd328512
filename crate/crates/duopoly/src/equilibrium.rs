//! Follower reaction, backward-induction equilibrium, closed forms, and
//! critical accelerations.
//!
//! With the payoff bracket reduced to `E = A + B q2 + C q1 + D q1 q2`
//! (see [`BilinearCoefficients`]), the follower's interior best response is
//! `q2 = -(A + C q1) / (2 (B + D q1))` wherever `B + D q1 < 0`, and the
//! leader's induced objective `q1 (A + C q1) / 2` is exactly quadratic with
//! vertex `q1* = -A / (2C)`. The numeric solver still maximizes the induced
//! objective by bounded golden-section search so boundary-response regimes
//! are handled uniformly; the trace-path payoff evaluation remains the
//! reference and every result is cross-checkable against the closed form.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use crate::error::{Error, Result};
use crate::game::{
    bilinear_coefficients, payoff_pair, BilinearCoefficients, GameParameters, PayoffPair,
    QuantityPair,
};
use crate::numeric::{bisect_root, golden_section_max, parabolic_refine_max};
use crate::state::{AccelerationParameter, EntanglementAngle};

/// Upper search bound for the leader's quantity.
pub const QUANTITY_CEILING: f64 = 1e6;
/// Absolute tolerance on q1 for the numeric leader optimization.
pub const Q1_SEARCH_TOL: f64 = 1e-10;
/// Required agreement between the numeric and closed-form equilibrium paths.
pub const PATH_AGREEMENT_TOL: f64 = 1e-8;
/// Bisection tolerance for critical-point searches.
pub const CRITICAL_BISECTION_TOL: f64 = 1e-10;
/// Denominator magnitude below which a closed-form instance is degenerate.
const DEGENERATE_DENOMINATOR: f64 = 1e-300;

/// Equal-payoff acceleration for the unentangled duopoly at k = 1, i.e. the
/// root of `P_A*(r) - P_B*(r)` bisected to 1e-10 (a plot of the same curves
/// reads as roughly 0.66).
pub const EQUAL_PAYOFF_R_UNENTANGLED: f64 = 0.6662394324925153;

/// Why an instance has no subgame perfect equilibrium, or `Ok` if it does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BreakdownReason {
    Ok,
    /// The leader's unconstrained optimal quantity is negative.
    LeaderQuantityNegative,
    /// The follower's unconstrained best response is negative.
    FollowerQuantityNegative,
    /// The follower's payoff is unbounded above, so no best response exists.
    NonConcaveFollowerProblem,
}

impl BreakdownReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            BreakdownReason::Ok => "OK",
            BreakdownReason::LeaderQuantityNegative => "LEADER_QUANTITY_NEGATIVE",
            BreakdownReason::FollowerQuantityNegative => "FOLLOWER_QUANTITY_NEGATIVE",
            BreakdownReason::NonConcaveFollowerProblem => "NON_CONCAVE_FOLLOWER_PROBLEM",
        }
    }
}

impl fmt::Display for BreakdownReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Backward-induction outcome. When `valid` is false the quantity and payoff
/// fields carry the unconstrained analytic values as diagnostics, so sweeps
/// can chart the breakdown region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumOutcome {
    pub q1_star: f64,
    pub q2_star: f64,
    pub p_a: f64,
    pub p_b: f64,
    pub valid: bool,
    pub reason: BreakdownReason,
}

/// Validity per the analytic stationary point: the leader's quantity must be
/// nonnegative, the follower's problem concave at it (`B + D q1 < 0`), and
/// the follower's response nonnegative. When several conditions fail the
/// leader sign takes precedence, then concavity.
fn classify(co: &BilinearCoefficients, q1: f64, q2: f64) -> (bool, BreakdownReason) {
    if q1 < 0.0 {
        (false, BreakdownReason::LeaderQuantityNegative)
    } else if co.b + co.d * q1 >= 0.0 {
        (false, BreakdownReason::NonConcaveFollowerProblem)
    } else if q2 < 0.0 {
        (false, BreakdownReason::FollowerQuantityNegative)
    } else {
        (true, BreakdownReason::Ok)
    }
}

fn reaction_with(co: &BilinearCoefficients, q1: f64) -> Result<f64> {
    let curvature = co.b + co.d * q1;
    let slope_at_zero = co.a + co.c * q1;
    if curvature < 0.0 {
        // Interior stationary point, clipped to the admissible boundary.
        Ok((-slope_at_zero / (2.0 * curvature)).max(0.0))
    } else if curvature == 0.0 && slope_at_zero <= 0.0 {
        Ok(0.0)
    } else {
        Err(Error::NonConcave(format!(
            "follower payoff is unbounded above at q1 = {q1} (curvature {curvature})"
        )))
    }
}

/// The follower's best response to the leader's quantity:
/// `argmax over q2 >= 0 of P_B(q1, q2)`.
pub fn reaction_function(params: &GameParameters, q1: f64) -> Result<f64> {
    if !q1.is_finite() || q1 < 0.0 {
        return Err(Error::Domain(format!(
            "leader quantity must be finite and nonnegative, got {q1}"
        )));
    }
    reaction_with(&bilinear_coefficients(params), q1)
}

fn outcome_from_diagnostics(
    co: &BilinearCoefficients,
    q1: f64,
    q2: f64,
    reason: BreakdownReason,
) -> EquilibriumOutcome {
    let pay = co.payoffs(q1, q2);
    EquilibriumOutcome {
        q1_star: q1,
        q2_star: q2,
        p_a: pay.p_a,
        p_b: pay.p_b,
        valid: false,
        reason,
    }
}

/// Analytic stationary point of the two-stage game: the leader's
/// unconstrained optimum and the follower's response there.
fn analytic_point(co: &BilinearCoefficients) -> (f64, f64) {
    // C = -(p + t) is strictly negative for r < pi/2.
    let q1 = -co.a / (2.0 * co.c);
    let q2 = -(co.a + co.c * q1) / (2.0 * (co.b + co.d * q1));
    (q1, q2)
}

/// Leader quantities on which the follower's problem is strictly concave
/// (`B + D q1 < 0`), intersected with `[0, QUANTITY_CEILING]`. The curvature
/// is affine in q1, so this is a single interval.
fn concavity_window(co: &BilinearCoefficients) -> (f64, f64) {
    if co.d > 0.0 {
        (0.0, (-co.b / co.d).min(QUANTITY_CEILING))
    } else if co.d < 0.0 {
        ((-co.b / co.d).max(0.0), QUANTITY_CEILING)
    } else {
        (0.0, QUANTITY_CEILING)
    }
}

/// Numeric backward induction: maximizes the leader's payoff against the
/// follower's best response by bounded golden-section search on
/// `[0, QUANTITY_CEILING]`, to [`Q1_SEARCH_TOL`] in q1.
///
/// Invalid instances are classified from the analytic stationary point and
/// reported with diagnostic values rather than an error. Agrees with
/// [`closed_form_equilibrium`] within [`PATH_AGREEMENT_TOL`] on valid
/// instances.
pub fn backward_induction(params: &GameParameters) -> Result<EquilibriumOutcome> {
    let co = bilinear_coefficients(params);
    let (q1_u, q2_u) = analytic_point(&co);
    let (valid, reason) = classify(&co, q1_u, q2_u);
    if !valid {
        return Ok(outcome_from_diagnostics(&co, q1_u, q2_u, reason));
    }

    // The induced objective; regions where the follower has no bounded best
    // response cannot lie on an equilibrium path and are poisoned.
    let objective = |q1: f64| match reaction_with(&co, q1) {
        Ok(q2) => co.payoffs(q1, q2).p_a,
        Err(_) => f64::NEG_INFINITY,
    };

    let q1_star = if co.a == 0.0 {
        // The objective is flat to round-off near the origin and nonpositive
        // beyond it; report the smallest maximizer for deterministic sweeps.
        0.0
    } else {
        // Keep the search inside the follower's concavity window so the
        // poisoned regions are never probed.
        let (win_lo, win_hi) = concavity_window(&co);
        let mut hi = (2.0 * q1_u).max(1.0).min(win_hi);
        let coarse = loop {
            let (x, _) = golden_section_max(objective, win_lo, hi, Q1_SEARCH_TOL, 400)?;
            // Expand the bracket if the maximum pressed against it.
            if hi - x < 10.0 * Q1_SEARCH_TOL && hi < win_hi {
                hi = (2.0 * hi).min(win_hi);
                continue;
            }
            break x;
        };
        // Bracketing stalls at ~sqrt(eps) on the quadratic vertex; a
        // parabolic polish recovers the remaining digits.
        let probe = 1e-4 * coarse.abs().max(1.0);
        parabolic_refine_max(objective, coarse, probe, 2, win_lo, hi)
    };

    let q2_star = reaction_with(&co, q1_star)?;
    let pay = payoff_pair(
        params,
        &QuantityPair::new(q1_star, q2_star).expect("optimizer stays in the admissible quadrant"),
    );
    Ok(EquilibriumOutcome {
        q1_star,
        q2_star,
        p_a: pay.p_a,
        p_b: pay.p_b,
        valid: true,
        reason: BreakdownReason::Ok,
    })
}

/// The equilibrium in closed form:
/// `q1* = cos^2(theta) (k cos^2 r - sin^2 r) / (2 (cos^2 r cos^2 theta + sin^2 theta))`
/// and the matching explicit expression for `q2*`; payoffs are evaluated
/// through the density-matrix path at `(q1*, q2*)`.
pub fn closed_form_equilibrium(params: &GameParameters) -> Result<EquilibriumOutcome> {
    let th = params.theta().radians();
    let r = params.r().radians();
    let k = params.k();
    let ct2 = th.cos() * th.cos();
    let st2 = th.sin() * th.sin();
    let cr2 = r.cos() * r.cos();
    let sr2 = r.sin() * r.sin();

    let lead_den = 2.0 * (cr2 * ct2 + st2);
    if lead_den.abs() < DEGENERATE_DENOMINATOR {
        return Err(Error::Degenerate(format!(
            "leader denominator {lead_den} underflows at theta={th}, r={r}"
        )));
    }
    let q1 = ct2 * (k * cr2 - sr2) / lead_den;

    let c2r = (2.0 * r).cos();
    let c4r = (4.0 * r).cos();
    let den = (3.0 - k + 12.0 * c2r + (1.0 + k) * c4r) * ct2 * ct2
        - 8.0 * ct2 * ((k * k - 4.0) * cr2 + k * sr2) * st2
        + 16.0 * st2 * st2;
    if den.abs() < DEGENERATE_DENOMINATOR {
        return Err(Error::Degenerate(format!(
            "follower denominator {den} underflows at theta={th}, r={r}, k={k}"
        )));
    }
    let q2 = 4.0 * ct2 * (k * cr2 - sr2) * (cr2 * ct2 + st2) / den;

    let co = bilinear_coefficients(params);
    let (valid, reason) = classify(&co, q1, q2);
    if !valid {
        return Ok(outcome_from_diagnostics(&co, q1, q2, reason));
    }
    let pay = payoff_pair(
        params,
        &QuantityPair::new(q1, q2).expect("valid equilibrium quantities are nonnegative"),
    );
    Ok(EquilibriumOutcome {
        q1_star: q1,
        q2_star: q2,
        p_a: pay.p_a,
        p_b: pay.p_b,
        valid: true,
        reason: BreakdownReason::Ok,
    })
}

/// Equilibrium payoffs for the unentangled initial state at k = 1:
/// `P_A = cos^2(2r) sec^2(r) / 8`, `P_B = cos^2(r) cos(2r) / (4 (3 + cos 2r))`.
pub fn closed_form_payoffs_unentangled(r: AccelerationParameter) -> PayoffPair {
    let r = r.radians();
    let c2r = (2.0 * r).cos();
    let cr2 = r.cos() * r.cos();
    PayoffPair {
        p_a: c2r * c2r / (8.0 * cr2),
        p_b: cr2 * c2r / (4.0 * (3.0 + c2r)),
    }
}

/// Equilibrium payoffs for the maximally entangled initial state at k = 1:
/// `P_A = cos^2(2r) / (8 (3 + cos 2r))`,
/// `P_B = cos^2(2r) (3 + cos 2r) sec^2(r) / (32 (6 + cos 2r))`.
pub fn closed_form_payoffs_maximal(r: AccelerationParameter) -> PayoffPair {
    let r = r.radians();
    let c2r = (2.0 * r).cos();
    let cr2 = r.cos() * r.cos();
    PayoffPair {
        p_a: c2r * c2r / (8.0 * (3.0 + c2r)),
        p_b: c2r * c2r * (3.0 + c2r) / (32.0 * (6.0 + c2r) * cr2),
    }
}

/// Smallest r > 0 at which the leader coefficient
/// `A(r) = cos^2(theta) (k cos^2 r - sin^2 r)` vanishes — and with it both
/// equilibrium payoffs. Analytically `arctan(sqrt(k))`, independent of theta;
/// the analytic value is cross-verified by bisection before being returned.
pub fn find_vanishing_r(params: &GameParameters) -> Result<f64> {
    let th = params.theta().radians();
    let ct2 = th.cos() * th.cos();
    if th >= FRAC_PI_2 {
        return Err(Error::Degenerate(
            "leader coefficient vanishes identically at theta = pi/2".into(),
        ));
    }
    let k = params.k();
    let analytic = k.sqrt().atan();
    let leader_coefficient = |r: f64| ct2 * (k * r.cos() * r.cos() - r.sin() * r.sin());
    let bisected = bisect_root(
        leader_coefficient,
        0.0,
        FRAC_PI_2 * (1.0 - 1e-12),
        1e-12,
        200,
    )?;
    if (bisected - analytic).abs() > 1e-9 {
        return Err(Error::Solver(format!(
            "bisected vanishing point {bisected} disagrees with arctan(sqrt(k)) = {analytic}"
        )));
    }
    Ok(analytic)
}

fn equilibrium_on_axis(
    params: &GameParameters,
    swap_theta: bool,
    v: f64,
) -> Result<EquilibriumOutcome> {
    let p = if swap_theta {
        GameParameters::new(EntanglementAngle::new(v)?, params.r(), params.k())?
    } else {
        GameParameters::new(params.theta(), AccelerationParameter::new(v)?, params.k())?
    };
    closed_form_equilibrium(&p)
}

fn crossing_on_axis(params: &GameParameters, swap_theta: bool, lo: f64, hi: f64) -> Result<f64> {
    let diff = |v: f64| -> Result<f64> {
        let out = equilibrium_on_axis(params, swap_theta, v)?;
        if !out.valid {
            return Err(Error::Bracket(format!(
                "no valid equilibrium at axis value {v} ({})",
                out.reason
            )));
        }
        Ok(out.p_a - out.p_b)
    };
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::Domain(format!("invalid bracket [{lo}, {hi}]")));
    }
    let mut lo = lo;
    let mut hi = hi;
    let mut d_lo = diff(lo)?;
    let d_hi = diff(hi)?;
    if d_lo == 0.0 {
        return Ok(lo);
    }
    if d_hi == 0.0 {
        return Ok(hi);
    }
    if d_lo.signum() == d_hi.signum() {
        return Err(Error::Bracket(format!(
            "payoff difference does not change sign on [{lo}, {hi}]"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < CRITICAL_BISECTION_TOL {
            return Ok(mid);
        }
        let d_mid = diff(mid)?;
        if d_mid == 0.0 {
            return Ok(mid);
        }
        if d_mid.signum() == d_lo.signum() {
            lo = mid;
            d_lo = d_mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::Solver(
        "crossing bisection did not converge within 200 iterations".into(),
    ))
}

/// Acceleration at which both firms' equilibrium payoffs are equal, bisected
/// on `P_A*(r) - P_B*(r)` over `[r_lo, r_hi]`. Both endpoints must carry a
/// valid equilibrium and the difference must change sign.
pub fn find_crossing_r(params: &GameParameters, r_lo: f64, r_hi: f64) -> Result<f64> {
    crossing_on_axis(params, false, r_lo, r_hi)
}

/// Entanglement angle at which both firms' equilibrium payoffs are equal at
/// fixed r; the companion of [`find_crossing_r`] with the roles swapped.
pub fn find_crossing_theta(params: &GameParameters, theta_lo: f64, theta_hi: f64) -> Result<f64> {
    crossing_on_axis(params, true, theta_lo, theta_hi)
}

/// Acceleration at which the equilibrium's `valid` flag flips from true to
/// false, bisected to [`CRITICAL_BISECTION_TOL`].
///
/// For k <= 1 this coincides with the leader-quantity zero arctan(sqrt(k));
/// for larger k the follower's concavity can fail first, so the boundary can
/// sit strictly below arctan(sqrt(k)).
pub fn find_breakdown_r(params: &GameParameters) -> Result<f64> {
    let valid_at = |r: f64| -> Result<bool> { Ok(equilibrium_on_axis(params, false, r)?.valid) };
    let mut lo = 0.0;
    let mut hi = FRAC_PI_2 * (1.0 - 1e-12);
    if !valid_at(lo)? {
        return Err(Error::Bracket(
            "equilibrium is already invalid at r = 0".into(),
        ));
    }
    if valid_at(hi)? {
        return Err(Error::Bracket(
            "equilibrium never breaks down below r = pi/2".into(),
        ));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < CRITICAL_BISECTION_TOL {
            return Ok(mid);
        }
        if valid_at(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::Solver(
        "breakdown bisection did not converge within 200 iterations".into(),
    ))
}
