//! Strategy mixing and payoff evaluation for the two-firm quantity game.
//!
//! Each firm mixes the identity with the bit-flip: firm A plays the identity
//! with probability `x = 1/(1+q1)` and firm B with `y = 1/(1+q2)`, so larger
//! quantities mean more aggressive flipping. Payoffs are read off the
//! diagonal of the mixed state through the shared bracket
//! `E = k rho11 - rho22 - rho33`, scaled by `q_i (1+q1)(1+q2)`. In the
//! inertial unentangled limit this reduces to the textbook profit
//! `q_i (k - q1 - q2)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{closed_form_rho, AccelerationParameter, DensityMatrix4, EntanglementAngle};

/// One game instance: entanglement angle, acceleration parameter, and the
/// demand constant k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GameParameters {
    theta: EntanglementAngle,
    r: AccelerationParameter,
    k: f64,
}

impl GameParameters {
    pub fn new(theta: EntanglementAngle, r: AccelerationParameter, k: f64) -> Result<Self> {
        if !k.is_finite() || k <= 0.0 {
            return Err(Error::Domain(format!(
                "demand constant k must be positive and finite, got {k}"
            )));
        }
        Ok(Self { theta, r, k })
    }

    /// Convenience constructor from raw radians.
    pub fn from_radians(theta: f64, r: f64, k: f64) -> Result<Self> {
        Self::new(
            EntanglementAngle::new(theta)?,
            AccelerationParameter::new(r)?,
            k,
        )
    }

    pub fn theta(&self) -> EntanglementAngle {
        self.theta
    }

    pub fn r(&self) -> AccelerationParameter {
        self.r
    }

    pub fn k(&self) -> f64 {
        self.k
    }
}

/// Nonnegative finite quantities chosen by the leader (q1) and follower (q2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantityPair {
    q1: f64,
    q2: f64,
}

impl QuantityPair {
    pub fn new(q1: f64, q2: f64) -> Result<Self> {
        for (name, q) in [("q1", q1), ("q2", q2)] {
            if !q.is_finite() || q < 0.0 {
                return Err(Error::Domain(format!(
                    "{name} must be finite and nonnegative, got {q}"
                )));
            }
        }
        Ok(Self { q1, q2 })
    }

    pub fn q1(&self) -> f64 {
        self.q1
    }

    pub fn q2(&self) -> f64 {
        self.q2
    }
}

/// Maps a quantity in [0, inf) to an identity-strategy probability in (0, 1].
pub fn quantity_to_probability(q: f64) -> Result<f64> {
    if !q.is_finite() || q < 0.0 {
        return Err(Error::Domain(format!(
            "quantity must be finite and nonnegative, got {q}"
        )));
    }
    Ok(1.0 / (1.0 + q))
}

/// Identity-strategy probabilities `x = 1/(1+q1)`, `y = 1/(1+q2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyProbabilities {
    x: f64,
    y: f64,
}

impl StrategyProbabilities {
    pub fn from_quantities(q: &QuantityPair) -> Self {
        Self {
            x: 1.0 / (1.0 + q.q1),
            y: 1.0 / (1.0 + q.q2),
        }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }
}

/// Real leader/follower payoffs; either may be negative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffPair {
    pub p_a: f64,
    pub p_b: f64,
}

// Basis permutations induced by conjugating with the bit-flip on firm B,
// firm A, or both, in the order |00>, |01>, |10>, |11>.
const FLIP_B: [usize; 4] = [1, 0, 3, 2];
const FLIP_A: [usize; 4] = [2, 3, 0, 1];
const FLIP_BOTH: [usize; 4] = [3, 2, 1, 0];

/// Mixes the four strategy branches into the final state:
/// `xy rho + x(1-y) (I(x)C) rho (I(x)C)^H + (1-x)y (C(x)I) rho (C(x)I)^H
///  + (1-x)(1-y) (C(x)C) rho (C(x)C)^H`.
///
/// The flip operators are permutations, so conjugation reindexes entries; the
/// mix preserves Hermiticity, trace, and positive semidefiniteness.
pub fn apply_strategies(rho: &DensityMatrix4, x: f64, y: f64) -> Result<DensityMatrix4> {
    for (name, v) in [("x", x), ("y", y)] {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::Domain(format!(
                "strategy probability {name} must lie in [0, 1], got {v}"
            )));
        }
    }
    let weights = [x * y, x * (1.0 - y), (1.0 - x) * y, (1.0 - x) * (1.0 - y)];
    let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = weights[0] * rho.entry(i, j)
                + weights[1] * rho.entry(FLIP_B[i], FLIP_B[j])
                + weights[2] * rho.entry(FLIP_A[i], FLIP_A[j])
                + weights[3] * rho.entry(FLIP_BOTH[i], FLIP_BOTH[j]);
        }
    }
    DensityMatrix4::new(m)
}

/// Both firms' payoffs at the given quantities, via the density-matrix path.
///
/// Builds the shared state, mixes in the strategies, and evaluates
/// `P_i = q_i (1+q1)(1+q2) (k rho_f11 - rho_f22 - rho_f33)`.
pub fn payoff_pair(params: &GameParameters, q: &QuantityPair) -> PayoffPair {
    let rho = closed_form_rho(params.theta(), params.r());
    let probs = StrategyProbabilities::from_quantities(q);
    let rho_f = apply_strategies(&rho, probs.x(), probs.y())
        .expect("strategy probabilities derived from quantities lie in (0, 1]");
    let d = rho_f.diagonal();
    let bracket = params.k() * d[0] - d[1] - d[2];
    let scale = (1.0 + q.q1()) * (1.0 + q.q2());
    PayoffPair {
        p_a: q.q1() * scale * bracket,
        p_b: q.q2() * scale * bracket,
    }
}

/// Coefficients of the exact bilinear reduction of the payoff bracket.
///
/// With `p = cos^2 r cos^2 theta`, `s = sin^2 r cos^2 theta`,
/// `t = sin^2 theta`:
/// `A = k p - s`, `B = k s - p - t`, `C = -(p + t)`, `D = k t - s`,
/// and `P_A = q1 (A + B q2 + C q1 + D q1 q2)`, `P_B = q2 (same bracket)`.
/// C is strictly negative for r < pi/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BilinearCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl BilinearCoefficients {
    /// The shared bracket `E(q1, q2) = A + B q2 + C q1 + D q1 q2`.
    pub fn bracket(&self, q1: f64, q2: f64) -> f64 {
        self.a + self.b * q2 + self.c * q1 + self.d * q1 * q2
    }

    /// `(q1 E, q2 E)`; accepts arbitrary reals so solvers can evaluate
    /// diagnostic points outside the admissible quadrant.
    pub fn payoffs(&self, q1: f64, q2: f64) -> PayoffPair {
        let e = self.bracket(q1, q2);
        PayoffPair {
            p_a: q1 * e,
            p_b: q2 * e,
        }
    }
}

/// Reduces the trace-path payoffs to [`BilinearCoefficients`]. The two routes
/// agree within 1e-10 for all nonnegative quantities.
pub fn bilinear_coefficients(params: &GameParameters) -> BilinearCoefficients {
    let th = params.theta().radians();
    let r = params.r().radians();
    let k = params.k();
    let ct2 = th.cos() * th.cos();
    let p = r.cos() * r.cos() * ct2;
    let s = r.sin() * r.sin() * ct2;
    let t = th.sin() * th.sin();
    BilinearCoefficients {
        a: k * p - s,
        b: k * s - p - t,
        c: -(p + t),
        d: k * t - s,
    }
}
