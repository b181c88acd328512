//! Stackelberg duopoly between an inertial firm and a uniformly accelerated
//! one.
//!
//! The two firms share an entangled two-qubit state
//! `cos(theta)|00> + sin(theta)|11>`; firm B then moves with uniform
//! acceleration, which mixes its mode with an unobservable Rindler partner
//! mode and degrades the shared entanglement. Each firm encodes a market
//! quantity `q` as a mixture of identity and bit-flip strategies with
//! identity weight `1/(1+q)`, payoffs are read off the mixed state's
//! diagonal, and the leader-follower equilibrium is solved by backward
//! induction — numerically, and against explicit closed forms.
//!
//! ```
//! use duopoly::{backward_induction, GameParameters};
//!
//! // theta = 0, r = 0 is the classical limit: q* = (k/2, k/4).
//! let params = GameParameters::from_radians(0.0, 0.0, 1.0).unwrap();
//! let out = backward_induction(&params).unwrap();
//! assert!(out.valid);
//! assert!((out.q1_star - 0.5).abs() < 1e-9);
//! assert!((out.p_b - 0.0625).abs() < 1e-9);
//! ```
//!
//! The runnable examples under `examples/` walk each capability: state
//! construction, payoff surfaces, equilibrium solving, the two figure-style
//! sweeps, and critical-point reports. The thin `duopoly` binary exposes the
//! same operations as subcommands emitting deterministic CSV.

pub mod cli;
pub mod equilibrium;
pub mod error;
pub mod fmt;
pub mod game;
mod linalg;
pub mod numeric;
pub mod state;
pub mod sweep;

pub use equilibrium::{
    backward_induction, closed_form_equilibrium, closed_form_payoffs_maximal,
    closed_form_payoffs_unentangled, find_breakdown_r, find_crossing_r, find_crossing_theta,
    find_vanishing_r, reaction_function, BreakdownReason, EquilibriumOutcome,
};
pub use error::{Error, Result};
pub use game::{
    apply_strategies, bilinear_coefficients, payoff_pair, quantity_to_probability,
    BilinearCoefficients, GameParameters, PayoffPair, QuantityPair, StrategyProbabilities,
};
pub use state::{
    closed_form_rho, initial_state, trace_out_region_ii, unruh_expand, AccelerationParameter,
    DensityMatrix4, EntanglementAngle, TripartiteAmplitudes,
};
pub use sweep::{sweep_csv, sweep_rows, write_sweep_csv, SweepAxis, SweepRow, SweepSpec};
