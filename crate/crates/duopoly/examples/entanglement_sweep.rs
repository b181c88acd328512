//! Sweeps the equilibrium payoffs against the entanglement angle theta at
//! fixed acceleration r = 2pi/9 (k = 1): payoffs fall as the initial state
//! gets more entangled, and the duopoly turns from follower advantage into
//! leader advantage as theta grows.
//!
//! Run:
//!   cargo run -p duopoly --example entanglement_sweep

use std::f64::consts::{FRAC_PI_2, PI};

use duopoly::{find_crossing_theta, sweep_rows, GameParameters, SweepAxis, SweepSpec};

fn main() {
    let r = 2.0 * PI / 9.0;
    eprintln!("sweeping theta in [0, pi/2] at r = 2pi/9, k = 1 ...");
    let fixed = GameParameters::from_radians(0.0, r, 1.0).unwrap();
    let spec = SweepSpec::new(SweepAxis::Theta, 0.0, FRAC_PI_2, 91, fixed).unwrap();
    let rows = sweep_rows(&spec, 1).unwrap();

    println!("theta,payoff_A,payoff_B,advantage");
    for row in &rows {
        let advantage = if row.outcome.p_a > row.outcome.p_b {
            "leader"
        } else {
            "follower"
        };
        println!(
            "{},{},{},{advantage}",
            row.theta, row.outcome.p_a, row.outcome.p_b
        );
    }

    let crossing = find_crossing_theta(&fixed, 1e-6, FRAC_PI_2 - 1e-6).unwrap();
    eprintln!("\nequal-payoff entanglement angle: theta = {crossing}");
    eprintln!("done");
}
