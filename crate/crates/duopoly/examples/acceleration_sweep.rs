//! Sweeps the equilibrium payoffs against the acceleration r for the
//! unentangled and maximally entangled initial states (k = 1), the data
//! behind the two acceleration-axis payoff plots: leader advantage at small
//! r, an equal-payoff crossing near 0.66 for the unentangled state, and both
//! payoffs dying at r = pi/4.
//!
//! Run:
//!   cargo run -p duopoly --example acceleration_sweep

use std::f64::consts::FRAC_PI_4;

use duopoly::{sweep_rows, GameParameters, SweepAxis, SweepSpec};

fn main() {
    let hi = FRAC_PI_4 + 0.02;
    for (label, theta) in [("unentangled", 0.0), ("maximally_entangled", FRAC_PI_4)] {
        eprintln!("sweeping r in [0, pi/4 + 0.02] at theta = {label} ...");
        let fixed = GameParameters::from_radians(theta, 0.0, 1.0).unwrap();
        let spec = SweepSpec::new(SweepAxis::R, 0.0, hi, 158, fixed).unwrap();
        let rows = sweep_rows(&spec, 1).unwrap();

        println!("# initial_state={label} k=1");
        println!("r,payoff_A,payoff_B,closed_payoff_A,closed_payoff_B,valid");
        for row in &rows {
            let closed = row
                .closed
                .expect("reference curve exists at theta in {0, pi/4}, k = 1");
            if row.outcome.valid {
                println!(
                    "{},{},{},{},{},true",
                    row.r, row.outcome.p_a, row.outcome.p_b, closed.p_a, closed.p_b
                );
            } else {
                println!("{},,,{},{},false", row.r, closed.p_a, closed.p_b);
            }
        }
        println!();

        let breakdown = rows.iter().find(|row| !row.outcome.valid);
        eprintln!(
            "  first invalid grid point: r = {}",
            breakdown.map(|row| row.r).unwrap_or(f64::NAN)
        );
    }
    eprintln!("done");
}
