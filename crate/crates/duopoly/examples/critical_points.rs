//! Reports the critical accelerations for a range of demand constants:
//! where the equilibrium payoffs vanish (arctan sqrt(k), independent of the
//! entanglement), where leader and follower are equally benefitted, and
//! where the equilibrium's validity actually breaks down.
//!
//! Run:
//!   cargo run -p duopoly --example critical_points

use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

use duopoly::{
    closed_form_equilibrium, find_breakdown_r, find_crossing_r, find_vanishing_r,
    AccelerationParameter, Error, GameParameters,
};

fn crossing_in_valid_region(params: &GameParameters, r_max: f64) -> Option<f64> {
    let mut prev: Option<(f64, f64)> = None;
    for i in 0..=256 {
        let r = r_max * (1.0 - 1e-9) * i as f64 / 256.0;
        let p = GameParameters::new(
            params.theta(),
            AccelerationParameter::new(r).unwrap(),
            params.k(),
        )
        .unwrap();
        let out = closed_form_equilibrium(&p).unwrap();
        if !out.valid {
            break;
        }
        let diff = out.p_a - out.p_b;
        if let Some((r_prev, d_prev)) = prev {
            if d_prev.signum() != diff.signum() {
                return find_crossing_r(params, r_prev, r).ok();
            }
        }
        prev = Some((r, diff));
    }
    None
}

fn main() {
    eprintln!("=== Critical accelerations ===\n");

    println!("theta,k,vanishing_r,crossing_r,breakdown_r");
    for &theta in &[0.0, FRAC_PI_8, FRAC_PI_4] {
        for &k in &[0.5, 1.0, 2.0, 3.0] {
            let params = GameParameters::from_radians(theta, 0.0, k).unwrap();
            let vanishing = match find_vanishing_r(&params) {
                Ok(v) => v,
                Err(Error::Degenerate(msg)) => {
                    eprintln!("skipping theta={theta}: {msg}");
                    continue;
                }
                Err(err) => panic!("{err}"),
            };
            let breakdown = match find_breakdown_r(&params) {
                Ok(v) => Some(v),
                // Strongly entangled states with large k have no valid
                // region at all: the follower's problem is already
                // non-concave in the inertial frame.
                Err(Error::Bracket(_)) => None,
                Err(err) => panic!("{err}"),
            };
            let crossing = breakdown.and_then(|b| crossing_in_valid_region(&params, b));
            let crossing_col = crossing.map(|c| c.to_string()).unwrap_or_default();
            let breakdown_col = breakdown.map(|b| b.to_string()).unwrap_or_default();
            println!("{theta},{k},{vanishing},{crossing_col},{breakdown_col}");
        }
    }

    eprintln!("\nnotes:");
    eprintln!("  - vanishing_r = arctan(sqrt(k)) for every theta");
    eprintln!("  - for k <= 1 the breakdown coincides with vanishing_r;");
    eprintln!("    for larger k the follower's concavity fails earlier");
    eprintln!("  - an empty breakdown column means no valid region exists at all");
    eprintln!("  - the maximally entangled k = 1 duopoly has no crossing:");
    eprintln!("    the leader stays ahead on the whole valid range");
}
