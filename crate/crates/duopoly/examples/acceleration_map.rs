//! Maps proper accelerations to the squeezing parameter r through
//! `cos r = (e^(-2 pi omega c / a) + 1)^(-1/2)` and shows the approach to
//! the r = pi/4 ceiling in the infinite-acceleration limit.
//!
//! Run:
//!   cargo run -p duopoly --example acceleration_map

use std::f64::consts::FRAC_PI_4;

use duopoly::AccelerationParameter;

fn main() {
    eprintln!("=== Acceleration to squeezing parameter (omega = c = 1) ===\n");

    println!("a,r,pi_over_4_minus_r");
    let mut a = 1e-2;
    while a <= 1e6 {
        let r = AccelerationParameter::from_acceleration(a, 1.0, 1.0)
            .unwrap()
            .radians();
        println!("{a:e},{r},{:e}", FRAC_PI_4 - r);
        a *= 10.0_f64.powf(0.25);
    }

    let near_zero = AccelerationParameter::from_acceleration(1e-6, 1.0, 1.0).unwrap();
    let near_infinite = AccelerationParameter::from_acceleration(1e12, 1.0, 1.0).unwrap();
    eprintln!("r(a -> 0)   = {:e}", near_zero.radians());
    eprintln!(
        "r(a -> inf) = {} (pi/4 = {})",
        near_infinite.radians(),
        FRAC_PI_4
    );
    assert!(near_infinite.radians() < FRAC_PI_4);
    eprintln!("  ✓ physical accelerations stay strictly below pi/4");
}
