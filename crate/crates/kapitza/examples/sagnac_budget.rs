//! Sagnac rotation-sensing budget: resolution R = k_g L^2 / v and shot-noise
//! sensitivity S = 1/(R C sqrt(n)) for a few device scales, normalized to the
//! earth's rotation.
//!
//!     cargo run --example sagnac_budget

use kapitza::interferometry::{sagnac_resolution, sagnac_sensitivity, SagnacConfig};

fn main() {
    let configs = [
        ("thermal atom beam, light gratings", 500e-9, 0.25, 700.0, 0.2, 1.0e4),
        ("slow atom beam", 500e-9, 0.25, 50.0, 0.2, 1.0e4),
        ("electron beam (light gratings)", 532e-9, 0.25, 2.0e6, 0.2, 1.0e6),
        ("optical interferometer", 500e-9, 0.25, 2.99792458e8, 0.5, 1.0e16),
    ];
    println!(
        "{:<38} {:>12} {:>14} {:>16}",
        "device", "R (s)", "S (rad/s/rtHz)", "S (earth rot/rt s)"
    );
    for (name, period, length, velocity, contrast, rate) in configs {
        let cfg = SagnacConfig::new(
            2.0 * std::f64::consts::PI / period,
            length,
            velocity,
            contrast,
            rate,
        )
        .unwrap();
        let r = sagnac_resolution(&cfg);
        let s = sagnac_sensitivity(&cfg);
        println!(
            "{name:<38} {r:>12.4e} {:>14.4e} {:>16.4e}",
            s.sensitivity, s.in_earth_rotations
        );
    }
    println!("\nS = 1 earth rotation per root second means the earth's spin is resolvable in one second;");
    println!("slow particles win on R, photons win on count rate.");
}
