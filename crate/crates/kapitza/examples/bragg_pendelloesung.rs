//! Bragg regime: two coupled orders trading population sinusoidally (the
//! Pendelloesung). Shows the oscillation both against interaction time and
//! against potential depth at fixed time.
//!
//!     cargo run --example bragg_pendelloesung

use kapitza::constants::HBAR;
use kapitza::potential::{Envelope, PotentialKind, PotentialSpec};
use kapitza::quantum::{evolve, pendelloesung, EvolutionConfig, ModeAmplitudes, ModeLattice};

fn run_two_mode(v0_over_hbar: f64, eps: f64, duration: f64) -> (f64, f64) {
    let spec = PotentialSpec::new(
        HBAR * v0_over_hbar,
        2.0 * std::f64::consts::PI / 1.064e-6,
        PotentialKind::Ponderomotive,
        Envelope::Rectangular { duration },
    )
    .unwrap();
    let lattice = ModeLattice::new(-5, 5, 0.0, eps).unwrap();
    let initial = ModeAmplitudes::single(&lattice, 1).unwrap();
    let cfg = EvolutionConfig {
        norm_tolerance: 1e-9,
        samples: 33,
        ..EvolutionConfig::for_potential(spec)
    };
    let run = evolve(&lattice, &initial, &cfg).unwrap();
    let last = run.final_state();
    (last.population(1), last.population(-1))
}

fn main() {
    let v0_over_hbar = 1.0e6;
    let eps = 100.0 * v0_over_hbar; // deep Bragg: recoil dominates the depth

    println!("versus interaction time (closed form in parentheses):");
    for i in 0..=8 {
        let t = i as f64 / 8.0 * 4.0 * std::f64::consts::PI / v0_over_hbar;
        if t == 0.0 {
            continue;
        }
        let (p1, pm1) = run_two_mode(v0_over_hbar, eps, t);
        let (c1, cm1) = pendelloesung(HBAR * v0_over_hbar, eps, t);
        println!(
            "  V0 t/4hbar = {:>5.2}   |c+1|^2 = {p1:.4} ({:.4})   |c-1|^2 = {pm1:.4} ({:.4})",
            v0_over_hbar * t / 4.0,
            c1.norm_sqr(),
            cm1.norm_sqr()
        );
    }

    println!("\nversus potential depth at fixed time (period in V0 is 4 pi hbar / t):");
    let t = 4.0e-6;
    for i in 1..=8 {
        let v = i as f64 * 0.5e6;
        let (p1, pm1) = run_two_mode(v, 100.0 * v, t);
        println!("  V0/hbar = {v:.1e}   |c+1|^2 = {p1:.4}   |c-1|^2 = {pm1:.4}");
    }
    println!("\nfull transfer at V0 t / 4hbar = pi/2; back in the incident beam at pi");
}
