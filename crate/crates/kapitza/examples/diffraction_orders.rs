//! Raman-Nath (diffractive) regime: many symmetric orders with
//! Bessel-function populations. Compares the numerical evolution against the
//! closed form and writes `out/diffraction_orders.csv`.
//!
//!     cargo run --example diffraction_orders

use kapitza::bessel::bessel_j;
use kapitza::constants::HBAR;
use kapitza::output::{fmt_sci, write_csv, ConventionFlags};
use kapitza::potential::{Envelope, PotentialKind, PotentialSpec};
use kapitza::quantum::{evolve, EvolutionConfig, ModeAmplitudes, ModeLattice};

fn main() {
    let v0_over_hbar = 1.0e6; // rad/s
    let duration = 8.0e-6; // V0 t / hbar = 8, Bessel argument 4
    let spec = PotentialSpec::new(
        HBAR * v0_over_hbar,
        2.0 * std::f64::consts::PI / 1.064e-6,
        PotentialKind::Ponderomotive,
        Envelope::Rectangular { duration },
    )
    .unwrap();
    // heavy-particle limit: recoil negligible on the interaction timescale
    let lattice = ModeLattice::new(-40, 40, 0.0, 0.0).unwrap();
    let initial = ModeAmplitudes::single(&lattice, 0).unwrap();
    let cfg = EvolutionConfig {
        norm_tolerance: 1e-10,
        ..EvolutionConfig::for_potential(spec)
    };
    let run = evolve(&lattice, &initial, &cfg).unwrap();
    let last = run.final_state();

    let phi = v0_over_hbar * duration / 2.0;
    println!("V0 t / hbar = {:.1}, Bessel argument = {phi:.1}", v0_over_hbar * duration);
    println!("order   numeric |c|^2    J^2_m(phi)");
    let mut rows = Vec::new();
    for m in -8i32..=8 {
        let numeric = last.population(2 * m);
        let closed = bessel_j(m, phi).powi(2);
        println!("{m:>5}   {numeric:<14.6e}  {closed:.6e}");
        rows.push(vec![m.to_string(), fmt_sci(numeric), fmt_sci(closed)]);
    }
    println!("norm drift: {:.2e}", run.norm_drift);
    std::fs::create_dir_all("out").unwrap();
    write_csv(
        "out/diffraction_orders.csv",
        &ConventionFlags::default(),
        &["order", "numeric_probability", "bessel_squared"],
        rows,
    )
    .unwrap();
    println!("wrote out/diffraction_orders.csv");
}
