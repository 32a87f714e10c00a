//! Fields and driven velocities in a standing light wave, and the force
//! picture: the Lorentz force on the driven charge, averaged over an optical
//! cycle, reproduces the gradient of the effective potential.
//!
//!     cargo run --example standing_wave_fields

use std::f64::consts::PI;

use kapitza::constants::{ELECTRON_MASS, ELEMENTARY_CHARGE};
use kapitza::field::{fields_at, free_electron_velocity};
use kapitza::potential::{ponderomotive_depth, Envelope, PotentialKind, PotentialSpec};

fn main() {
    let beam = kapitza::field::LaserBeam::new(1.064e-6, 1.0e15, 1e-4, 1e-3).unwrap();
    let sw = beam.standing_wave();
    println!("standing wave: A0 = {:.4e} V s/m, k = {:.4e} rad/m, E0 = {:.4e} V/m", sw.a0, sw.k, sw.e0());

    println!("\nfields across half a period at t = T/8:");
    let t = 2.0 * PI / sw.omega / 8.0;
    for i in 0..=8 {
        let x = i as f64 / 8.0 * PI / sw.k;
        let (e, b) = fields_at(&sw, x, t);
        let v = free_electron_velocity(&sw, x, t);
        println!("  kx = {:>4.2} pi   E_z = {e:+.3e}  B_y = {b:+.3e}  v_z = {v:+.3e}", i as f64 / 8.0);
    }

    // cycle-averaged Lorentz force vs -dV/dx
    let depth = ponderomotive_depth(&beam, ELEMENTARY_CHARGE, ELECTRON_MASS).unwrap();
    let spec = PotentialSpec::new(
        depth,
        sw.k,
        PotentialKind::Ponderomotive,
        Envelope::Rectangular { duration: 1.0 },
    )
    .unwrap();
    println!("\nponderomotive depth: {:.4e} J = hbar x {:.4e} rad/s", depth, depth / kapitza::constants::HBAR);
    println!("cycle-averaged e v_z B_y vs -dV/dx:");
    let period = 2.0 * PI / sw.omega;
    for i in 1..8 {
        let x = i as f64 / 8.0 * PI / sw.k;
        let n = 4096;
        let mut avg = 0.0;
        for j in 0..n {
            let tj = (j as f64 + 0.5) / n as f64 * period;
            let (_, b) = fields_at(&sw, x, tj);
            avg += ELEMENTARY_CHARGE * free_electron_velocity(&sw, x, tj) * b;
        }
        avg /= n as f64;
        println!(
            "  kx = {:>4.2} pi   <F> = {avg:+.4e} N   -dV/dx = {:+.4e} N",
            i as f64 / 8.0,
            spec.force(x, 0.5)
        );
    }
}
