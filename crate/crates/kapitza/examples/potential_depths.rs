//! Ponderomotive vs lightshift depths across laser wavelength, including the
//! sign flip of the lightshift at resonance. Writes `out/potential_depths.csv`.
//!
//!     cargo run --example potential_depths

use kapitza::constants::{ELECTRON_MASS, ELEMENTARY_CHARGE, HBAR};
use kapitza::field::LaserBeam;
use kapitza::output::{fmt_sci, write_csv, ConventionFlags};
use kapitza::particle::ResonanceLine;
use kapitza::potential::{lightshift_depth, ponderomotive_depth, FieldAmplitudeConvention};

fn main() {
    let intensity = 1.0e7; // W/m^2
    let na_d2 = ResonanceLine::from_wavelength_nm(589.0, 1.0);

    let mut rows = Vec::new();
    let mut lambda_nm = 420.0;
    while lambda_nm <= 780.0 {
        let beam = LaserBeam::new(lambda_nm * 1e-9, intensity, 100e-6, 1e-3).unwrap();
        let vp = ponderomotive_depth(&beam, -ELEMENTARY_CHARGE, ELECTRON_MASS).unwrap();
        let vl = lightshift_depth(
            &beam,
            na_d2.omega0,
            na_d2.weight,
            ELEMENTARY_CHARGE,
            ELECTRON_MASS,
            FieldAmplitudeConvention::StandingWave,
        );
        rows.push(vec![
            fmt_sci(lambda_nm),
            fmt_sci(vp / HBAR),
            match &vl {
                Ok(v) => fmt_sci(v / HBAR),
                Err(_) => "nan".into(), // inside the resonance guard band
            },
        ]);
        lambda_nm += 2.0;
    }
    std::fs::create_dir_all("out").unwrap();
    write_csv(
        "out/potential_depths.csv",
        &ConventionFlags::default(),
        &["lambda_nm", "ponderomotive_over_hbar_rad_s", "lightshift_over_hbar_rad_s"],
        rows,
    )
    .unwrap();
    println!("wrote out/potential_depths.csv");
    println!("(lightshift flips sign at the 589 nm resonance: attractive red of it, repulsive blue)");

    for &nm in &[560.0, 620.0] {
        let beam = LaserBeam::new(nm * 1e-9, intensity, 100e-6, 1e-3).unwrap();
        let vl = lightshift_depth(
            &beam,
            na_d2.omega0,
            1.0,
            ELEMENTARY_CHARGE,
            ELECTRON_MASS,
            FieldAmplitudeConvention::StandingWave,
        )
        .unwrap();
        println!("  {nm} nm: V_L/hbar = {:+.3e} rad/s", vl / HBAR);
    }
}
