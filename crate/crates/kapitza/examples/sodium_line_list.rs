//! Multi-line lightshift from a user-supplied line list: loads the sodium
//! D-doublet file shipped under `examples/data/` and evaluates the
//! high-intensity diffraction product U * tau against the design entry.
//!
//!     cargo run --example sodium_line_list

use std::path::Path;

use kapitza::constants::{HBAR, PLANCK_H};
use kapitza::field::LaserBeam;
use kapitza::particle::{load_line_list, Particle};
use kapitza::potential::{multiline_lightshift, FieldAmplitudeConvention};
use kapitza::tables::{high_intensity_presets, high_intensity_row};

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/na_d_lines.json");
    let lines = load_line_list(&path).unwrap();
    println!("loaded {} lines from {}:", lines.len(), path.display());
    for l in &lines {
        println!("  omega0 = {:.4e} rad/s, weight = {}", l.omega0, l.weight);
    }

    // the 1 W argon-laser design point: 488 nm focused to 100 um x 1 mm
    let beam = LaserBeam::new(488e-9, 1.0e7, 100e-6, 1e-3).unwrap();
    let na = Particle::atom("Na", 22.98977).with_lines(lines).unwrap();
    let depth = multiline_lightshift(&beam, &na, FieldAmplitudeConvention::StandingWave).unwrap();
    println!("\nsummed lightshift at 488 nm, 1e7 W/m^2:");
    println!("  V = {:+.4e} J = hbar x {:+.4e} rad/s = h x {:+.4e} Hz", depth, depth / HBAR, depth / PLANCK_H);
    println!("  (positive: 488 nm is blue of both D lines, low-field seeking)");

    let preset = high_intensity_presets().remove(0);
    let na_lines = load_line_list(&path).unwrap();
    let row = high_intensity_row(&preset, na_lines).unwrap();
    println!(
        "\nU * tau at the preset's {} m/s beam: {:.3} (design entry {}, ratio {:.2})",
        preset.velocity, row.computed, row.published, row.ratio
    );
}
