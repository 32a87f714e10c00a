//! The two 10 eV electron design runs: a narrow intense beam producing
//! many diffraction orders, and a wide weak beam at the Bragg angle producing
//! a clean two-order oscillation. Writes the time series of both to `out/`.
//!
//!     cargo run --example electron_presets

use kapitza::constants::HBAR;
use kapitza::output::{fmt_sci, write_csv, ConventionFlags};
use kapitza::quantum::{electron_preset_run, ElectronRegime};

fn main() {
    std::fs::create_dir_all("out").unwrap();
    for (regime, tag) in [
        (ElectronRegime::Diffractive, "diffractive"),
        (ElectronRegime::Bragg, "bragg"),
    ] {
        let p = electron_preset_run(regime).unwrap();
        println!("{tag}: waist = {} m, intensity = {:.0e} W/m^2", p.beam.waist, p.beam.intensity);
        println!("  V0/hbar = {:.3e} rad/s, recoil eps = {:.3e} rad/s, transit = {:.3e} s", p.depth / HBAR, p.epsilon, p.transit);
        println!("  V0 dt / hbar = {:.2}", p.depth / HBAR * p.transit);
        println!("  norm drift = {:.2e}, lattice |n| <= {}", p.run.norm_drift, p.run.lattice.n_max);
        let last = p.run.final_state();
        print!("  final populations:");
        for n in -6..=6 {
            if last.population(n) > 1e-4 {
                print!(" |c[{n:+}]|^2={:.3}", last.population(n));
            }
        }
        println!("\n");

        let mut rows = Vec::new();
        for state in &p.run.samples {
            for n in p.run.lattice.indices() {
                if state.population(n) > 1e-12 {
                    rows.push(vec![
                        fmt_sci(state.time),
                        fmt_sci(n as f64 / 2.0),
                        fmt_sci(state.population(n)),
                    ]);
                }
            }
        }
        let path = format!("out/electron_{tag}_timeseries.csv");
        write_csv(&path, &ConventionFlags::default(), &["time_s", "order", "probability"], rows)
            .unwrap();
        println!("  wrote {path}");
    }
}
