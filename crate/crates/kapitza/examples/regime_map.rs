//! The scattering-regime map on the (U/eps, 1/(eps dt)) plane with the nine
//! reported experiments, exported plot-ready. Writes `out/regime_map.csv`.
//!
//!     cargo run --example regime_map

use kapitza::output::{fmt_sci, write_csv, ConventionFlags};
use kapitza::regime::{classify_regime, regime_map, RegimeThresholds, PUBLISHED_POINTS};

fn main() {
    let thresholds = RegimeThresholds::default();

    println!("reported experiments:");
    println!("  id  species  U/eps        1/(eps dt)   U dt      label");
    for pp in PUBLISHED_POINTS {
        let p = pp.point();
        let (x, y) = p.coordinates().unwrap();
        let label = classify_regime(&p, &thresholds);
        println!(
            "  {}   {:<7} {:<12.4e} {:<12.4e} {:<9.3e} {}",
            pp.id,
            pp.species,
            x,
            y,
            p.critical_product(),
            label.as_str()
        );
    }

    let rows = regime_map(&thresholds, (0.1, 1e6), (0.01, 100.0), 8).unwrap();
    std::fs::create_dir_all("out").unwrap();
    write_csv(
        "out/regime_map.csv",
        &ConventionFlags::default(),
        &["u_over_eps", "inv_eps_dt", "label", "point"],
        rows.iter().map(|r| {
            vec![
                fmt_sci(r.u_over_eps),
                fmt_sci(r.inv_eps_dt),
                r.label.as_str().to_string(),
                r.point.unwrap_or("").to_string(),
            ]
        }),
    )
    .unwrap();
    println!("\nwrote out/regime_map.csv ({} rows; plot log-log, color by label)", rows.len());
}
