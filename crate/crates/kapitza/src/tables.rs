//! Row-by-row comparison of computed quantities against the published design
//! tables: recoil frequencies of the reported experiments, the
//! lightshift-product estimates for high-intensity atom/ion diffraction, and
//! the electron design rows.

use serde::{Deserialize, Serialize};

use crate::constants::{angular_to_cyclic, ATOMIC_MASS_UNIT, ELECTRON_MASS, ELEMENTARY_CHARGE, PLANCK_H};
use crate::error::{Error, Result};
use crate::field::LaserBeam;
use crate::kinematics::{interaction_time, recoil_frequency};
use crate::particle::{builtin, Particle, ResonanceLine};
use crate::potential::{multiline_lightshift, ponderomotive_depth, FieldAmplitudeConvention};
use crate::regime::critical_parameter;

/// One comparison row.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub table: u8,
    pub row: String,
    pub quantity: String,
    pub computed: f64,
    pub published: f64,
    /// computed / published
    pub ratio: f64,
    pub unit: &'static str,
}

impl TableRow {
    fn new(
        table: u8,
        row: impl Into<String>,
        quantity: impl Into<String>,
        computed: f64,
        published: f64,
        unit: &'static str,
    ) -> Self {
        Self {
            table,
            row: row.into(),
            quantity: quantity.into(),
            computed,
            published,
            ratio: computed / published,
            unit,
        }
    }
}

/// Recoil-column data for the reported experiments: species, resonance
/// wavelength (nm) and the published recoil frequency (kHz, cyclic).
pub const RECOIL_COLUMN: &[(&str, f64, f64)] = &[
    ("Na", 589.0, 24.0),
    ("Ar", 811.0, 7.5),
    ("Ne", 640.0, 24.0),
    ("Li", 671.0, 37.0),
    ("Rb", 780.0, 3.5),
    ("Cs", 852.0, 12.0),
    ("Cr", 425.0, 20.0),
];

/// Computed vs published recoil frequencies (cyclic kHz) for the reported
/// species at their standard resonance wavelengths.
pub fn recoil_table() -> Result<Vec<TableRow>> {
    RECOIL_COLUMN
        .iter()
        .map(|&(species, lambda_nm, published_khz)| {
            let p = builtin(species).ok_or_else(|| {
                Error::InvalidInput(format!("unknown builtin species '{species}'"))
            })?;
            let eps = recoil_frequency(p.mass, lambda_nm * 1e-9)?;
            Ok(TableRow::new(
                1,
                species,
                "recoil_frequency",
                angular_to_cyclic(eps) / 1e3,
                published_khz,
                "kHz",
            ))
        })
        .collect()
}

/// A high-intensity diffraction preset: one species row of the atom/ion
/// design table. The published product U·τ uses U in cyclic Hz. The table
/// quotes no beam velocity; the preset documents a slowed beam.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HighIntensityPreset {
    pub species: String,
    /// Published product U·τ (U cyclic)
    pub published_product: f64,
    /// Laser wavelength (m)
    pub laser_wavelength: f64,
    /// Intensity (W/m²)
    pub intensity: f64,
    /// Waist (m)
    pub waist: f64,
    /// Beam velocity used for τ = w/v (m/s); not part of the published table
    pub velocity: f64,
    /// Whether a user-supplied line list is required to evaluate the row
    pub requires_line_list: bool,
}

/// The five published rows: Na, metastable Ar, and the Ca+/Li+/Ba+ ions, all
/// at the 1 W single-line argon laser design point (488 nm, 100 um x 1 mm).
pub fn high_intensity_presets() -> Vec<HighIntensityPreset> {
    let base = |species: &str, published: f64| HighIntensityPreset {
        species: species.into(),
        published_product: published,
        laser_wavelength: 488e-9,
        intensity: 1.0e7,
        waist: 100e-6,
        velocity: 25.0,
        requires_line_list: true,
    };
    vec![
        base("Na", 0.4),
        base("Ar*", 0.4),
        base("Ca+", 0.1),
        base("Li+", 0.1),
        base("Ba+", 2.5),
    ]
}

/// The sodium D-line doublet with 2:1 line strengths; the documented example
/// line list.
pub fn sodium_doublet() -> Vec<ResonanceLine> {
    vec![
        ResonanceLine::from_wavelength_nm(589.0, 2.0),
        ResonanceLine::from_wavelength_nm(589.6, 1.0),
    ]
}

/// Evaluate one high-intensity row with a user-supplied line list: computed
/// U·τ (cyclic) against the published product.
pub fn high_intensity_row(preset: &HighIntensityPreset, lines: Vec<ResonanceLine>) -> Result<TableRow> {
    if lines.is_empty() {
        return Err(Error::EmptyLineList(preset.species.clone()));
    }
    let beam = LaserBeam::new(preset.laser_wavelength, preset.intensity, preset.waist, 1e-3)?;
    let particle = Particle::new(preset.species.clone(), 10.0 * ATOMIC_MASS_UNIT, 0.0)?
        .with_lines(lines)?;
    let depth = multiline_lightshift(&beam, &particle, FieldAmplitudeConvention::StandingWave)?;
    let tau = interaction_time(preset.waist, preset.velocity)?;
    let product = depth.abs() / PLANCK_H * tau;
    Ok(TableRow::new(
        2,
        preset.species.clone(),
        "lightshift_product_u_tau",
        product,
        preset.published_product,
        "dimensionless",
    ))
}

/// One electron design row.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ElectronDesignRow {
    pub label: &'static str,
    pub wavelength: f64,
    pub intensity: f64,
    pub velocity: f64,
    pub waist: f64,
    /// Published potential rate V_p/ħ (rad/s-scale entry)
    pub published_rate: f64,
    /// Published dimensionless product V_p Δt / ħ
    pub published_product: f64,
}

/// The two proposed electron rows: 1064 nm at 2e6 m/s; the first published
/// column is read as the rate V_p/ħ and the second as the dimensionless
/// product V_p·Δt/ħ (the printed magnitudes only make sense that way).
pub const ELECTRON_DESIGN_ROWS: &[ElectronDesignRow] = &[
    ElectronDesignRow {
        label: "bragg",
        wavelength: 1.064e-6,
        intensity: 1.0e11,
        velocity: 2.0e6,
        waist: 0.5e-2,
        published_rate: 1.0e9,
        published_product: 2.0,
    },
    ElectronDesignRow {
        label: "diffractive",
        wavelength: 1.064e-6,
        intensity: 1.0e13,
        velocity: 2.0e6,
        waist: 0.005e-2,
        published_rate: 1.0e11,
        published_product: 2.0,
    },
];

/// Computed vs published rate and product for the electron design rows.
pub fn electron_design_table() -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for r in ELECTRON_DESIGN_ROWS {
        let beam = LaserBeam::new(r.wavelength, r.intensity, r.waist, 1e-3)?;
        let depth = ponderomotive_depth(&beam, -ELEMENTARY_CHARGE, ELECTRON_MASS)?;
        let dt = interaction_time(r.waist, r.velocity)?;
        rows.push(TableRow::new(
            3,
            r.label,
            "potential_rate_v_over_hbar",
            depth / crate::constants::HBAR,
            r.published_rate,
            "rad/s",
        ));
        rows.push(TableRow::new(
            3,
            r.label,
            "critical_product_v_dt_over_hbar",
            critical_parameter(depth, dt),
            r.published_product,
            "dimensionless",
        ));
    }
    Ok(rows)
}

/// What to reproduce.
#[derive(Debug, Default)]
pub struct TablesRequest {
    pub recoil: bool,
    pub electron_design: bool,
    /// (preset, user line list) pairs for high-intensity rows
    pub high_intensity: Vec<(HighIntensityPreset, Vec<ResonanceLine>)>,
}

/// Row-by-row comparison report; empty request gives an empty report, and a
/// high-intensity row without a line list is an error.
pub fn reproduce_tables(request: &TablesRequest) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    if request.recoil {
        rows.extend(recoil_table()?);
    }
    for (preset, lines) in &request.high_intensity {
        rows.push(high_intensity_row(preset, lines.clone())?);
    }
    if request.electron_design {
        rows.extend(electron_design_table()?);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn empty_request_empty_report() {
        let rows = reproduce_tables(&TablesRequest::default()).unwrap();
        assert!(rows.is_empty());
    }

    #[test]
    fn recoil_rows_close_for_consistent_species() {
        // Na, Ar and Rb reproduce their published entries within 10%; the Li
        // and Cs entries are internally inconsistent in the source (see the
        // acceptance suite output) and are reported, not asserted, here
        let rows = recoil_table().unwrap();
        for species in ["Na", "Ar", "Rb"] {
            let row = rows.iter().find(|r| r.row == species).unwrap();
            assert!(
                (row.ratio - 1.0).abs() < 0.10,
                "{species}: computed {} vs published {} kHz",
                row.computed,
                row.published
            );
        }
        let na = rows.iter().find(|r| r.row == "Na").unwrap();
        assert_relative_eq!(na.computed, 25.0, max_relative = 1e-2);
    }

    #[test]
    fn electron_rows_within_factor_three() {
        let rows = electron_design_table().unwrap();
        assert_eq!(rows.len(), 4);
        for row in &rows {
            assert!(
                row.ratio > 1.0 / 3.0 && row.ratio < 3.0,
                "{} {}: ratio {}",
                row.row,
                row.quantity,
                row.ratio
            );
        }
    }

    #[test]
    fn high_intensity_row_needs_lines() {
        let preset = high_intensity_presets().remove(0);
        assert!(high_intensity_row(&preset, vec![]).is_err());
        let row = high_intensity_row(&preset, sodium_doublet()).unwrap();
        assert!(
            row.ratio > 1.0 / 3.0 && row.ratio < 3.0,
            "Na product ratio {}",
            row.ratio
        );
    }

    #[test]
    fn presets_flag_line_list_requirement() {
        for p in high_intensity_presets() {
            assert!(p.requires_line_list);
        }
    }
}
