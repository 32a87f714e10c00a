//! Deterministic CSV and JSON writers.
//!
//! Every file is self-describing: CSV carries the convention flags as `#`
//! comment lines, JSON metadata embeds them alongside the fully resolved
//! configuration. Numbers use '.' decimals and scientific notation with nine
//! significant digits, so identical runs produce byte-identical files.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::Result;

/// The convention choices a result depends on, embedded in every output.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConventionFlags {
    /// Frequency convention of internal math; table-facing values state their
    /// own units per column
    pub internal_frequencies: &'static str,
    /// Argument convention of the closed-form Bessel solution
    pub bessel_argument: &'static str,
    /// Which field amplitude enters lightshift depths
    pub field_amplitude: &'static str,
    /// The depth is the coefficient of cos²kx: −¼αE₀², not the −½αE² of the
    /// energy argument
    pub lightshift_depth: &'static str,
}

impl Default for ConventionFlags {
    fn default() -> Self {
        Self {
            internal_frequencies: "angular_rad_per_s",
            bessel_argument: "v0_t_over_2hbar",
            field_amplitude: "standing_wave_e0",
            lightshift_depth: "quarter_alpha_e0sq_cos2kx",
        }
    }
}

impl ConventionFlags {
    /// The flags as CSV comment lines.
    pub fn csv_comments(&self) -> Vec<String> {
        vec![
            format!("# internal_frequencies: {}", self.internal_frequencies),
            format!("# bessel_argument: {}", self.bessel_argument),
            format!("# field_amplitude: {}", self.field_amplitude),
            format!("# lightshift_depth: {}", self.lightshift_depth),
        ]
    }
}

/// Nine-significant-digit scientific formatting, locale-free.
pub fn fmt_sci(x: f64) -> String {
    format!("{x:.8e}")
}

/// Write a CSV file: convention comments, a header row, then data rows.
pub fn write_csv<P: AsRef<Path>>(
    path: P,
    flags: &ConventionFlags,
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> Result<()> {
    let mut buf = String::new();
    for line in flags.csv_comments() {
        buf.push_str(&line);
        buf.push('\n');
    }
    buf.push_str(&header.join(","));
    buf.push('\n');
    for row in rows {
        buf.push_str(&row.join(","));
        buf.push('\n');
    }
    let mut file = std::fs::File::create(path)?;
    file.write_all(buf.as_bytes())?;
    Ok(())
}

/// Run metadata written next to every result.
#[derive(Debug, Serialize)]
pub struct RunMeta<C: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub conventions: ConventionFlags,
    /// The fully resolved configuration that produced the outputs
    pub config: C,
}

impl<C: Serialize> RunMeta<C> {
    pub fn new(config: C) -> Self {
        Self {
            tool: "kapitza",
            version: env!("CARGO_PKG_VERSION"),
            conventions: ConventionFlags::default(),
            config,
        }
    }

    pub fn write<P: AsRef<Path>>(&self, path: P) -> Result<()> {
        let mut file = std::fs::File::create(path)?;
        let text = serde_json::to_string_pretty(self)?;
        file.write_all(text.as_bytes())?;
        file.write_all(b"\n")?;
        Ok(())
    }
}
