//! Particles: who is being diffracted.
//!
//! A particle carries a mass, a charge, and optionally a list of resonance
//! lines (angular frequency, weight) used for lightshift sums. A free
//! electron has an empty line list; its "resonance" sits at ω₀ → 0 and the
//! ponderomotive potential applies instead.

use serde::{Deserialize, Serialize};

use crate::constants::{ATOMIC_MASS_UNIT, ELECTRON_MASS, ELEMENTARY_CHARGE, SPEED_OF_LIGHT};
use crate::error::{Error, Result};

/// One resonance line: angular frequency and dimensionless weight.
///
/// Weights carry the relative strength (and, through the detuning sign, the
/// relative sign) of each line's contribution to the summed lightshift.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResonanceLine {
    /// Resonance angular frequency ω₀ (rad/s)
    pub omega0: f64,
    /// Relative line weight (> 0)
    pub weight: f64,
}

impl ResonanceLine {
    pub fn from_wavelength_nm(wavelength_nm: f64, weight: f64) -> Self {
        let omega0 = 2.0 * std::f64::consts::PI * SPEED_OF_LIGHT / (wavelength_nm * 1e-9);
        Self { omega0, weight }
    }
}

/// A particle species: mass, charge, optional resonance lines.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Particle {
    pub name: String,
    /// Mass (kg), > 0
    pub mass: f64,
    /// Charge (C); sign is physical, potentials depend on q²
    pub charge: f64,
    /// Resonance lines for lightshift sums; empty for free charges
    #[serde(default)]
    pub lines: Vec<ResonanceLine>,
}

impl Particle {
    pub fn new(name: impl Into<String>, mass: f64, charge: f64) -> Result<Self> {
        if !(mass > 0.0) {
            return Err(Error::InvalidInput(format!("mass must be > 0, got {mass}")));
        }
        Ok(Self {
            name: name.into(),
            mass,
            charge,
            lines: Vec::new(),
        })
    }

    pub fn with_lines(mut self, lines: Vec<ResonanceLine>) -> Result<Self> {
        for line in &lines {
            if !(line.weight > 0.0) || !(line.omega0 > 0.0) {
                return Err(Error::InvalidInput(format!(
                    "resonance lines need omega0 > 0 and weight > 0, got {line:?}"
                )));
            }
        }
        self.lines = lines;
        Ok(self)
    }

    /// Free electron, empty line list.
    pub fn electron() -> Self {
        Self {
            name: "electron".into(),
            mass: ELECTRON_MASS,
            charge: -ELEMENTARY_CHARGE,
            lines: Vec::new(),
        }
    }

    /// Neutral atom of the given isotopic mass in u, no lines attached.
    pub fn atom(name: impl Into<String>, mass_u: f64) -> Self {
        Self {
            name: name.into(),
            mass: mass_u * ATOMIC_MASS_UNIT,
            charge: 0.0,
            lines: Vec::new(),
        }
    }
}

/// Builtin species. Masses are the dominant-isotope masses in u.
pub const BUILTIN_ATOMS: &[(&str, f64)] = &[
    ("Na", 22.98977),
    ("Ne", 19.99244),
    ("Ar", 39.96238),
    ("Cs", 132.90545),
    ("Li", 7.01600),
    ("Rb", 86.90918),
    ("Cr", 51.94051),
];

/// Look a builtin particle up by name (case-sensitive; "electron" or an atom).
pub fn builtin(name: &str) -> Option<Particle> {
    if name == "electron" {
        return Some(Particle::electron());
    }
    BUILTIN_ATOMS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|&(n, m)| Particle::atom(n, m))
}

/// Names of all builtin particles.
pub fn builtin_names() -> Vec<&'static str> {
    let mut names = vec!["electron"];
    names.extend(BUILTIN_ATOMS.iter().map(|(n, _)| *n));
    names
}

/// One record of a line-list file.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineRecord {
    pub wavelength_nm: f64,
    pub weight: f64,
}

/// Parse a line list from a string in the plain-text format: one
/// `wavelength_nm weight` pair per line, `#` starts a comment.
pub fn parse_line_list_text(text: &str) -> Result<Vec<ResonanceLine>> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let row = raw.split('#').next().unwrap_or("").trim();
        if row.is_empty() {
            continue;
        }
        let mut it = row.split_whitespace();
        let (Some(wl), Some(w)) = (it.next(), it.next()) else {
            return Err(Error::InvalidInput(format!(
                "line {}: expected 'wavelength_nm weight', got '{row}'",
                i + 1
            )));
        };
        if it.next().is_some() {
            return Err(Error::InvalidInput(format!(
                "line {}: trailing fields in '{row}'",
                i + 1
            )));
        }
        let wl: f64 = wl
            .parse()
            .map_err(|_| Error::InvalidInput(format!("line {}: bad wavelength '{wl}'", i + 1)))?;
        let w: f64 = w
            .parse()
            .map_err(|_| Error::InvalidInput(format!("line {}: bad weight '{w}'", i + 1)))?;
        push_checked(&mut lines, wl, w, i + 1)?;
    }
    Ok(lines)
}

/// Parse a line list from a JSON array of `{"wavelength_nm": .., "weight": ..}`.
pub fn parse_line_list_json(text: &str) -> Result<Vec<ResonanceLine>> {
    let records: Vec<LineRecord> = serde_json::from_str(text)?;
    let mut lines = Vec::new();
    for (i, r) in records.iter().enumerate() {
        push_checked(&mut lines, r.wavelength_nm, r.weight, i + 1)?;
    }
    Ok(lines)
}

/// Load a line list from a file; `.json` selects the JSON format, anything
/// else the plain-text format.
pub fn load_line_list(path: &std::path::Path) -> Result<Vec<ResonanceLine>> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().and_then(|e| e.to_str()) == Some("json") {
        parse_line_list_json(&text)
    } else {
        parse_line_list_text(&text)
    }
}

fn push_checked(out: &mut Vec<ResonanceLine>, wl_nm: f64, weight: f64, row: usize) -> Result<()> {
    if !(wl_nm > 0.0) {
        return Err(Error::InvalidInput(format!(
            "record {row}: wavelength must be > 0 nm, got {wl_nm}"
        )));
    }
    if !(weight > 0.0) {
        return Err(Error::InvalidInput(format!(
            "record {row}: weight must be > 0, got {weight}"
        )));
    }
    out.push(ResonanceLine::from_wavelength_nm(wl_nm, weight));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn electron_builtin() {
        let e = builtin("electron").unwrap();
        assert!((e.mass - 9.109e-31).abs() / e.mass < 1e-3);
        assert!(e.lines.is_empty());
        assert!(e.charge < 0.0);
    }

    #[test]
    fn unknown_builtin() {
        assert!(builtin("unobtainium").is_none());
    }

    #[test]
    fn rejects_nonpositive_mass() {
        assert!(Particle::new("x", 0.0, 0.0).is_err());
        assert!(Particle::new("x", -1.0, 0.0).is_err());
    }

    #[test]
    fn text_line_list_round_trip() {
        let text = "# Na D lines\n589.0 2.0\n589.6 1.0  # D1\n";
        let lines = parse_line_list_text(text).unwrap();
        assert_eq!(lines.len(), 2);
        // 589 nm -> 2 pi c / lambda ~ 3.198e15 rad/s
        assert!((lines[0].omega0 - 3.198e15).abs() / lines[0].omega0 < 1e-3);
        assert!((lines[0].weight - 2.0).abs() < 1e-15);
    }

    #[test]
    fn json_line_list() {
        let text = r#"[{"wavelength_nm": 589.0, "weight": 2.0}, {"wavelength_nm": 589.6, "weight": 1.0}]"#;
        let lines = parse_line_list_json(text).unwrap();
        assert_eq!(lines.len(), 2);
        assert!(lines[1].omega0 < lines[0].omega0);
    }

    #[test]
    fn line_list_rejects_bad_records() {
        assert!(parse_line_list_text("589.0").is_err());
        assert!(parse_line_list_text("589.0 -1.0").is_err());
        assert!(parse_line_list_text("0 1.0").is_err());
        assert!(parse_line_list_json(r#"[{"wavelength_nm": 589.0, "weight": 1.0, "oops": 1}]"#).is_err());
    }
}
