//! Physical constants (SI) and frequency conventions.
//!
//! All internal math works with angular frequencies (rad/s); table-facing
//! output converts to cyclic (Hz). CODATA-style values, 9 significant digits.

use std::f64::consts::PI;

/// Planck constant (J·s), exact by SI definition
pub const PLANCK_H: f64 = 6.62607015e-34;

/// Reduced Planck constant (J·s), h/2π to machine precision
pub const HBAR: f64 = PLANCK_H / (2.0 * PI);

/// Electron mass (kg)
pub const ELECTRON_MASS: f64 = 9.10938370e-31;

/// Elementary charge (C), exact by SI definition
pub const ELEMENTARY_CHARGE: f64 = 1.602176634e-19;

/// Vacuum permittivity (F/m)
pub const VACUUM_PERMITTIVITY: f64 = 8.85418781e-12;

/// Speed of light in vacuum (m/s), exact
pub const SPEED_OF_LIGHT: f64 = 2.99792458e8;

/// Atomic mass unit (kg)
pub const ATOMIC_MASS_UNIT: f64 = 1.66053907e-27;

/// Earth's rotation rate (rad/s), at the precision quoted in rotation-sensor
/// work; the true sidereal rate is ≈ 7.29e-5 rad/s.
pub const EARTH_ROTATION: f64 = 7.0e-5;

/// One electron-volt (J)
pub const EV: f64 = 1.602176634e-19;

/// Frequency bookkeeping: angular (rad/s) vs cyclic (Hz).
///
/// Conversions are exact multiplications by 2π. Every table-facing output
/// states which convention its numbers use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FrequencyConvention {
    /// rad/s
    Angular,
    /// Hz
    Cyclic,
}

/// Convert a cyclic frequency (Hz) to angular (rad/s).
pub fn cyclic_to_angular(f: f64) -> f64 {
    2.0 * PI * f
}

/// Convert an angular frequency (rad/s) to cyclic (Hz).
pub fn angular_to_cyclic(omega: f64) -> f64 {
    omega / (2.0 * PI)
}
