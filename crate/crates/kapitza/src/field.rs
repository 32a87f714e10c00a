//! Standing-wave fields and the velocities of charges driven by them.
//!
//! The vector potential is A_z = A0 cos(kx) sin(ωt); the field components
//! follow the sign convention printed with it:
//!
//!   E_z = A0 ω cos(kx) cos(ωt),   B_y = A0 k sin(kx) sin(ωt).
//!
//! E and B oscillate π/2 out of phase in both space and time, so the averaged
//! Poynting vector vanishes, as it must for equal counter-propagating beams.

use serde::{Deserialize, Serialize};

use crate::constants::{ELECTRON_MASS, ELEMENTARY_CHARGE, SPEED_OF_LIGHT, VACUUM_PERMITTIVITY};
use crate::error::{Error, Result};

/// Relative gap |ω² − ω₀²| / max(ω², ω₀²) below which the undamped oscillator
/// model is treated as singular.
pub const RESONANCE_GUARD: f64 = 1e-6;

/// A monochromatic standing wave: vector-potential amplitude, wavenumber,
/// angular frequency with ω = ck enforced on construction from a wavelength.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StandingWave {
    /// Vector-potential amplitude A0 (V·s/m), >= 0
    pub a0: f64,
    /// Wavenumber k (rad/m)
    pub k: f64,
    /// Angular frequency ω = ck (rad/s)
    pub omega: f64,
}

impl StandingWave {
    /// Build from wavelength and vector-potential amplitude; ω = ck.
    pub fn from_wavelength(wavelength: f64, a0: f64) -> Result<Self> {
        if !(wavelength > 0.0) {
            return Err(Error::InvalidInput(format!(
                "wavelength must be > 0, got {wavelength}"
            )));
        }
        if a0 < 0.0 {
            return Err(Error::InvalidInput(format!("A0 must be >= 0, got {a0}")));
        }
        let k = 2.0 * std::f64::consts::PI / wavelength;
        Ok(Self {
            a0,
            k,
            omega: SPEED_OF_LIGHT * k,
        })
    }

    /// Build from wavelength and intensity via A0 = sqrt(2I/(ε0 c ω²)).
    pub fn from_intensity(wavelength: f64, intensity: f64) -> Result<Self> {
        let mut sw = Self::from_wavelength(wavelength, 0.0)?;
        sw.a0 = amplitude_from_intensity(intensity, sw.omega)?;
        Ok(sw)
    }

    /// Electric-field amplitude E0 = A0 ω of the standing wave.
    pub fn e0(&self) -> f64 {
        self.a0 * self.omega
    }
}

/// A laser beam characterized the way the design tables do it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaserBeam {
    /// Wavelength (m)
    pub wavelength: f64,
    /// Intensity (W/m²)
    pub intensity: f64,
    /// Beam waist along the particle flight direction (m)
    pub waist: f64,
    /// Beam height (m)
    pub height: f64,
}

impl LaserBeam {
    pub fn new(wavelength: f64, intensity: f64, waist: f64, height: f64) -> Result<Self> {
        if !(wavelength > 0.0) || !(waist > 0.0) || !(height > 0.0) {
            return Err(Error::InvalidInput(format!(
                "wavelength, waist and height must be > 0 (got {wavelength}, {waist}, {height})"
            )));
        }
        if intensity < 0.0 {
            return Err(Error::InvalidInput(format!(
                "intensity must be >= 0, got {intensity}"
            )));
        }
        Ok(Self {
            wavelength,
            intensity,
            waist,
            height,
        })
    }

    pub fn standing_wave(&self) -> StandingWave {
        // preconditions were checked in new(); from_intensity cannot fail here
        StandingWave::from_intensity(self.wavelength, self.intensity)
            .expect("valid beam produces valid standing wave")
    }
}

/// Electric and magnetic field of the standing wave at (x, t).
pub fn fields_at(sw: &StandingWave, x: f64, t: f64) -> (f64, f64) {
    let e_z = sw.a0 * sw.omega * (sw.k * x).cos() * (sw.omega * t).cos();
    let b_y = sw.a0 * sw.k * (sw.k * x).sin() * (sw.omega * t).sin();
    (e_z, b_y)
}

/// A0 = sqrt(2 I / (ε0 c ω²)), inverting I = ½ ε0 c ω² A0².
pub fn amplitude_from_intensity(intensity: f64, omega: f64) -> Result<f64> {
    if intensity < 0.0 {
        return Err(Error::InvalidInput(format!(
            "intensity must be >= 0, got {intensity}"
        )));
    }
    if !(omega > 0.0) {
        return Err(Error::InvalidInput(format!(
            "omega must be > 0, got {omega}"
        )));
    }
    Ok((2.0 * intensity / (VACUUM_PERMITTIVITY * SPEED_OF_LIGHT * omega * omega)).sqrt())
}

/// Driven velocity of a free electron in the standing wave:
/// v_z = (e A0 / m) cos(kx) sin(ωt), in phase with B_y.
pub fn free_electron_velocity(sw: &StandingWave, x: f64, t: f64) -> f64 {
    ELEMENTARY_CHARGE * sw.a0 / ELECTRON_MASS * (sw.k * x).cos() * (sw.omega * t).sin()
}

/// Driven velocity of a charge bound by a spring of resonance ω₀, released
/// from rest at t = 0:
///
/// v_z = (q E0 / m) (ω sin ωt − ω₀ sin ω₀t) / (ω² − ω₀²) · cos kx
///
/// The ω₀ → 0 limit reproduces the free-charge velocity. On resonance the
/// undamped model diverges; inputs inside the guard band are rejected.
pub fn bound_charge_velocity(
    sw: &StandingWave,
    omega0: f64,
    charge: f64,
    mass: f64,
    x: f64,
    t: f64,
) -> Result<f64> {
    check_resonance_guard(sw.omega, omega0)?;
    if !(mass > 0.0) {
        return Err(Error::InvalidInput(format!("mass must be > 0, got {mass}")));
    }
    let denom = sw.omega * sw.omega - omega0 * omega0;
    let drive = charge * sw.e0() / mass;
    let oscillation = sw.omega * (sw.omega * t).sin() - omega0 * (omega0 * t).sin();
    Ok(drive * oscillation / denom * (sw.k * x).cos())
}

/// Reject drive frequencies within the default guard band of a resonance.
pub fn check_resonance_guard(omega: f64, omega0: f64) -> Result<()> {
    check_resonance_guard_with(omega, omega0, RESONANCE_GUARD)
}

/// Reject drive frequencies within a caller-chosen guard band.
pub fn check_resonance_guard_with(omega: f64, omega0: f64, guard: f64) -> Result<()> {
    let scale = (omega * omega).max(omega0 * omega0);
    if scale == 0.0 {
        return Err(Error::InvalidInput(
            "omega and omega0 cannot both be zero".into(),
        ));
    }
    if (omega * omega - omega0 * omega0).abs() < guard * scale {
        return Err(Error::OnResonance { omega, omega0 });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn test_wave() -> StandingWave {
        StandingWave::from_intensity(1.064e-6, 1.0e11).unwrap()
    }

    #[test]
    fn omega_equals_ck() {
        let sw = test_wave();
        assert_relative_eq!(sw.omega, SPEED_OF_LIGHT * sw.k, max_relative = 1e-15);
    }

    #[test]
    fn amplitude_at_1064nm_100gw() {
        // sqrt(2 I / (eps0 c omega^2)) for I = 1e11 W/m^2, lambda = 1064 nm
        let sw = test_wave();
        assert_relative_eq!(sw.a0, 4.9032e-9, max_relative = 1e-4);
    }

    #[test]
    fn amplitude_limits() {
        assert_eq!(amplitude_from_intensity(0.0, 1.0e15).unwrap(), 0.0);
        assert!(amplitude_from_intensity(1.0, 0.0).is_err());
        // quadrupling I doubles A0
        let a1 = amplitude_from_intensity(1.0e10, 1.0e15).unwrap();
        let a4 = amplitude_from_intensity(4.0e10, 1.0e15).unwrap();
        assert_relative_eq!(a4, 2.0 * a1, max_relative = 1e-14);
    }

    #[test]
    fn field_nodes_and_phases() {
        let sw = test_wave();
        // B vanishes at x = 0 for any t
        for &t in &[0.0, 1.3e-16, 7.7e-15] {
            let (_, b) = fields_at(&sw, 0.0, t);
            assert_eq!(b, 0.0);
        }
        // at t = 0: B = 0 everywhere, E = A0 omega cos kx
        for &x in &[0.0, 1.0e-7, 3.3e-7] {
            let (e, b) = fields_at(&sw, x, 0.0);
            assert_eq!(b, 0.0);
            assert_relative_eq!(e, sw.a0 * sw.omega * (sw.k * x).cos(), max_relative = 1e-14);
        }
    }

    #[test]
    fn quarter_shifts_swap_field_roles() {
        // E and B are pi/2 out of phase in both x and t: shifting both
        // coordinates by a quarter period maps |E| onto |B|·(omega/k) and back
        let sw = test_wave();
        let (x, t) = (0.83e-7, 2.9e-16);
        let (e1, b1) = fields_at(&sw, x, t);
        let (e2, b2) = fields_at(&sw, x + PI / (2.0 * sw.k), t + PI / (2.0 * sw.omega));
        assert_relative_eq!(e2.abs() / sw.omega, b1.abs() / sw.k, max_relative = 1e-12);
        assert_relative_eq!(b2.abs() * sw.omega / sw.k, e1.abs(), max_relative = 1e-12);
    }

    #[test]
    fn free_velocity_basics() {
        let sw = test_wave();
        for &x in &[0.0, 1.0e-7, 2.0e-7] {
            assert_eq!(free_electron_velocity(&sw, x, 0.0), 0.0);
        }
        // peak |v_z| = e A0 / m at cos kx = +-1
        let peak = ELEMENTARY_CHARGE * sw.a0 / ELECTRON_MASS;
        let quarter = PI / (2.0 * sw.omega);
        assert_relative_eq!(free_electron_velocity(&sw, 0.0, quarter), peak, max_relative = 1e-12);
    }

    #[test]
    fn velocity_in_phase_with_b_field_time_average() {
        // <v_z B_y> over one period is nonzero off the field nodes
        let sw = test_wave();
        let period = 2.0 * PI / sw.omega;
        let n = 4096;
        let x = 0.3 * PI / sw.k; // off node and antinode
        let mut avg = 0.0;
        for i in 0..n {
            let t = (i as f64 + 0.5) / n as f64 * period;
            let (_, b) = fields_at(&sw, x, t);
            avg += free_electron_velocity(&sw, x, t) * b;
        }
        avg /= n as f64;
        let scale = ELEMENTARY_CHARGE * sw.a0 / ELECTRON_MASS * sw.a0 * sw.k;
        assert!(avg.abs() > 0.1 * scale, "Lorentz product should not average out");
    }

    #[test]
    fn bound_velocity_limits() {
        let sw = test_wave();
        let (q, m) = (-ELEMENTARY_CHARGE, ELECTRON_MASS);
        // starts from rest
        let v0 = bound_charge_velocity(&sw, 0.5 * sw.omega, q, m, 1.0e-7, 0.0).unwrap();
        assert_eq!(v0, 0.0);
        // omega0 -> 0 recovers the free-electron driven term (for charge -e the
        // magnitude matches Eq-2's e-magnitude form)
        let t = 3.7e-16;
        let x = 0.2e-7;
        let v_free = free_electron_velocity(&sw, x, t);
        let v_bound = bound_charge_velocity(&sw, 1e-8 * sw.omega, q, m, x, t).unwrap();
        assert_relative_eq!(v_bound.abs(), v_free.abs(), max_relative = 1e-6);
        // inside the guard band: error
        let near = sw.omega * (1.0 + 1e-9);
        assert!(matches!(
            bound_charge_velocity(&sw, near, q, m, x, t),
            Err(Error::OnResonance { .. })
        ));
    }
}
