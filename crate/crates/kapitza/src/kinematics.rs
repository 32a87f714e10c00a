//! Non-relativistic beam kinematics: velocities, de Broglie wavelengths,
//! recoil frequencies, interaction times.

use std::f64::consts::PI;

use crate::constants::{HBAR, PLANCK_H};
use crate::error::{Error, Result};

/// v = sqrt(2E/m) for kinetic energy E (J) and mass m (kg).
pub fn velocity_from_kinetic_energy(energy: f64, mass: f64) -> Result<f64> {
    if energy < 0.0 {
        return Err(Error::InvalidInput(format!(
            "kinetic energy must be >= 0, got {energy}"
        )));
    }
    if !(mass > 0.0) {
        return Err(Error::InvalidInput(format!("mass must be > 0, got {mass}")));
    }
    Ok((2.0 * energy / mass).sqrt())
}

/// de Broglie wavelength h/(mv).
pub fn de_broglie_wavelength(mass: f64, velocity: f64) -> Result<f64> {
    if !(mass > 0.0) {
        return Err(Error::InvalidInput(format!("mass must be > 0, got {mass}")));
    }
    if !(velocity > 0.0) {
        return Err(Error::InvalidInput(format!(
            "wavelength undefined for velocity {velocity}"
        )));
    }
    Ok(PLANCK_H / (mass * velocity))
}

/// Recoil frequency ε = ħk²/2m (rad/s) for the optical wavelength λ.
///
/// This is the kinetic energy, in units of ħ, of one photon recoil ħk.
pub fn recoil_frequency(mass: f64, optical_wavelength: f64) -> Result<f64> {
    if !(mass > 0.0) {
        return Err(Error::InvalidInput(format!("mass must be > 0, got {mass}")));
    }
    if !(optical_wavelength > 0.0) {
        return Err(Error::InvalidInput(format!(
            "wavelength must be > 0, got {optical_wavelength}"
        )));
    }
    let k = 2.0 * PI / optical_wavelength;
    Ok(HBAR * k * k / (2.0 * mass))
}

/// Interaction time Δt = w/v for beam waist w and longitudinal velocity v.
pub fn interaction_time(waist: f64, velocity: f64) -> Result<f64> {
    if waist < 0.0 {
        return Err(Error::InvalidInput(format!("waist must be >= 0, got {waist}")));
    }
    if !(velocity > 0.0) {
        return Err(Error::InvalidInput(format!(
            "velocity must be > 0, got {velocity}"
        )));
    }
    Ok(waist / velocity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{ELECTRON_MASS, EV};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn electron_10ev_velocity() {
        // sqrt(2 * 10 eV / m_e) = 1.8755e6 m/s
        let v = velocity_from_kinetic_energy(10.0 * EV, ELECTRON_MASS).unwrap();
        assert_relative_eq!(v, 1.8755e6, max_relative = 1e-4);
        // within 10% of the electron design point v = 2e6 m/s
        assert!((v - 2.0e6).abs() / 2.0e6 < 0.10);
    }

    #[test]
    fn zero_energy_zero_velocity() {
        assert_eq!(velocity_from_kinetic_energy(0.0, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn velocity_rejects_bad_inputs() {
        assert!(velocity_from_kinetic_energy(-1.0, 1.0).is_err());
        assert!(velocity_from_kinetic_energy(1.0, 0.0).is_err());
    }

    #[test]
    fn electron_de_broglie() {
        let v = velocity_from_kinetic_energy(10.0 * EV, ELECTRON_MASS).unwrap();
        let l = de_broglie_wavelength(ELECTRON_MASS, v).unwrap();
        assert_relative_eq!(l, 3.8783e-10, max_relative = 1e-4);
    }

    #[test]
    fn de_broglie_inverse_in_velocity() {
        let l1 = de_broglie_wavelength(ELECTRON_MASS, 1.0e6).unwrap();
        let l2 = de_broglie_wavelength(ELECTRON_MASS, 2.0e6).unwrap();
        assert_relative_eq!(l1, 2.0 * l2, max_relative = 1e-14);
        assert!(de_broglie_wavelength(ELECTRON_MASS, 0.0).is_err());
    }

    #[test]
    fn transverse_de_broglie_matches_half_optical_wavelength() {
        // v_t = 2 hbar k / m  =>  lambda_dB = lambda_opt / 2, exactly
        let lambda_opt = 1.064e-6;
        let k = 2.0 * PI / lambda_opt;
        for &m in &[ELECTRON_MASS, 3.8e-26, 2.2e-25] {
            let vt = 2.0 * HBAR * k / m;
            let l = de_broglie_wavelength(m, vt).unwrap();
            assert_relative_eq!(l, lambda_opt / 2.0, max_relative = 1e-15);
        }
    }

    #[test]
    fn sodium_and_argon_recoil() {
        use crate::constants::ATOMIC_MASS_UNIT;
        // Na at 589 nm: 2 pi x 25.0 kHz, within 10% of the reported 24 kHz
        let na = recoil_frequency(22.98977 * ATOMIC_MASS_UNIT, 589e-9).unwrap();
        assert_relative_eq!(na / (2.0 * PI), 25.0e3, max_relative = 2e-3);
        assert!((na / (2.0 * PI) - 24.0e3).abs() / 24.0e3 < 0.10);
        // Ar at 811 nm: 2 pi x 7.59 kHz, within 5% of the reported 7.5 kHz
        let ar = recoil_frequency(39.96238 * ATOMIC_MASS_UNIT, 811e-9).unwrap();
        assert_relative_eq!(ar / (2.0 * PI), 7.59e3, max_relative = 2e-3);
        assert!((ar / (2.0 * PI) - 7.5e3).abs() / 7.5e3 < 0.05);
    }

    #[test]
    fn electron_recoil_at_1064nm() {
        let eps = recoil_frequency(ELECTRON_MASS, 1.064e-6).unwrap();
        assert_relative_eq!(eps, 2.0185e9, max_relative = 1e-4);
    }

    #[test]
    fn interaction_times_for_design_rows() {
        assert_relative_eq!(
            interaction_time(0.5e-2, 2.0e6).unwrap(),
            2.5e-9,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            interaction_time(0.005e-2, 2.0e6).unwrap(),
            2.5e-11,
            max_relative = 1e-15
        );
        assert_eq!(interaction_time(0.0, 1.0).unwrap(), 0.0);
        assert!(interaction_time(1.0, 0.0).is_err());
        assert!(interaction_time(1.0, -2.0).is_err());
    }

    proptest! {
        #[test]
        fn velocity_and_wavelength_compose(
            m in 1e-31f64..1e-24,
            e in 1e-25f64..1e-14,
        ) {
            // lambda_dB = h / sqrt(2 m E) by direct algebra
            let v = velocity_from_kinetic_energy(e, m).unwrap();
            let l = de_broglie_wavelength(m, v).unwrap();
            let direct = PLANCK_H / (2.0 * m * e).sqrt();
            prop_assert!((l - direct).abs() / direct < 1e-12);
        }

        #[test]
        fn recoil_scales_inverse_mass_and_wavelength_squared(
            m in 1e-31f64..1e-24,
            lam in 1e-7f64..2e-6,
            fm in 1.1f64..10.0,
            fl in 1.1f64..10.0,
        ) {
            let base = recoil_frequency(m, lam).unwrap();
            let scaled_m = recoil_frequency(m * fm, lam).unwrap();
            let scaled_l = recoil_frequency(m, lam * fl).unwrap();
            prop_assert!((scaled_m * fm - base).abs() / base < 1e-12);
            prop_assert!((scaled_l * fl * fl - base).abs() / base < 1e-12);
        }
    }
}
