//! Interferometer figures of merit: Sagnac rotation sensing and the
//! transit-time bound on molecule size.

use serde::{Deserialize, Serialize};

use crate::constants::{EARTH_ROTATION, PLANCK_H};
use crate::error::{Error, Result};

/// A three-grating Mach-Zehnder rotation sensor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SagnacConfig {
    /// Reciprocal grating vector length k_g (rad/m)
    pub grating_k: f64,
    /// Grating separation L (m)
    pub length: f64,
    /// Particle velocity v (m/s)
    pub velocity: f64,
    /// Fringe contrast C in (0, 1]
    pub contrast: f64,
    /// Detected count rate n (1/s)
    pub count_rate: f64,
}

impl SagnacConfig {
    pub fn new(grating_k: f64, length: f64, velocity: f64, contrast: f64, count_rate: f64) -> Result<Self> {
        if !(grating_k > 0.0 && length > 0.0 && velocity > 0.0) {
            return Err(Error::InvalidInput(format!(
                "grating_k, length and velocity must be > 0 (got {grating_k}, {length}, {velocity})"
            )));
        }
        if !(contrast > 0.0 && contrast <= 1.0) {
            return Err(Error::InvalidInput(format!(
                "contrast must be in (0, 1], got {contrast}"
            )));
        }
        if !(count_rate > 0.0) {
            return Err(Error::InvalidInput(format!(
                "count rate must be > 0, got {count_rate}"
            )));
        }
        Ok(Self {
            grating_k,
            length,
            velocity,
            contrast,
            count_rate,
        })
    }
}

/// Rotation resolution R = k_g L² / v: fringe phase per unit angular velocity,
/// in seconds.
pub fn sagnac_resolution(cfg: &SagnacConfig) -> f64 {
    cfg.grating_k * cfg.length * cfg.length / cfg.velocity
}

/// Shot-noise rotation sensitivity.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SagnacSensitivity {
    /// S = (R C sqrt(n))⁻¹ in rad/s per sqrt(Hz)
    pub sensitivity: f64,
    /// The same value normalized to the earth's rotation, in Ω_e·s^(1/2):
    /// 1 means the earth's rotation is resolvable in one second
    pub in_earth_rotations: f64,
}

pub fn sagnac_sensitivity(cfg: &SagnacConfig) -> SagnacSensitivity {
    let r = sagnac_resolution(cfg);
    let s = 1.0 / (r * cfg.contrast * cfg.count_rate.sqrt());
    SagnacSensitivity {
        sensitivity: s,
        in_earth_rotations: s / EARTH_ROTATION,
    }
}

/// Transit time for which a particle of density ρ and size s can still be
/// diffracted cleanly: τ = (ρ s³)·s²/h, i.e. mass times size squared over h.
/// (The compact form ρs²/h is dimensionally short a mass; the mass·s²/h
/// reading reproduces the quoted thousand-atom bound.)
pub fn molecule_transit_bound(density: f64, size: f64) -> Result<f64> {
    if !(density > 0.0 && size > 0.0) {
        return Err(Error::InvalidInput(format!(
            "density and size must be > 0 (got {density}, {size})"
        )));
    }
    Ok(density * size.powi(5) / PLANCK_H)
}

/// Inverse of [`molecule_transit_bound`]: largest particle size whose transit
/// bound does not exceed τ.
pub fn size_for_transit(density: f64, transit: f64) -> Result<f64> {
    if !(density > 0.0 && transit > 0.0) {
        return Err(Error::InvalidInput(format!(
            "density and transit must be > 0 (got {density}, {transit})"
        )));
    }
    Ok((transit * PLANCK_H / density).powf(0.2))
}
