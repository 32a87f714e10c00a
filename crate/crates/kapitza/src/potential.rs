//! The two interaction potentials and their temporal envelopes.
//!
//! Both potentials multiply cos²(kx). For a free charge the averaged Lorentz
//! force yields the ponderomotive depth V_p = q²A0²/4m = q²I/(2 ε0 c m ω²);
//! for a bound charge it yields the signed lightshift depth
//! V_L = ¼ (q²/m) E0² / (ω² − ω0²), i.e. V_L = −¼ α E0² with the classical
//! polarisability α = (q²/m)/(ω0² − ω²). The depth here is always quoted as
//! the coefficient of cos²kx; the energy-argument convention −½αE² differs by
//! a factor of two and is recorded in output metadata rather than silently
//! mixed in.

use serde::{Deserialize, Serialize};

use crate::constants::{SPEED_OF_LIGHT, VACUUM_PERMITTIVITY};
use crate::error::{Error, Result};
use crate::field::{check_resonance_guard, LaserBeam};
use crate::particle::Particle;

/// Which electric-field amplitude enters E0² in the lightshift formula.
///
/// `StandingWave` (default) uses the full standing-wave amplitude E0 = A0·ω
/// of the field expressions; `TravellingPerBeam` uses the per-beam amplitude
/// E0/2, which lowers depths by a factor of four.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldAmplitudeConvention {
    #[default]
    StandingWave,
    TravellingPerBeam,
}

/// Temporal envelope of the potential as the particle crosses the beam.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Envelope {
    /// Constant depth for a duration Δt, zero outside [0, Δt].
    Rectangular { duration: f64 },
    /// V0 · exp(−2 (t − t_peak)² / Δt²) with transit time Δt = w/v; the
    /// simulated window is [0, 6Δt] with the peak at 3Δt.
    Gaussian { transit: f64 },
}

impl Envelope {
    /// Multiplier on V0 at time t.
    pub fn value(&self, t: f64) -> f64 {
        match *self {
            Envelope::Rectangular { duration } => {
                if (0.0..=duration).contains(&t) {
                    1.0
                } else {
                    0.0
                }
            }
            Envelope::Gaussian { transit } => {
                let u = (t - 3.0 * transit) / transit;
                (-2.0 * u * u).exp()
            }
        }
    }

    /// Total simulated window.
    pub fn total_time(&self) -> f64 {
        match *self {
            Envelope::Rectangular { duration } => duration,
            Envelope::Gaussian { transit } => 6.0 * transit,
        }
    }

    /// Time integral of the envelope: Δt for rectangular,
    /// sqrt(π/2)·Δt for the Gaussian.
    pub fn time_integral(&self) -> f64 {
        match *self {
            Envelope::Rectangular { duration } => duration,
            Envelope::Gaussian { transit } => (std::f64::consts::PI / 2.0).sqrt() * transit,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let dt = match *self {
            Envelope::Rectangular { duration } => duration,
            Envelope::Gaussian { transit } => transit,
        };
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(Error::InvalidInput(format!(
                "envelope duration must be positive and finite, got {dt}"
            )));
        }
        Ok(())
    }
}

/// Kind of sinusoidal potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PotentialKind {
    Ponderomotive,
    Lightshift,
}

/// A sinusoidal potential sign · V0 · cos²(kx) with a temporal envelope.
///
/// The spatial period is π/k = λ_opt/2. The depth is kept non-negative with
/// the sign carried separately.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    /// Depth V0 (J), >= 0
    pub depth: f64,
    /// Optical wavenumber k (rad/m); the potential period is π/k
    pub k: f64,
    pub kind: PotentialKind,
    pub envelope: Envelope,
    /// +1 or -1
    pub sign: f64,
}

impl PotentialSpec {
    pub fn new(depth: f64, k: f64, kind: PotentialKind, envelope: Envelope) -> Result<Self> {
        envelope.validate()?;
        if !(k > 0.0) {
            return Err(Error::InvalidInput(format!("wavenumber must be > 0, got {k}")));
        }
        if !depth.is_finite() {
            return Err(Error::InvalidInput(format!("depth must be finite, got {depth}")));
        }
        // carry any sign of the supplied depth separately
        Ok(Self {
            depth: depth.abs(),
            k,
            kind,
            envelope,
            sign: if depth < 0.0 { -1.0 } else { 1.0 },
        })
    }

    /// From a signed lightshift depth: negative depths (attraction toward the
    /// antinodes) become sign = -1.
    pub fn from_signed_depth(depth: f64, k: f64, kind: PotentialKind, envelope: Envelope) -> Result<Self> {
        Self::new(depth, k, kind, envelope)
    }

    /// V(x, t) = sign · V0 · envelope(t) · cos²(kx)
    pub fn value(&self, x: f64, t: f64) -> f64 {
        let c = (self.k * x).cos();
        self.sign * self.depth * self.envelope.value(t) * c * c
    }

    /// −dV/dx = sign · V0 · envelope(t) · k · sin(2kx)
    pub fn force(&self, x: f64, t: f64) -> f64 {
        self.sign * self.depth * self.envelope.value(t) * self.k * (2.0 * self.k * x).sin()
    }

    /// Spatial period π/k = λ_opt/2.
    pub fn period(&self) -> f64 {
        std::f64::consts::PI / self.k
    }

    /// Small-oscillation angular frequency about a well bottom,
    /// ω_osc = k sqrt(2 V0 / m).
    pub fn oscillation_frequency(&self, mass: f64) -> f64 {
        self.k * (2.0 * self.depth / mass).sqrt()
    }
}

/// Ponderomotive depth V_p = q² I / (2 ε0 c m ω²) = q² A0² / 4m.
pub fn ponderomotive_depth(beam: &LaserBeam, charge: f64, mass: f64) -> Result<f64> {
    if !(mass > 0.0) {
        return Err(Error::InvalidInput(format!("mass must be > 0, got {mass}")));
    }
    let sw = beam.standing_wave();
    Ok(charge * charge * sw.a0 * sw.a0 / (4.0 * mass))
}

/// Signed single-line lightshift depth
/// V_L = ¼ (q²/m) · weight · E0² / (ω² − ω0²).
///
/// Negative below resonance (ω < ω0): polarisable particles are attracted
/// toward the field antinodes there; the sign flips above resonance.
pub fn lightshift_depth(
    beam: &LaserBeam,
    omega0: f64,
    weight: f64,
    charge: f64,
    mass: f64,
    convention: FieldAmplitudeConvention,
) -> Result<f64> {
    if !(mass > 0.0) {
        return Err(Error::InvalidInput(format!("mass must be > 0, got {mass}")));
    }
    if !(weight > 0.0) {
        return Err(Error::InvalidInput(format!("weight must be > 0, got {weight}")));
    }
    let sw = beam.standing_wave();
    check_resonance_guard(sw.omega, omega0)?;
    let e0 = match convention {
        FieldAmplitudeConvention::StandingWave => sw.e0(),
        FieldAmplitudeConvention::TravellingPerBeam => sw.e0() / 2.0,
    };
    let denom = sw.omega * sw.omega - omega0 * omega0;
    Ok(0.25 * charge * charge / mass * weight * e0 * e0 / denom)
}

/// Signed sum of lightshift depths over a particle's resonance lines.
pub fn multiline_lightshift(
    beam: &LaserBeam,
    particle: &Particle,
    convention: FieldAmplitudeConvention,
) -> Result<f64> {
    if particle.lines.is_empty() {
        return Err(Error::EmptyLineList(particle.name.clone()));
    }
    let q = if particle.charge != 0.0 {
        particle.charge
    } else {
        // neutral atom: the bound electron does the oscillating
        crate::constants::ELEMENTARY_CHARGE
    };
    let mut total = 0.0;
    for line in &particle.lines {
        total += lightshift_depth(
            beam,
            line.omega0,
            line.weight,
            q,
            crate::constants::ELECTRON_MASS,
            convention,
        )?;
    }
    Ok(total)
}

/// Classical polarisability α = (q²/m) / (ω0² − ω²) (C·m²/V).
pub fn polarisability(omega: f64, omega0: f64, charge: f64, mass: f64) -> Result<f64> {
    if !(mass > 0.0) {
        return Err(Error::InvalidInput(format!("mass must be > 0, got {mass}")));
    }
    check_resonance_guard(omega, omega0)?;
    Ok(charge * charge / mass / (omega0 * omega0 - omega * omega))
}

/// Intensity corresponding to a standing-wave amplitude, I = ½ ε0 c ω² A0².
pub fn intensity_from_amplitude(a0: f64, omega: f64) -> f64 {
    0.5 * VACUUM_PERMITTIVITY * SPEED_OF_LIGHT * omega * omega * a0 * a0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{ELECTRON_MASS, ELEMENTARY_CHARGE, HBAR};
    use crate::field::{bound_charge_velocity, fields_at, free_electron_velocity, StandingWave};
    use crate::particle::{Particle, ResonanceLine};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn beam_1064(intensity: f64) -> LaserBeam {
        LaserBeam::new(1.064e-6, intensity, 0.5e-2, 1e-3).unwrap()
    }

    #[test]
    fn electron_design_point_depth() {
        // I = 1e11 W/m^2, lambda = 1064 nm: V_p/hbar = 1.6061e9 rad/s,
        // order-of-magnitude consistent with the 1e9 design entry
        let beam = beam_1064(1.0e11);
        let vp = ponderomotive_depth(&beam, -ELEMENTARY_CHARGE, ELECTRON_MASS).unwrap();
        assert_relative_eq!(vp / HBAR, 1.6061e9, max_relative = 1e-4);
        assert!(vp / HBAR > 1.0e9 / 3.0 && vp / HBAR < 3.0 * 1.0e9);
    }

    #[test]
    fn depth_limits_and_scaling() {
        let zero = beam_1064(0.0);
        assert_eq!(
            ponderomotive_depth(&zero, ELEMENTARY_CHARGE, ELECTRON_MASS).unwrap(),
            0.0
        );
        // depth ~ lambda^2 at fixed intensity
        let b1 = LaserBeam::new(0.532e-6, 1e11, 1e-3, 1e-3).unwrap();
        let b2 = LaserBeam::new(1.064e-6, 1e11, 1e-3, 1e-3).unwrap();
        let v1 = ponderomotive_depth(&b1, ELEMENTARY_CHARGE, ELECTRON_MASS).unwrap();
        let v2 = ponderomotive_depth(&b2, ELEMENTARY_CHARGE, ELECTRON_MASS).unwrap();
        assert_relative_eq!(v2, 4.0 * v1, max_relative = 1e-12);
    }

    #[test]
    fn lightshift_sign_flips_across_resonance() {
        let beam = beam_1064(1.0e7);
        let sw = beam.standing_wave();
        let conv = FieldAmplitudeConvention::StandingWave;
        let below = lightshift_depth(&beam, 1.5 * sw.omega, 1.0, ELEMENTARY_CHARGE, ELECTRON_MASS, conv)
            .unwrap();
        let above = lightshift_depth(&beam, 0.5 * sw.omega, 1.0, ELEMENTARY_CHARGE, ELECTRON_MASS, conv)
            .unwrap();
        assert!(below < 0.0, "below resonance: attractive, negative depth");
        assert!(above > 0.0, "above resonance: repulsive, positive depth");
    }

    #[test]
    fn lightshift_small_resonance_limit_is_ponderomotive() {
        let beam = beam_1064(1.0e11);
        let sw = beam.standing_wave();
        let vl = lightshift_depth(
            &beam,
            1e-5 * sw.omega,
            1.0,
            ELEMENTARY_CHARGE,
            ELECTRON_MASS,
            FieldAmplitudeConvention::StandingWave,
        )
        .unwrap();
        let vp = ponderomotive_depth(&beam, ELEMENTARY_CHARGE, ELECTRON_MASS).unwrap();
        assert_relative_eq!(vl.abs(), vp, max_relative = 1e-9);
    }

    #[test]
    fn lightshift_vanishes_far_from_resonance() {
        let beam = beam_1064(1.0e11);
        let sw = beam.standing_wave();
        let conv = FieldAmplitudeConvention::StandingWave;
        let near = lightshift_depth(&beam, 1.2 * sw.omega, 1.0, ELEMENTARY_CHARGE, ELECTRON_MASS, conv)
            .unwrap();
        let far = lightshift_depth(&beam, 40.0 * sw.omega, 1.0, ELEMENTARY_CHARGE, ELECTRON_MASS, conv)
            .unwrap();
        assert!(far.abs() < 1e-3 * near.abs());
    }

    #[test]
    fn polarisability_consistency() {
        let beam = beam_1064(3.0e9);
        let sw = beam.standing_wave();
        let omega0 = 1.8 * sw.omega;
        let alpha = polarisability(sw.omega, omega0, ELEMENTARY_CHARGE, ELECTRON_MASS).unwrap();
        assert!(alpha > 0.0, "alpha > 0 below resonance");
        let vl = lightshift_depth(
            &beam,
            omega0,
            1.0,
            ELEMENTARY_CHARGE,
            ELECTRON_MASS,
            FieldAmplitudeConvention::StandingWave,
        )
        .unwrap();
        // -1/4 alpha E0^2 equals the depth to 1e-12 relative
        let via_alpha = -0.25 * alpha * sw.e0() * sw.e0();
        assert_relative_eq!(vl, via_alpha, max_relative = 1e-12);
        // alpha -> 0^- as omega -> infinity
        let alpha_far = polarisability(50.0 * omega0, omega0, ELEMENTARY_CHARGE, ELECTRON_MASS).unwrap();
        assert!(alpha_far < 0.0 && alpha_far.abs() < 1e-3 * alpha.abs());
    }

    #[test]
    fn multiline_single_line_reduces() {
        let beam = LaserBeam::new(488e-9, 1.0e7, 100e-6, 1e-3).unwrap();
        let line = ResonanceLine::from_wavelength_nm(589.0, 1.0);
        let na = Particle::atom("Na", 22.98977).with_lines(vec![line]).unwrap();
        let conv = FieldAmplitudeConvention::StandingWave;
        let sum = multiline_lightshift(&beam, &na, conv).unwrap();
        let single = lightshift_depth(&beam, line.omega0, 1.0, ELEMENTARY_CHARGE, ELECTRON_MASS, conv)
            .unwrap();
        assert_relative_eq!(sum, single, max_relative = 1e-14);
    }

    #[test]
    fn multiline_symmetric_pair_cancels() {
        // lines at omega0^2 = omega^2 -+ d straddle the drive; equal weights cancel
        let beam = LaserBeam::new(488e-9, 1.0e7, 100e-6, 1e-3).unwrap();
        let omega = beam.standing_wave().omega;
        let d = 0.1 * omega * omega;
        let lines = vec![
            ResonanceLine {
                omega0: (omega * omega - d).sqrt(),
                weight: 1.0,
            },
            ResonanceLine {
                omega0: (omega * omega + d).sqrt(),
                weight: 1.0,
            },
        ];
        let p = Particle::atom("X", 10.0).with_lines(lines).unwrap();
        let sum = multiline_lightshift(&beam, &p, FieldAmplitudeConvention::StandingWave).unwrap();
        let single = lightshift_depth(
            &beam,
            (omega * omega - d).sqrt(),
            1.0,
            ELEMENTARY_CHARGE,
            ELECTRON_MASS,
            FieldAmplitudeConvention::StandingWave,
        )
        .unwrap();
        assert!(sum.abs() < 1e-10 * single.abs());
    }

    #[test]
    fn intensity_amplitude_round_trip() {
        let omega = 1.77e15;
        for &i in &[1.0e7, 1.0e11, 1.0e13] {
            let a0 = crate::field::amplitude_from_intensity(i, omega).unwrap();
            assert_relative_eq!(intensity_from_amplitude(a0, omega), i, max_relative = 1e-12);
        }
    }

    #[test]
    fn multiline_empty_errors() {
        let beam = beam_1064(1.0e7);
        let e = Particle::electron();
        assert!(matches!(
            multiline_lightshift(&beam, &e, FieldAmplitudeConvention::StandingWave),
            Err(crate::error::Error::EmptyLineList(_))
        ));
    }

    #[test]
    fn sodium_table_entry_within_factor_three() {
        // Na doublet at the argon-laser design point: I = 1e7 W/m^2,
        // lambda_L = 488 nm, w = 100 um, slowed beam at 25 m/s. The published
        // U*dt entry is 0.4 (U cyclic); line data and transit velocity are not
        // part of the table, so only factor-3 agreement is claimed.
        let beam = LaserBeam::new(488e-9, 1.0e7, 100e-6, 1e-3).unwrap();
        let na = Particle::atom("Na", 22.98977)
            .with_lines(vec![
                ResonanceLine::from_wavelength_nm(589.0, 2.0),
                ResonanceLine::from_wavelength_nm(589.6, 1.0),
            ])
            .unwrap();
        let v = multiline_lightshift(&beam, &na, FieldAmplitudeConvention::StandingWave).unwrap();
        let u_cyclic = v.abs() / crate::constants::PLANCK_H;
        let dt = beam.waist / 25.0;
        let product = u_cyclic * dt;
        assert!(
            product > 0.4 / 3.0 && product < 0.4 * 3.0,
            "U*dt = {product}, want within factor 3 of 0.4"
        );
    }

    #[test]
    fn potential_is_half_wavelength_periodic() {
        let sw = StandingWave::from_intensity(1.064e-6, 1e11).unwrap();
        let spec = PotentialSpec::new(
            1e-25,
            sw.k,
            PotentialKind::Ponderomotive,
            Envelope::Rectangular { duration: 1.0 },
        )
        .unwrap();
        let lambda_half = PI / sw.k;
        for &x in &[0.0, 1.1e-7, 4.2e-7] {
            assert_relative_eq!(
                spec.value(x, 0.5),
                spec.value(x + lambda_half, 0.5),
                max_relative = 1e-9,
                epsilon = 1e-34
            );
        }
    }

    #[test]
    fn lorentz_force_reverses_across_quarter_wavelength() {
        // the force varies twice as fast with position as the field: its
        // direction reverses between x1 and x1 + lambda/4
        let sw = StandingWave::from_intensity(1.064e-6, 1e11).unwrap();
        let f = averaged_lorentz_force_free(&sw, 0.1 * PI / sw.k);
        let f_quarter = averaged_lorentz_force_free(&sw, 0.1 * PI / sw.k + PI / (2.0 * sw.k));
        assert!(f * f_quarter < 0.0, "force should reverse: {f} vs {f_quarter}");
    }

    /// Time-averaged q·v_z·B_y for the free electron (q = e magnitude, as in
    /// the field-expression conventions), averaged over one optical period.
    fn averaged_lorentz_force_free(sw: &StandingWave, x: f64) -> f64 {
        let period = 2.0 * PI / sw.omega;
        let n = 8192;
        let mut avg = 0.0;
        for i in 0..n {
            let t = (i as f64 + 0.5) / n as f64 * period;
            let (_, b) = fields_at(sw, x, t);
            avg += ELEMENTARY_CHARGE * free_electron_velocity(sw, x, t) * b;
        }
        avg / n as f64
    }

    #[test]
    fn averaged_lorentz_force_matches_ponderomotive_gradient() {
        let beam = beam_1064(1.0e11);
        let sw = beam.standing_wave();
        let vp = ponderomotive_depth(&beam, ELEMENTARY_CHARGE, ELECTRON_MASS).unwrap();
        let spec = PotentialSpec::new(
            vp,
            sw.k,
            PotentialKind::Ponderomotive,
            Envelope::Rectangular { duration: 1.0 },
        )
        .unwrap();
        let force_scale = vp * sw.k;
        let mut rng_x = 0.123_f64;
        for _ in 0..20 {
            // cheap deterministic pseudo-random positions over one period
            rng_x = (rng_x * 9301.0 + 49297.0) % 233280.0;
            let x = rng_x / 233280.0 * PI / sw.k;
            let lorentz = averaged_lorentz_force_free(&sw, x);
            let gradient = spec.force(x, 0.5); // -dV/dx
            assert!(
                (lorentz - gradient).abs() <= 0.01 * force_scale,
                "x = {x}: averaged force {lorentz} vs -dV/dx {gradient}"
            );
        }
    }

    /// Long-time average of q·v_z·B_y for the bound charge; the free
    /// oscillation at ω0 does not close over one optical period, so this
    /// averages over many.
    fn averaged_lorentz_force_bound(sw: &StandingWave, omega0: f64, x: f64) -> f64 {
        let periods = 3000;
        let n = 96 * periods;
        let total = periods as f64 * 2.0 * PI / sw.omega;
        let mut avg = 0.0;
        for i in 0..n {
            let t = (i as f64 + 0.5) / n as f64 * total;
            let (_, b) = fields_at(sw, x, t);
            let v = bound_charge_velocity(sw, omega0, ELEMENTARY_CHARGE, ELECTRON_MASS, x, t)
                .unwrap();
            avg += ELEMENTARY_CHARGE * v * b;
        }
        avg / n as f64
    }

    #[test]
    fn averaged_lorentz_force_matches_lightshift_gradient() {
        let beam = beam_1064(1.0e11);
        let sw = beam.standing_wave();
        for &ratio in &[0.31, 1.73] {
            let omega0 = ratio * sw.omega;
            let vl = lightshift_depth(
                &beam,
                omega0,
                1.0,
                ELEMENTARY_CHARGE,
                ELECTRON_MASS,
                FieldAmplitudeConvention::StandingWave,
            )
            .unwrap();
            let spec = PotentialSpec::from_signed_depth(
                vl,
                sw.k,
                PotentialKind::Lightshift,
                Envelope::Rectangular { duration: 1.0 },
            )
            .unwrap();
            let force_scale = vl.abs() * sw.k;
            for &frac in &[0.13, 0.31, 0.62] {
                let x = frac * PI / sw.k;
                let lorentz = averaged_lorentz_force_bound(&sw, omega0, x);
                let gradient = spec.force(x, 0.5);
                assert!(
                    (lorentz - gradient).abs() <= 0.01 * force_scale,
                    "omega0/omega = {ratio}, x = {x}: {lorentz} vs {gradient}"
                );
            }
        }
    }

    #[test]
    fn on_resonance_force_antisymmetrizes() {
        // approach resonance by a symmetric detuning pair outside the guard:
        // force(+d) = -force(-d) within 1%
        let beam = beam_1064(1.0e11);
        let sw = beam.standing_wave();
        let x = 0.2 * PI / sw.k;
        let delta = 1e-3;
        let f_above = averaged_lorentz_force_bound(&sw, sw.omega * (1.0 - delta), x);
        let f_below = averaged_lorentz_force_bound(&sw, sw.omega * (1.0 + delta), x);
        assert!(
            (f_above + f_below).abs() <= 0.01 * f_above.abs().max(f_below.abs()),
            "detuned forces should antisymmetrize: {f_above} vs {f_below}"
        );
    }
}
