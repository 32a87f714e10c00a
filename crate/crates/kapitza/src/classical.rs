//! Classical trajectory ensembles in the sinusoidal potential.
//!
//! In the strong-scattering limit the transverse motion is classical:
//! m ẍ = −dV/dx with V = sign·V0·envelope(t)·cos²kx. Far-field deflection
//! angles come analytically from the exit velocity, atan(v_x/v). Ensembles
//! over the entry position produce the double-peaked rainbow histogram, with
//! the outer peaks at the maximum deflection set by the potential's
//! inflection points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::{Envelope, PotentialSpec};

/// One classical trajectory setup.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryConfig {
    pub potential: PotentialSpec,
    /// Particle mass (kg)
    pub mass: f64,
    /// Longitudinal velocity v (m/s), > 0
    pub velocity: f64,
    /// Initial transverse position, interpreted modulo the λ_opt/2 period
    pub x0: f64,
    /// Initial transverse velocity (m/s)
    pub v0: f64,
}

impl TrajectoryConfig {
    pub fn new(potential: PotentialSpec, mass: f64, velocity: f64) -> Result<Self> {
        if !(mass > 0.0) {
            return Err(Error::InvalidInput(format!("mass must be > 0, got {mass}")));
        }
        if !(velocity > 0.0) {
            return Err(Error::InvalidInput(format!(
                "longitudinal velocity must be > 0, got {velocity}"
            )));
        }
        Ok(Self {
            potential,
            mass,
            velocity,
            x0: 0.0,
            v0: 0.0,
        })
    }

    pub fn with_x0(mut self, x0: f64) -> Self {
        // canonicalize so that shifting by any whole number of periods yields
        // bit-identical trajectories
        self.x0 = x0.rem_euclid(self.potential.period());
        self
    }

    pub fn with_v0(mut self, v0: f64) -> Self {
        self.v0 = v0;
        self
    }

    /// Small-oscillation frequency about a well bottom.
    pub fn oscillation_frequency(&self) -> f64 {
        self.potential.oscillation_frequency(self.mass)
    }
}

/// Outcome of one trajectory.
#[derive(Debug, Clone)]
pub struct Trajectory {
    /// Final transverse velocity (m/s)
    pub v_final: f64,
    /// Far-field deflection angle atan(v_x/v) (rad)
    pub angle: f64,
    /// Relative drift of the transverse energy ½mẋ² + V(x) over the run;
    /// only meaningful for the rectangular envelope
    pub energy_drift: f64,
    /// Sampled (t, x, v_x) path, present when requested
    pub path: Option<Vec<(f64, f64, f64)>>,
}

/// Integrate one trajectory through the envelope window.
///
/// Rectangular envelopes use symplectic leapfrog (velocity Verlet), which
/// bounds the energy drift; time-dependent envelopes use classic RK4 at the
/// same step resolution.
pub fn integrate_trajectory(cfg: &TrajectoryConfig, record_path: bool) -> Result<Trajectory> {
    let total = cfg.potential.envelope.total_time();
    let omega = cfg.oscillation_frequency();
    // omega h <= 1.5e-4 keeps the leapfrog energy error below 1e-8 even for
    // near-separatrix orbits; floor the step count for weak potentials
    let n_steps = if omega > 0.0 {
        ((omega * total / 1.5e-4).ceil() as usize).clamp(64, 50_000_000)
    } else {
        64
    };
    let h = total / n_steps as f64;
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::StepUnderflow { step: h });
    }

    let rectangular = matches!(cfg.potential.envelope, Envelope::Rectangular { .. });
    let mut x = cfg.x0;
    let mut v = cfg.v0;
    let mut path = record_path.then(|| Vec::with_capacity(257));
    let sample_every = (n_steps / 256).max(1);

    let energy = |x: f64, v: f64| 0.5 * cfg.mass * v * v + cfg.potential.value(x, total * 0.5);
    let e0 = if rectangular { energy(x, v) } else { 0.0 };
    let e_scale = 0.5 * cfg.mass * v * v + cfg.potential.depth;
    let mut max_drift = 0.0_f64;

    // the final stage time is pinned to the exact window end so float
    // accumulation cannot step past a rectangular envelope's edge
    let stage_end = |i: usize, t: f64| if i + 1 == n_steps { total } else { t + h };

    if rectangular {
        // leapfrog: half kick, drift, half kick
        let mut a = cfg.potential.force(x, 0.0) / cfg.mass;
        for i in 0..n_steps {
            let t = i as f64 * h;
            if let Some(p) = path.as_mut() {
                if i % sample_every == 0 {
                    p.push((t, x, v));
                }
            }
            let v_half = v + 0.5 * h * a;
            x += h * v_half;
            a = cfg.potential.force(x, stage_end(i, t)) / cfg.mass;
            v = v_half + 0.5 * h * a;
            if i % sample_every == 0 {
                let drift = (energy(x, v) - e0).abs() / e_scale;
                if drift > max_drift {
                    max_drift = drift;
                }
            }
        }
        let drift = (energy(x, v) - e0).abs() / e_scale;
        max_drift = max_drift.max(drift);
    } else {
        for i in 0..n_steps {
            let t = i as f64 * h;
            if let Some(p) = path.as_mut() {
                if i % sample_every == 0 {
                    p.push((t, x, v));
                }
            }
            let t1 = stage_end(i, t);
            let acc = |x: f64, t: f64| cfg.potential.force(x, t) / cfg.mass;
            let (k1x, k1v) = (v, acc(x, t));
            let (k2x, k2v) = (v + 0.5 * h * k1v, acc(x + 0.5 * h * k1x, t + 0.5 * h));
            let (k3x, k3v) = (v + 0.5 * h * k2v, acc(x + 0.5 * h * k2x, t + 0.5 * h));
            let (k4x, k4v) = (v + h * k3v, acc(x + h * k3x, t1));
            x += h / 6.0 * (k1x + 2.0 * (k2x + k3x) + k4x);
            v += h / 6.0 * (k1v + 2.0 * (k2v + k3v) + k4v);
        }
    }
    if let Some(p) = path.as_mut() {
        p.push((total, x, v));
    }

    Ok(Trajectory {
        v_final: v,
        angle: (v / cfg.velocity).atan(),
        energy_drift: max_drift,
        path,
    })
}

/// How entry positions are sampled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum X0Sampling {
    /// Uniform over one λ_opt/2 period, seeded
    UniformOverPeriod,
    /// Explicit list of positions
    Explicit(Vec<f64>),
}

/// Ensemble controls.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleConfig {
    pub trajectories: usize,
    pub sampling: X0Sampling,
    pub seed: u64,
    /// Histogram bin count (>= 2); 201 resolves the rainbow peaks
    pub bins: usize,
    /// Far-field half-range (rad); bins span [−range, +range]
    pub angle_range: f64,
}

impl EnsembleConfig {
    pub fn uniform(trajectories: usize, seed: u64, bins: usize, angle_range: f64) -> Result<Self> {
        if trajectories < 1 {
            return Err(Error::InvalidInput("need at least one trajectory".into()));
        }
        if bins < 2 {
            return Err(Error::InvalidInput("need at least two bins".into()));
        }
        if !(angle_range > 0.0) {
            return Err(Error::InvalidInput(format!(
                "angle range must be > 0, got {angle_range}"
            )));
        }
        Ok(Self {
            trajectories,
            sampling: X0Sampling::UniformOverPeriod,
            seed,
            bins,
            angle_range,
        })
    }
}

/// Binned far-field deflection angles.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeflectionHistogram {
    /// Strictly increasing bin edges (rad), bins + 1 entries
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    /// Total trajectories binned (angles outside the range clamp to the
    /// outermost bins)
    pub total: u64,
    /// Worst per-trajectory relative energy drift seen in the ensemble
    pub max_energy_drift: f64,
}

impl DeflectionHistogram {
    pub fn bin_center(&self, i: usize) -> f64 {
        0.5 * (self.edges[i] + self.edges[i + 1])
    }
}

/// Run an ensemble and histogram the deflection angles.
///
/// Trajectories are independent and run in parallel; entry positions are
/// drawn up front in a deterministic order, so identical seeds give
/// bit-identical histograms regardless of thread count.
pub fn ensemble_histogram(
    ens: &EnsembleConfig,
    template: &TrajectoryConfig,
) -> Result<DeflectionHistogram> {
    let period = template.potential.period();
    let x0s: Vec<f64> = match &ens.sampling {
        X0Sampling::UniformOverPeriod => {
            let mut rng = ChaCha8Rng::seed_from_u64(ens.seed);
            (0..ens.trajectories)
                .map(|_| rng.gen_range(0.0..period))
                .collect()
        }
        X0Sampling::Explicit(list) => {
            if list.len() != ens.trajectories {
                return Err(Error::InvalidInput(format!(
                    "explicit x0 list has {} entries, expected {}",
                    list.len(),
                    ens.trajectories
                )));
            }
            list.clone()
        }
    };

    let results: Vec<(f64, f64)> = x0s
        .par_iter()
        .map(|&x0| {
            let cfg = template.with_x0(x0);
            integrate_trajectory(&cfg, false).map(|t| (t.angle, t.energy_drift))
        })
        .collect::<Result<_>>()?;

    let mut counts = vec![0u64; ens.bins];
    let mut max_drift = 0.0_f64;
    let lo = -ens.angle_range;
    let width = 2.0 * ens.angle_range / ens.bins as f64;
    for &(angle, drift) in &results {
        let idx = (((angle - lo) / width).floor() as i64).clamp(0, ens.bins as i64 - 1) as usize;
        counts[idx] += 1;
        if drift > max_drift {
            max_drift = drift;
        }
    }
    let edges = (0..=ens.bins).map(|i| lo + i as f64 * width).collect();
    Ok(DeflectionHistogram {
        edges,
        counts,
        total: ens.trajectories as u64,
        max_energy_drift: max_drift,
    })
}

/// Impulse-approximation rainbow angle θ_r = V0 k Δt_eff / (m v), the
/// deflection from the maximum force V0·k acting at an inflection point for
/// the envelope's effective duration.
///
/// Quoted as exact only in the impulse regime ω_osc Δt < 1; outside it the
/// value is returned with `regime_warning` set.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RainbowAngle {
    pub angle: f64,
    pub omega_osc_dt: f64,
    pub regime_warning: bool,
}

pub fn rainbow_angle(template: &TrajectoryConfig) -> RainbowAngle {
    let dt_eff = template.potential.envelope.time_integral();
    let angle = template.potential.depth * template.potential.k * dt_eff
        / (template.mass * template.velocity);
    let omega_osc_dt =
        template.oscillation_frequency() * template.potential.envelope.total_time();
    RainbowAngle {
        angle,
        omega_osc_dt,
        regime_warning: omega_osc_dt >= 1.0,
    }
}

/// Channelling diagnostics for a cold, uniformly filled well ensemble.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ChannellingReport {
    /// Fraction of trajectories that stayed within their starting well and
    /// completed at least one full transverse oscillation
    pub channelled_fraction: f64,
    /// Mean number of completed oscillation periods (zero-crossing count / 2)
    pub mean_periods: f64,
    /// Harmonic estimate ω_osc Δt / 2π
    pub harmonic_periods: f64,
}

/// Fraction of a uniform-x0 ensemble that oscillates inside one well for the
/// whole interaction, and how many periods are completed.
pub fn channelling_check(template: &TrajectoryConfig, trajectories: usize) -> Result<ChannellingReport> {
    if trajectories < 1 {
        return Err(Error::InvalidInput("need at least one trajectory".into()));
    }
    let period = template.potential.period();
    // well centers: minima of sign*cos^2 are at k x = pi/2 (+1) or 0 (-1)
    let well_center = if template.potential.sign > 0.0 {
        0.5 * period
    } else {
        0.0
    };
    let half_width = 0.5 * period;
    let total = template.potential.envelope.total_time();
    let omega = template.oscillation_frequency();

    let outcomes: Vec<(bool, f64)> = (0..trajectories)
        .into_par_iter()
        .map(|i| {
            // uniform fill of one well, deterministic without an rng
            let frac = (i as f64 + 0.5) / trajectories as f64;
            let x0 = well_center + (frac - 0.5) * period * 0.999;
            let cfg = template.with_x0(x0);
            trace_well_motion(&cfg, well_center, half_width, total)
        })
        .collect();

    let mut stayed_and_oscillated = 0usize;
    let mut period_sum = 0.0;
    for &(stayed, periods) in &outcomes {
        if stayed && periods >= 1.0 {
            stayed_and_oscillated += 1;
        }
        period_sum += periods;
    }
    Ok(ChannellingReport {
        channelled_fraction: stayed_and_oscillated as f64 / trajectories as f64,
        mean_periods: period_sum / trajectories as f64,
        harmonic_periods: omega * total / (2.0 * std::f64::consts::PI),
    })
}

/// Follow one trajectory, tracking well escape and zero crossings of the
/// displacement from the well center.
fn trace_well_motion(
    cfg: &TrajectoryConfig,
    well_center: f64,
    half_width: f64,
    total: f64,
) -> (bool, f64) {
    let omega = cfg.oscillation_frequency();
    let n_steps = if omega > 0.0 {
        ((omega * total / 1e-3).ceil() as usize).clamp(256, 20_000_000)
    } else {
        256
    };
    let h = total / n_steps as f64;
    let mut x = cfg.x0;
    let mut v = cfg.v0;
    let mut stayed = true;
    let mut crossings = 0usize;
    let mut prev_sign = (x - well_center).signum();
    let mut a = cfg.potential.force(x, 0.0) / cfg.mass;
    for i in 0..n_steps {
        let t = i as f64 * h;
        let v_half = v + 0.5 * h * a;
        x += h * v_half;
        a = cfg.potential.force(x, t + h) / cfg.mass;
        v = v_half + 0.5 * h * a;
        if (x - well_center).abs() > half_width {
            stayed = false;
        }
        let s = (x - well_center).signum();
        if s != 0.0 && prev_sign != 0.0 && s != prev_sign {
            crossings += 1;
        }
        if s != 0.0 {
            prev_sign = s;
        }
    }
    (stayed, crossings as f64 / 2.0)
}

/// Position spread (standard deviation about the well center) of a cold
/// uniform ensemble before and after the interaction; a quarter-oscillation
/// interaction focuses the ensemble.
pub fn focusing_spread(template: &TrajectoryConfig, trajectories: usize) -> Result<(f64, f64)> {
    if trajectories < 2 {
        return Err(Error::InvalidInput("need at least two trajectories".into()));
    }
    let period = template.potential.period();
    let well_center = if template.potential.sign > 0.0 {
        0.5 * period
    } else {
        0.0
    };
    let finals: Vec<(f64, f64)> = (0..trajectories)
        .into_par_iter()
        .map(|i| {
            let frac = (i as f64 + 0.5) / trajectories as f64;
            let x0 = well_center + (frac - 0.5) * period * 0.999;
            let cfg = template.with_x0(x0);
            let tr = integrate_trajectory(&cfg, true)?;
            let path = tr.path.expect("path requested");
            let (_, x_final, _) = *path.last().expect("nonempty path");
            Ok((x0 - well_center, x_final - well_center))
        })
        .collect::<Result<_>>()?;
    let std = |vals: &[f64]| {
        let mean = vals.iter().sum::<f64>() / vals.len() as f64;
        (vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / vals.len() as f64).sqrt()
    };
    let initial: Vec<f64> = finals.iter().map(|&(a, _)| a).collect();
    let after: Vec<f64> = finals.iter().map(|&(_, b)| b).collect();
    Ok((std(&initial), std(&after)))
}
