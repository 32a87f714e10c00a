//! Scattering-regime classification on the (U/ε, 1/(εΔt)) parameter plane.
//!
//! All rates are stored as angular frequencies. Published experiment tables
//! quote cyclic values (MHz/kHz), so constructors from table values multiply
//! by 2π; the interaction time is the reciprocal of the cyclic rate,
//! Δt = 2π / inv_dt. Classification uses only dimensionless ratios, so common
//! rescaling of (U, 1/Δt, ε) cannot change a label.

use serde::{Deserialize, Serialize};

use crate::constants::{cyclic_to_angular, HBAR};
use crate::error::{Error, Result};

/// One experiment on the parameter plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimePoint {
    /// Potential depth V0/ħ (rad/s)
    pub u: f64,
    /// Interaction rate 1/Δt (rad/s)
    pub inv_dt: f64,
    /// Recoil frequency ε (rad/s)
    pub epsilon: f64,
    /// Optional published label from the source table
    pub label: Option<&'static str>,
}

impl RegimePoint {
    pub fn new(u: f64, inv_dt: f64, epsilon: f64) -> Result<Self> {
        if u < 0.0 || inv_dt < 0.0 || epsilon < 0.0 {
            return Err(Error::InvalidInput(format!(
                "rates must be >= 0: U = {u}, 1/dt = {inv_dt}, eps = {epsilon}"
            )));
        }
        Ok(Self {
            u,
            inv_dt,
            epsilon,
            label: None,
        })
    }

    /// From table-style cyclic values: U and 1/Δt in MHz, ε in kHz.
    pub fn from_cyclic_mhz_khz(u_mhz: f64, inv_dt_mhz: f64, epsilon_khz: f64) -> Result<Self> {
        Self::new(
            cyclic_to_angular(u_mhz * 1e6),
            cyclic_to_angular(inv_dt_mhz * 1e6),
            cyclic_to_angular(epsilon_khz * 1e3),
        )
    }

    /// Interaction time in seconds, Δt = 2π / inv_dt.
    pub fn interaction_time(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.inv_dt
    }

    /// The plotted dimensionless coordinates (U/ε, 1/(ε·Δt)).
    pub fn coordinates(&self) -> Result<(f64, f64)> {
        if !(self.epsilon > 0.0) || !(self.inv_dt > 0.0) {
            return Err(Error::InvalidInput(
                "coordinates need epsilon > 0 and 1/dt > 0".into(),
            ));
        }
        Ok((self.u / self.epsilon, self.inv_dt / self.epsilon))
    }

    /// Critical parameter U·Δt (dimensionless).
    pub fn critical_product(&self) -> f64 {
        self.u * self.interaction_time()
    }

    /// Transverse-oscillation phase fraction sqrt(U·ε)/inv_dt; with
    /// ω_osc = 2·sqrt(U·ε) and Δt = 2π/inv_dt this equals ω_osc·Δt/4π.
    pub fn oscillation_fraction(&self) -> f64 {
        (self.u * self.epsilon).sqrt() / self.inv_dt
    }
}

/// Scattering regime label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegimeLabel {
    /// Too weak for too short a time; no appreciable scattering
    Negligible,
    /// Short, strong interaction: many symmetric orders (Raman-Nath)
    Diffractive,
    /// Long, weak interaction at the Bragg angle: two orders
    Bragg,
    /// Particles trapped in the potential valleys for many oscillations
    Channelling,
    /// Quarter-oscillation focusing band inside channelling
    Lens,
}

impl RegimeLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegimeLabel::Negligible => "negligible",
            RegimeLabel::Diffractive => "diffractive",
            RegimeLabel::Bragg => "bragg",
            RegimeLabel::Channelling => "channelling",
            RegimeLabel::Lens => "lens",
        }
    }
}

/// Classification thresholds, all on dimensionless combinations.
///
/// Defaults are calibrated so the published experiments land on their
/// reported descriptions; the source draws no explicit boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeThresholds {
    /// Negligible when U·Δt falls below this
    pub negligible_below: f64,
    /// Diffractive when (1/Δt) / (2π sqrt(U ε)) exceeds this (interaction
    /// shorter than the transverse oscillation timescale)
    pub diffractive_above: f64,
    /// Channelling needs U·Δt above this ...
    pub channelling_product_above: f64,
    /// ... and U/ε above this
    pub channelling_ratio_above: f64,
    /// Lens sub-band of channelling: oscillation fraction within this window
    pub lens_band: (f64, f64),
}

impl Default for RegimeThresholds {
    fn default() -> Self {
        Self {
            negligible_below: 0.3,
            diffractive_above: 3.0,
            channelling_product_above: 100.0,
            channelling_ratio_above: 100.0,
            lens_band: (0.15, 0.35),
        }
    }
}

/// Deterministic regime label for a point under the given thresholds.
pub fn classify_regime(p: &RegimePoint, thresholds: &RegimeThresholds) -> RegimeLabel {
    let product = p.critical_product();
    if product < thresholds.negligible_below {
        return RegimeLabel::Negligible;
    }
    // Raman-Nath test: 1/Δt against the oscillation rate sqrt(U·ε); the 2π
    // matches Δt = 2π/inv_dt so the combination stays a pure ratio
    let rn = p.inv_dt / (2.0 * std::f64::consts::PI * (p.u * p.epsilon).sqrt());
    if rn > thresholds.diffractive_above {
        return RegimeLabel::Diffractive;
    }
    if product > thresholds.channelling_product_above
        && p.u / p.epsilon > thresholds.channelling_ratio_above
    {
        let osc = p.oscillation_fraction();
        if osc >= thresholds.lens_band.0 && osc <= thresholds.lens_band.1 {
            return RegimeLabel::Lens;
        }
        return RegimeLabel::Channelling;
    }
    RegimeLabel::Bragg
}

/// Critical parameter V0·Δt/ħ from a depth in joules and a time in seconds.
pub fn critical_parameter(depth: f64, dt: f64) -> f64 {
    depth * dt / HBAR
}

/// One published experiment: label letter, species, cyclic table values and
/// the regime its description maps to.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PublishedPoint {
    pub id: &'static str,
    pub species: &'static str,
    pub u_mhz: f64,
    pub inv_dt_mhz: f64,
    pub epsilon_khz: f64,
    pub reported: RegimeLabel,
}

/// The nine reported experiments A-I with their published parameter values.
/// H (lithography) maps to the lens band and I (hollow-fiber guiding) to
/// channelling; those two labels describe experiment types rather than
/// scattering regimes.
pub const PUBLISHED_POINTS: &[PublishedPoint] = &[
    PublishedPoint { id: "A", species: "Na", u_mhz: 0.35, inv_dt_mhz: 0.15, epsilon_khz: 24.0, reported: RegimeLabel::Bragg },
    PublishedPoint { id: "B", species: "Ne", u_mhz: 0.10, inv_dt_mhz: 0.1, epsilon_khz: 24.0, reported: RegimeLabel::Bragg },
    PublishedPoint { id: "C", species: "Ar", u_mhz: 0.023, inv_dt_mhz: 0.02, epsilon_khz: 7.5, reported: RegimeLabel::Bragg },
    PublishedPoint { id: "D", species: "Na", u_mhz: 18.6, inv_dt_mhz: 14.0, epsilon_khz: 24.0, reported: RegimeLabel::Diffractive },
    PublishedPoint { id: "E", species: "Ar", u_mhz: 1.65, inv_dt_mhz: 10.0, epsilon_khz: 7.5, reported: RegimeLabel::Diffractive },
    PublishedPoint { id: "F", species: "Cs", u_mhz: 45.0, inv_dt_mhz: 0.150, epsilon_khz: 12.0, reported: RegimeLabel::Channelling },
    PublishedPoint { id: "G", species: "Li", u_mhz: 2188.0, inv_dt_mhz: 0.12, epsilon_khz: 37.0, reported: RegimeLabel::Channelling },
    PublishedPoint { id: "H", species: "Cr", u_mhz: 100.0, inv_dt_mhz: 5.0, epsilon_khz: 20.0, reported: RegimeLabel::Lens },
    PublishedPoint { id: "I", species: "Rb", u_mhz: 1500.0, inv_dt_mhz: 0.01, epsilon_khz: 3.5, reported: RegimeLabel::Channelling },
];

impl PublishedPoint {
    pub fn point(&self) -> RegimePoint {
        let mut p = RegimePoint::from_cyclic_mhz_khz(self.u_mhz, self.inv_dt_mhz, self.epsilon_khz)
            .expect("published values are valid");
        p.label = Some(self.id);
        p
    }
}

/// One row of the exported regime map.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MapRow {
    pub u_over_eps: f64,
    pub inv_eps_dt: f64,
    pub label: RegimeLabel,
    /// Published point id when the row is one of A-I
    pub point: Option<&'static str>,
}

/// Log-spaced grid over the parameter plane plus the published points, ready
/// for plotting.
pub fn regime_map(
    thresholds: &RegimeThresholds,
    u_over_eps: (f64, f64),
    inv_eps_dt: (f64, f64),
    per_decade: usize,
) -> Result<Vec<MapRow>> {
    if !(u_over_eps.0 > 0.0 && u_over_eps.1 > u_over_eps.0)
        || !(inv_eps_dt.0 > 0.0 && inv_eps_dt.1 > inv_eps_dt.0)
        || per_decade == 0
    {
        return Err(Error::InvalidInput("bad regime-map grid bounds".into()));
    }
    let grid = |lo: f64, hi: f64| -> Vec<f64> {
        let decades = (hi / lo).log10();
        let n = (decades * per_decade as f64).ceil() as usize + 1;
        (0..n)
            .map(|i| lo * 10f64.powf(decades * i as f64 / (n - 1) as f64))
            .collect()
    };
    // fix epsilon = 1 rad/s and scale the rest; classification is
    // rescale-invariant so the choice cannot matter
    let mut rows = Vec::new();
    for &x in &grid(u_over_eps.0, u_over_eps.1) {
        for &y in &grid(inv_eps_dt.0, inv_eps_dt.1) {
            let p = RegimePoint::new(x, y, 1.0)?;
            rows.push(MapRow {
                u_over_eps: x,
                inv_eps_dt: y,
                label: classify_regime(&p, thresholds),
                point: None,
            });
        }
    }
    for pp in PUBLISHED_POINTS {
        let p = pp.point();
        let (x, y) = p.coordinates()?;
        rows.push(MapRow {
            u_over_eps: x,
            inv_eps_dt: y,
            label: classify_regime(&p, thresholds),
            point: Some(pp.id),
        });
    }
    Ok(rows)
}
