//! Coupled plane-wave dynamics in the sinusoidal potential.
//!
//! The state is a set of complex amplitudes c_n on a momentum lattice n·ħk
//! (steps of one photon recoil; the potential couples n ↔ n±2). With the
//! diagonal generalized by a fractional momentum offset δ, the equations are
//!
//!   i ċ_n = (ε (n+δ)² + V(t)/2ħ) c_n + (V(t)/4ħ) (c_{n-2} + c_{n+2}),
//!
//! where ε = ħk²/2m is the recoil frequency and V(t) = V0·envelope(t). The
//! uniform V(t)/2ħ diagonal term commutes with everything and is applied as
//! an exact global phase, so toggling it can never change populations.
//!
//! Two analytic limits are provided for cross-checking: the Bessel-function
//! solution of the ε → 0 (diffractive) limit and the two-mode Pendellösung of
//! the ε ≫ V0/ħ (Bragg) limit.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bessel::bessel_j;
use crate::constants::HBAR;
use crate::error::{Error, Result};
use crate::potential::{Envelope, PotentialSpec};

/// Argument convention of the closed-form Bessel solution.
///
/// Direct insertion of the plane-wave ansatz into the coupled equations fixes
/// the argument as V0·t/2ħ; the older printed form uses V0·t/ħ. The
/// insertion-consistent convention is the default and is what the numerical
/// oracle confirms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BesselArgConvention {
    /// φ = V0 t / 2ħ, prefactor (−i)^{n/2} e^{−iφ} (consistent with the ODE)
    #[default]
    HalfV0TOverHbar,
    /// φ = V0 t / ħ, prefactor i^{n/2} e^{−iφ} (as printed)
    V0TOverHbar,
}

/// The discrete momentum lattice the amplitudes live on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeLattice {
    pub n_min: i32,
    pub n_max: i32,
    /// Fractional incident transverse momentum δ in units of ħk; the diagonal
    /// energy of mode n is ε(n+δ)².
    pub offset_delta: f64,
    /// Recoil frequency ε (rad/s)
    pub epsilon: f64,
}

impl ModeLattice {
    pub fn new(n_min: i32, n_max: i32, offset_delta: f64, epsilon: f64) -> Result<Self> {
        if !(n_min < 0 && 0 < n_max) {
            return Err(Error::InvalidInput(format!(
                "lattice must straddle zero: n_min = {n_min}, n_max = {n_max}"
            )));
        }
        if epsilon < 0.0 {
            return Err(Error::InvalidInput(format!(
                "epsilon must be >= 0, got {epsilon}"
            )));
        }
        Ok(Self {
            n_min,
            n_max,
            offset_delta,
            epsilon,
        })
    }

    /// Symmetric lattice sized for the expected diffraction-order spread:
    /// |n| <= max(8, ceil(4 V0 Δt_eff / ħ)). Populations in the Bessel regime
    /// reach order ~ V0 t/2ħ, so this leaves generous headroom; the boundary
    /// monitor widens further if needed.
    pub fn auto(depth: f64, effective_duration: f64, offset_delta: f64, epsilon: f64) -> Result<Self> {
        let reach = (4.0 * depth * effective_duration / HBAR).ceil() as i32;
        let half = reach.max(8);
        Self::new(-half, half, offset_delta, epsilon)
    }

    pub fn len(&self) -> usize {
        (self.n_max - self.n_min + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Widen symmetrically by `pad` on each side.
    fn widened(&self, pad: i32) -> Self {
        Self {
            n_min: self.n_min - pad,
            n_max: self.n_max + pad,
            ..*self
        }
    }

    pub fn indices(&self) -> impl Iterator<Item = i32> + '_ {
        self.n_min..=self.n_max
    }
}

/// Complex amplitudes on the lattice at one instant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeAmplitudes {
    pub n_min: i32,
    pub c: Vec<Complex64>,
    pub time: f64,
}

impl ModeAmplitudes {
    /// All population in the single mode n.
    pub fn single(lattice: &ModeLattice, n: i32) -> Result<Self> {
        if n < lattice.n_min || n > lattice.n_max {
            return Err(Error::InvalidInput(format!(
                "mode {n} outside lattice [{}, {}]",
                lattice.n_min, lattice.n_max
            )));
        }
        let mut c = vec![Complex64::new(0.0, 0.0); lattice.len()];
        c[(n - lattice.n_min) as usize] = Complex64::new(1.0, 0.0);
        Ok(Self {
            n_min: lattice.n_min,
            c,
            time: 0.0,
        })
    }

    pub fn norm_sq(&self) -> f64 {
        self.c.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Amplitude of mode n (zero outside the stored range).
    pub fn amplitude(&self, n: i32) -> Complex64 {
        let idx = n - self.n_min;
        if idx < 0 || idx as usize >= self.c.len() {
            Complex64::new(0.0, 0.0)
        } else {
            self.c[idx as usize]
        }
    }

    /// Population |c_n|².
    pub fn population(&self, n: i32) -> f64 {
        self.amplitude(n).norm_sqr()
    }

    fn embed_into(&self, lattice: &ModeLattice) -> Self {
        let mut c = vec![Complex64::new(0.0, 0.0); lattice.len()];
        for (i, &z) in self.c.iter().enumerate() {
            let n = self.n_min + i as i32;
            c[(n - lattice.n_min) as usize] = z;
        }
        Self {
            n_min: lattice.n_min,
            c,
            time: self.time,
        }
    }
}

/// Evolution controls.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvolutionConfig {
    pub potential: PotentialSpec,
    /// Total simulated time (s)
    pub total_time: f64,
    /// Upper bound on the integrator step (s)
    pub max_step: f64,
    /// Allowed drift of Σ|c_n|² away from 1
    pub norm_tolerance: f64,
    /// Allowed boundary-mode population before the lattice is widened
    pub boundary_tolerance: f64,
    /// Whether the uniform V(t)/2ħ diagonal phase is applied
    pub include_diagonal_offset: bool,
    /// Number of stored samples along the evolution (>= 2)
    pub samples: usize,
}

impl EvolutionConfig {
    /// Sensible defaults for a given potential; total time from the envelope.
    pub fn for_potential(potential: PotentialSpec) -> Self {
        Self {
            potential,
            total_time: potential.envelope.total_time(),
            max_step: potential.envelope.total_time() / 256.0,
            norm_tolerance: 1e-9,
            boundary_tolerance: 1e-10,
            include_diagonal_offset: true,
            samples: 257,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.total_time > 0.0) {
            return Err(Error::InvalidInput(format!(
                "total_time must be > 0, got {}",
                self.total_time
            )));
        }
        if !(self.max_step > 0.0) || !(self.norm_tolerance > 0.0) || !(self.boundary_tolerance > 0.0)
        {
            return Err(Error::InvalidInput(
                "max_step, norm_tolerance and boundary_tolerance must be > 0".into(),
            ));
        }
        if self.samples < 2 {
            return Err(Error::InvalidInput("need at least 2 samples".into()));
        }
        Ok(())
    }
}

/// Result of one evolution: sampled amplitudes plus run diagnostics.
#[derive(Debug, Clone)]
pub struct EvolutionRun {
    pub samples: Vec<ModeAmplitudes>,
    pub lattice: ModeLattice,
    /// max |Σ|c_n|² − 1| observed over the samples
    pub norm_drift: f64,
    /// Integrator step actually used (s)
    pub step: f64,
    /// How many times the lattice was widened
    pub widenings: usize,
    /// Whether boundary population ever exceeded tolerance on the final lattice
    pub boundary_flag: bool,
}

impl EvolutionRun {
    pub fn final_state(&self) -> &ModeAmplitudes {
        self.samples.last().expect("at least two samples")
    }
}

const MAX_WIDENINGS: usize = 8;
const MAX_HALVINGS: usize = 48;
const WIDEN_PAD: i32 = 8;

/// Evolve the coupled amplitudes under the configured potential.
///
/// Fixed-step classic fourth-order Runge-Kutta; the step is halved and the
/// run repeated until the norm drift meets `norm_tolerance` (norm is
/// monitored, never renormalized). If boundary population exceeds
/// `boundary_tolerance`, the lattice is widened by 8 on each side and the run
/// retried, up to a retry limit.
pub fn evolve(
    lattice: &ModeLattice,
    initial: &ModeAmplitudes,
    cfg: &EvolutionConfig,
) -> Result<EvolutionRun> {
    cfg.validate()?;
    let norm = initial.norm_sq();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::NotNormalized { norm });
    }
    if initial.n_min != lattice.n_min || initial.c.len() != lattice.len() {
        return Err(Error::InvalidInput(
            "initial amplitudes not aligned with the lattice".into(),
        ));
    }

    let mut lat = *lattice;
    let mut init = initial.clone();
    for widenings in 0..=MAX_WIDENINGS {
        let run = evolve_fixed_lattice(&lat, &init, cfg, widenings)?;
        if !run.boundary_flag {
            return Ok(run);
        }
        let next = lat.widened(WIDEN_PAD);
        init = init.embed_into(&next);
        lat = next;
    }
    Err(Error::LatticeRetryLimit {
        widenings: MAX_WIDENINGS,
    })
}

fn evolve_fixed_lattice(
    lattice: &ModeLattice,
    initial: &ModeAmplitudes,
    cfg: &EvolutionConfig,
    widenings: usize,
) -> Result<EvolutionRun> {
    let mut step = cfg.max_step.min(cfg.total_time / (cfg.samples as f64 - 1.0));
    for _ in 0..=MAX_HALVINGS {
        if step < cfg.total_time * 1e-14 {
            return Err(Error::StepUnderflow { step });
        }
        let run = integrate(lattice, initial, cfg, step, widenings)?;
        if run.norm_drift <= cfg.norm_tolerance {
            return Ok(run);
        }
        step *= 0.5;
    }
    Err(Error::StepUnderflow { step })
}

struct Rhs<'a> {
    spec: &'a PotentialSpec,
    /// diagonal ε(n+δ)² per mode
    diag: Vec<f64>,
}

impl<'a> Rhs<'a> {
    fn new(lattice: &ModeLattice, spec: &'a PotentialSpec) -> Self {
        let diag = lattice
            .indices()
            .map(|n| {
                let nd = n as f64 + lattice.offset_delta;
                lattice.epsilon * nd * nd
            })
            .collect();
        Self { spec, diag }
    }

    /// dc/dt = −i [diag c + (V(t)/4ħ)(c_{n−2} + c_{n+2})]; the uniform V/2ħ
    /// term is factored out as a global phase by the caller.
    fn eval(&self, t: f64, c: &[Complex64], out: &mut [Complex64]) {
        let coupling = self.spec.sign * self.spec.depth * self.spec.envelope.value(t) / (4.0 * HBAR);
        let len = c.len();
        for i in 0..len {
            let mut h = self.diag[i] * c[i];
            if i >= 2 {
                h += coupling * c[i - 2];
            }
            if i + 2 < len {
                h += coupling * c[i + 2];
            }
            out[i] = Complex64::new(h.im, -h.re); // −i * h
        }
    }
}

fn integrate(
    lattice: &ModeLattice,
    initial: &ModeAmplitudes,
    cfg: &EvolutionConfig,
    step: f64,
    widenings: usize,
) -> Result<EvolutionRun> {
    let rhs = Rhs::new(lattice, &cfg.potential);
    let len = lattice.len();
    let mut c = initial.c.clone();
    let mut k1 = vec![Complex64::default(); len];
    let mut k2 = vec![Complex64::default(); len];
    let mut k3 = vec![Complex64::default(); len];
    let mut k4 = vec![Complex64::default(); len];
    let mut tmp = vec![Complex64::default(); len];

    let sample_times: Vec<f64> = (0..cfg.samples)
        .map(|i| cfg.total_time * i as f64 / (cfg.samples - 1) as f64)
        .collect();

    let mut samples = Vec::with_capacity(cfg.samples);
    let mut norm_drift: f64 = 0.0;
    let mut boundary_flag = false;
    // global phase from the uniform V(t)/2ħ diagonal term, integrated with
    // Simpson's rule in lockstep with the RK4 steps
    let mut phase = 0.0_f64;
    let mut t = 0.0_f64;

    let record = |c: &[Complex64],
                  t: f64,
                  phase: f64,
                  samples: &mut Vec<ModeAmplitudes>,
                  norm_drift: &mut f64,
                  boundary_flag: &mut bool| {
        let amps = if cfg.include_diagonal_offset {
            let rot = Complex64::from_polar(1.0, -phase);
            c.iter().map(|z| z * rot).collect()
        } else {
            c.to_vec()
        };
        let state = ModeAmplitudes {
            n_min: lattice.n_min,
            c: amps,
            time: t,
        };
        let drift = (state.norm_sq() - 1.0).abs();
        if drift > *norm_drift {
            *norm_drift = drift;
        }
        // outermost two modes per side: the coupling steps by two, so the
        // populated parity class may end one short of the lattice edge
        let edge = state
            .population(lattice.n_min)
            .max(state.population(lattice.n_min + 1))
            .max(state.population(lattice.n_max - 1))
            .max(state.population(lattice.n_max));
        if edge > cfg.boundary_tolerance {
            *boundary_flag = true;
        }
        samples.push(state);
    };

    record(&c, t, phase, &mut samples, &mut norm_drift, &mut boundary_flag);

    for pair in sample_times.windows(2) {
        let (t_start, t_end) = (pair[0], pair[1]);
        let span = t_end - t_start;
        let n_steps = (span / step).ceil().max(1.0) as usize;
        let h = span / n_steps as f64;
        for i in 0..n_steps {
            let t0 = t_start + i as f64 * h;
            // pin the last stage to the exact sample time so float
            // accumulation cannot step past a rectangular envelope's edge
            let t1 = if i + 1 == n_steps { t_end } else { t0 + h };
            rhs.eval(t0, &c, &mut k1);
            axpy(&c, &k1, 0.5 * h, &mut tmp);
            rhs.eval(t0 + 0.5 * h, &tmp, &mut k2);
            axpy(&c, &k2, 0.5 * h, &mut tmp);
            rhs.eval(t0 + 0.5 * h, &tmp, &mut k3);
            axpy(&c, &k3, h, &mut tmp);
            rhs.eval(t1, &tmp, &mut k4);
            for j in 0..len {
                c[j] += (k1[j] + 2.0 * (k2[j] + k3[j]) + k4[j]) * (h / 6.0);
            }
            let v = |tt: f64| {
                cfg.potential.sign * cfg.potential.depth * cfg.potential.envelope.value(tt)
                    / (2.0 * HBAR)
            };
            phase += h / 6.0 * (v(t0) + 4.0 * v(t0 + 0.5 * h) + v(t1));
        }
        t = t_end;
        record(&c, t, phase, &mut samples, &mut norm_drift, &mut boundary_flag);
    }

    Ok(EvolutionRun {
        samples,
        lattice: *lattice,
        norm_drift,
        step,
        widenings,
        boundary_flag,
    })
}

fn axpy(c: &[Complex64], k: &[Complex64], h: f64, out: &mut [Complex64]) {
    for i in 0..c.len() {
        out[i] = c[i] + k[i] * h;
    }
}

/// Closed-form amplitude of the ε → 0 (diffractive) limit from a c_0 = 1
/// start: Bessel functions of half the order index. Odd n are unreachable
/// and rejected.
pub fn bessel_solution(
    n: i32,
    depth: f64,
    t: f64,
    convention: BesselArgConvention,
) -> Result<Complex64> {
    if n % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "odd mode index {n} unreachable from c_0 = 1; only even n carry population"
        )));
    }
    let m = n / 2;
    let (phi, prefactor_base) = match convention {
        BesselArgConvention::HalfV0TOverHbar => {
            (depth * t / (2.0 * HBAR), Complex64::new(0.0, -1.0))
        }
        BesselArgConvention::V0TOverHbar => (depth * t / HBAR, Complex64::new(0.0, 1.0)),
    };
    let prefactor = prefactor_base.powi(m);
    let rotation = Complex64::from_polar(1.0, -phi);
    Ok(prefactor * rotation * bessel_j(m, phi))
}

/// Two-mode Pendellösung of the Bragg limit from a c_{+1} = 1 start:
/// c_{+1}(t) = e^{−iεt} cos(V0 t/4ħ), c_{−1}(t) = −i e^{−iεt} sin(V0 t/4ħ).
pub fn pendelloesung(depth: f64, epsilon: f64, t: f64) -> (Complex64, Complex64) {
    let phase = Complex64::from_polar(1.0, -epsilon * t);
    let angle = depth * t / (4.0 * HBAR);
    (
        phase * angle.cos(),
        Complex64::new(0.0, -1.0) * phase * angle.sin(),
    )
}

/// One row of a diffraction spectrum.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SpectrumRow {
    /// Lattice index n (momentum n ħk)
    pub n: i32,
    /// Diffraction order n/2 (half-integer for odd lattices)
    pub order: f64,
    pub probability: f64,
    /// Transverse momentum n ħk (kg·m/s)
    pub momentum: f64,
}

/// Far-field diffraction spectrum of a final state: order labels, populations
/// and transverse momenta. Adjacent populated orders differ by two photon
/// recoils.
pub fn diffraction_spectrum(state: &ModeAmplitudes, lattice: &ModeLattice, k: f64) -> Vec<SpectrumRow> {
    lattice
        .indices()
        .map(|n| SpectrumRow {
            n,
            order: n as f64 / 2.0,
            probability: state.population(n),
            momentum: n as f64 * HBAR * k,
        })
        .collect()
}

/// Which of the two canonical electron presets to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElectronRegime {
    /// Narrow waist, high intensity: many symmetric orders
    Diffractive,
    /// Wide waist, low intensity, incidence at the Bragg angle: two orders
    Bragg,
}

/// Fully resolved preset parameters plus run products.
#[derive(Debug, Clone)]
pub struct ElectronPresetRun {
    pub regime: ElectronRegime,
    pub beam: crate::field::LaserBeam,
    pub velocity: f64,
    pub epsilon: f64,
    pub depth: f64,
    pub transit: f64,
    pub run: EvolutionRun,
}

/// The 10 eV electron presets: λ = 1064 nm with a Gaussian envelope;
/// diffractive uses w = 0.005 cm at 1e13 W/m², Bragg w = 0.5 cm at 1e11 W/m²
/// (incident at the Bragg angle, n = +1).
pub fn electron_preset_run(regime: ElectronRegime) -> Result<ElectronPresetRun> {
    use crate::constants::{ELECTRON_MASS, ELEMENTARY_CHARGE, EV};

    let (waist, intensity) = match regime {
        ElectronRegime::Diffractive => (0.005e-2, 1.0e13),
        ElectronRegime::Bragg => (0.5e-2, 1.0e11),
    };
    let beam = crate::field::LaserBeam::new(1.064e-6, intensity, waist, 1e-3)?;
    let velocity = crate::kinematics::velocity_from_kinetic_energy(10.0 * EV, ELECTRON_MASS)?;
    let epsilon = crate::kinematics::recoil_frequency(ELECTRON_MASS, beam.wavelength)?;
    let depth = crate::potential::ponderomotive_depth(&beam, -ELEMENTARY_CHARGE, ELECTRON_MASS)?;
    let transit = crate::kinematics::interaction_time(beam.waist, velocity)?;

    let sw = beam.standing_wave();
    let envelope = Envelope::Gaussian { transit };
    let spec = PotentialSpec::new(depth, sw.k, crate::potential::PotentialKind::Ponderomotive, envelope)?;
    let lattice = ModeLattice::auto(depth, transit, 0.0, epsilon)?;
    let start = match regime {
        ElectronRegime::Diffractive => 0,
        ElectronRegime::Bragg => 1,
    };
    let initial = ModeAmplitudes::single(&lattice, start)?;
    let cfg = EvolutionConfig::for_potential(spec);
    let run = evolve(&lattice, &initial, &cfg)?;
    Ok(ElectronPresetRun {
        regime,
        beam,
        velocity,
        epsilon,
        depth,
        transit,
        run,
    })
}
