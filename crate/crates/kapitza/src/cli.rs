//! Command-line front end: validated run configs in, CSV + JSON metadata out.
//!
//! Each subcommand accepts flags and/or a JSON config file (`--config`);
//! explicit flags override file values, unknown config keys are rejected, and
//! the fully resolved configuration is echoed into the run metadata. Exit
//! codes: 0 success, 2 validation error, 3 numerical failure; errors go to
//! stderr as one JSON object.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::constants::{HBAR, PLANCK_H};
use crate::error::{Error, Result};
use crate::field::LaserBeam;
use crate::output::{fmt_sci, write_csv, ConventionFlags, RunMeta};
use crate::particle::{builtin, builtin_names, load_line_list, Particle};
use crate::potential::{
    multiline_lightshift, ponderomotive_depth, Envelope, FieldAmplitudeConvention, PotentialKind,
    PotentialSpec,
};
use crate::quantum::{
    diffraction_spectrum, electron_preset_run, evolve, ElectronRegime, EvolutionConfig,
    ModeAmplitudes, ModeLattice,
};

/// Environment variable holding the default output directory.
pub const OUTPUT_DIR_ENV: &str = "KAPITZA_OUTPUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "kapitza", version, about = "Kapitza-Dirac scattering toolkit")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output directory (default: $KAPITZA_OUTPUT_DIR or '.')
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    /// JSON config file; explicit flags override its values
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Interaction potential depths for a particle in a laser beam
    Potential(PotentialArgs),
    /// Evolve the coupled diffraction-order amplitudes and emit spectra
    Diffract(DiffractArgs),
    /// Classical trajectory ensemble and deflection histogram
    Trajectories(TrajectoriesArgs),
    /// Regime classification of a parameter-plane point, or a map export
    Classify(ClassifyArgs),
    /// Sagnac rotation-sensing resolution and sensitivity
    Sagnac(SagnacArgs),
    /// Row-by-row comparison against the published design tables
    Tables(TablesArgs),
    /// Reproduce a named figure's data set
    Figure(FigureArgs),
    /// List builtin particles and presets
    Builtins,
}

/// Run the CLI; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version; other parse failures are
            // validation errors
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            emit_error(&Error::Config(e.to_string()));
            return 2;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            emit_error(&e);
            e.exit_code()
        }
    }
}

fn emit_error(e: &Error) {
    let json = serde_json::json!({
        "error": {
            "kind": e.kind(),
            "code": e.exit_code(),
            "message": e.to_string(),
        }
    });
    eprintln!("{json}");
}

fn out_dir(cli_dir: &Option<PathBuf>) -> PathBuf {
    cli_dir
        .clone()
        .or_else(|| std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."))
}

fn dispatch(cli: Cli) -> Result<()> {
    let dir = out_dir(&cli.out_dir);
    std::fs::create_dir_all(&dir)?;
    match cli.command {
        Command::Potential(args) => {
            let cfg: PotentialConfig = resolve(cli.config.as_deref(), "potential", args)?;
            run_potential(&dir, cfg)
        }
        Command::Diffract(args) => {
            let cfg: DiffractConfig = resolve(cli.config.as_deref(), "diffract", args)?;
            run_diffract(&dir, cfg)
        }
        Command::Trajectories(args) => {
            let cfg: TrajectoriesConfig = resolve(cli.config.as_deref(), "trajectories", args)?;
            run_trajectories(&dir, cfg)
        }
        Command::Classify(args) => {
            let cfg: ClassifyConfig = resolve(cli.config.as_deref(), "classify", args)?;
            run_classify(&dir, cfg)
        }
        Command::Sagnac(args) => {
            let cfg: SagnacCliConfig = resolve(cli.config.as_deref(), "sagnac", args)?;
            run_sagnac(&dir, cfg)
        }
        Command::Tables(args) => {
            let cfg: TablesConfig = resolve(cli.config.as_deref(), "tables", args)?;
            run_tables(&dir, cfg)
        }
        Command::Figure(args) => {
            let cfg: FigureConfig = resolve(cli.config.as_deref(), "figure", args)?;
            run_figure(&dir, cfg)
        }
        Command::Builtins => run_builtins(),
    }
}

/// Overlay semantics shared by all subcommands: serde defaults, then the
/// config file, then explicit flags.
trait Overlay: Sized {
    type Config: for<'de> Deserialize<'de> + Default;
    fn overlay(self, base: Self::Config) -> Self::Config;
}

/// A config file is one JSON object: {"command": "<name>", "params": {...}}.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    command: String,
    params: serde_json::Value,
}

fn resolve<A: Overlay>(config: Option<&Path>, command: &str, args: A) -> Result<A::Config> {
    let base = match config {
        None => A::Config::default(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
            let file: ConfigFile = serde_json::from_str(&text)
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            if file.command != command {
                return Err(Error::Config(format!(
                    "config file is for '{}', invoked as '{command}'",
                    file.command
                )));
            }
            serde_json::from_value(file.params)
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?
        }
    };
    Ok(args.overlay(base))
}

// ---------------------------------------------------------------- potential

#[derive(Debug, Args)]
struct PotentialArgs {
    /// Builtin particle name (see `kapitza builtins`)
    #[arg(long)]
    particle: Option<String>,
    /// Laser wavelength (nm)
    #[arg(long)]
    wavelength_nm: Option<f64>,
    /// Laser intensity (W/m^2)
    #[arg(long)]
    intensity: Option<f64>,
    /// Beam waist (m)
    #[arg(long)]
    waist_m: Option<f64>,
    /// Beam height (m)
    #[arg(long)]
    height_m: Option<f64>,
    /// Resonance line list file (JSON or text) for lightshift particles
    #[arg(long)]
    lines: Option<PathBuf>,
    /// Longitudinal velocity (m/s) for the interaction-time product
    #[arg(long)]
    velocity: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct PotentialConfig {
    particle: String,
    wavelength_nm: f64,
    intensity: f64,
    waist_m: f64,
    height_m: f64,
    lines: Option<PathBuf>,
    velocity: Option<f64>,
}

impl Default for PotentialConfig {
    fn default() -> Self {
        Self {
            particle: "electron".into(),
            wavelength_nm: 1064.0,
            intensity: 1.0e11,
            waist_m: 0.5e-2,
            height_m: 1e-3,
            lines: None,
            velocity: None,
        }
    }
}

impl Overlay for PotentialArgs {
    type Config = PotentialConfig;
    fn overlay(self, mut base: PotentialConfig) -> PotentialConfig {
        if let Some(v) = self.particle {
            base.particle = v;
        }
        if let Some(v) = self.wavelength_nm {
            base.wavelength_nm = v;
        }
        if let Some(v) = self.intensity {
            base.intensity = v;
        }
        if let Some(v) = self.waist_m {
            base.waist_m = v;
        }
        if let Some(v) = self.height_m {
            base.height_m = v;
        }
        if let Some(v) = self.lines {
            base.lines = Some(v);
        }
        if let Some(v) = self.velocity {
            base.velocity = Some(v);
        }
        base
    }
}

fn resolve_particle(name: &str, lines: &Option<PathBuf>) -> Result<Particle> {
    let p = builtin(name)
        .ok_or_else(|| Error::Config(format!("unknown particle '{name}'; see `kapitza builtins`")))?;
    match lines {
        None => Ok(p),
        Some(path) => p.with_lines(load_line_list(path)?),
    }
}

#[derive(Debug, Serialize)]
struct PotentialReport {
    particle: String,
    vector_potential_a0: f64,
    field_amplitude_e0: f64,
    potential_kind: PotentialKind,
    depth_j: f64,
    depth_over_hbar_rad_s: f64,
    depth_over_h_hz: f64,
    interaction_time_s: Option<f64>,
    critical_product_v_dt_over_hbar: Option<f64>,
}

fn run_potential(dir: &Path, cfg: PotentialConfig) -> Result<()> {
    let particle = resolve_particle(&cfg.particle, &cfg.lines)?;
    let beam = LaserBeam::new(cfg.wavelength_nm * 1e-9, cfg.intensity, cfg.waist_m, cfg.height_m)?;
    let sw = beam.standing_wave();
    let (kind, depth) = if particle.lines.is_empty() {
        if particle.charge == 0.0 {
            return Err(Error::Config(format!(
                "particle '{}' is neutral and has no line list; supply --lines",
                particle.name
            )));
        }
        (
            PotentialKind::Ponderomotive,
            ponderomotive_depth(&beam, particle.charge, particle.mass)?,
        )
    } else {
        (
            PotentialKind::Lightshift,
            multiline_lightshift(&beam, &particle, FieldAmplitudeConvention::StandingWave)?,
        )
    };
    let dt = cfg.velocity.map(|v| beam.waist / v);
    let report = PotentialReport {
        particle: particle.name.clone(),
        vector_potential_a0: sw.a0,
        field_amplitude_e0: sw.e0(),
        potential_kind: kind,
        depth_j: depth,
        depth_over_hbar_rad_s: depth / HBAR,
        depth_over_h_hz: depth / PLANCK_H,
        interaction_time_s: dt,
        critical_product_v_dt_over_hbar: dt.map(|t| (depth / HBAR * t).abs()),
    };
    #[derive(Serialize)]
    struct Payload {
        config: PotentialConfig,
        result: PotentialReport,
    }
    RunMeta::new(Payload {
        config: cfg,
        result: report,
    })
    .write(dir.join("potential.json"))?;
    println!("wrote {}", dir.join("potential.json").display());
    Ok(())
}

// ----------------------------------------------------------------- diffract

#[derive(Debug, Args)]
struct DiffractArgs {
    #[arg(long)]
    particle: Option<String>,
    #[arg(long)]
    wavelength_nm: Option<f64>,
    #[arg(long)]
    intensity: Option<f64>,
    #[arg(long)]
    waist_m: Option<f64>,
    /// Electron kinetic energy (eV); alternative to --velocity
    #[arg(long)]
    energy_ev: Option<f64>,
    #[arg(long)]
    velocity: Option<f64>,
    /// Envelope: rectangular | gaussian
    #[arg(long)]
    envelope: Option<String>,
    /// Incident lattice index (0 for normal incidence, 1 for the Bragg angle)
    #[arg(long)]
    incident_order: Option<i32>,
    /// Fractional momentum offset delta in units of hbar k
    #[arg(long)]
    offset_delta: Option<f64>,
    #[arg(long)]
    lines: Option<PathBuf>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct DiffractConfig {
    particle: String,
    wavelength_nm: f64,
    intensity: f64,
    waist_m: f64,
    height_m: f64,
    energy_ev: Option<f64>,
    velocity: Option<f64>,
    envelope: String,
    incident_order: i32,
    offset_delta: f64,
    lines: Option<PathBuf>,
    norm_tolerance: f64,
    boundary_tolerance: f64,
    samples: usize,
    include_diagonal_offset: bool,
    /// Half-width of the mode lattice; 0 sizes it automatically
    lattice_half: i32,
}

impl Default for DiffractConfig {
    fn default() -> Self {
        Self {
            particle: "electron".into(),
            wavelength_nm: 1064.0,
            intensity: 1.0e13,
            waist_m: 0.005e-2,
            height_m: 1e-3,
            energy_ev: Some(10.0),
            velocity: None,
            envelope: "gaussian".into(),
            incident_order: 0,
            offset_delta: 0.0,
            lines: None,
            norm_tolerance: 1e-9,
            boundary_tolerance: 1e-10,
            samples: 257,
            include_diagonal_offset: true,
            lattice_half: 0,
        }
    }
}

impl Overlay for DiffractArgs {
    type Config = DiffractConfig;
    fn overlay(self, mut base: DiffractConfig) -> DiffractConfig {
        if let Some(v) = self.particle {
            base.particle = v;
        }
        if let Some(v) = self.wavelength_nm {
            base.wavelength_nm = v;
        }
        if let Some(v) = self.intensity {
            base.intensity = v;
        }
        if let Some(v) = self.waist_m {
            base.waist_m = v;
        }
        if let Some(v) = self.energy_ev {
            base.energy_ev = Some(v);
            base.velocity = None;
        }
        if let Some(v) = self.velocity {
            base.velocity = Some(v);
            base.energy_ev = None;
        }
        if let Some(v) = self.envelope {
            base.envelope = v;
        }
        if let Some(v) = self.incident_order {
            base.incident_order = v;
        }
        if let Some(v) = self.offset_delta {
            base.offset_delta = v;
        }
        if let Some(v) = self.lines {
            base.lines = Some(v);
        }
        base
    }
}

#[derive(Debug, Serialize)]
struct DiffractDiagnostics {
    depth_j: f64,
    epsilon_rad_s: f64,
    transit_s: f64,
    lattice_n_min: i32,
    lattice_n_max: i32,
    norm_drift: f64,
    integrator_step_s: f64,
    lattice_widenings: usize,
}

fn run_diffract(dir: &Path, cfg: DiffractConfig) -> Result<()> {
    let particle = resolve_particle(&cfg.particle, &cfg.lines)?;
    let beam = LaserBeam::new(cfg.wavelength_nm * 1e-9, cfg.intensity, cfg.waist_m, cfg.height_m)?;
    let velocity = match (cfg.velocity, cfg.energy_ev) {
        (Some(v), _) => v,
        (None, Some(ev)) => crate::kinematics::velocity_from_kinetic_energy(
            ev * crate::constants::EV,
            particle.mass,
        )?,
        (None, None) => {
            return Err(Error::Config("need either velocity or energy_ev".into()));
        }
    };
    let depth = if particle.lines.is_empty() {
        if particle.charge == 0.0 {
            return Err(Error::Config(format!(
                "particle '{}' is neutral and has no line list; supply --lines",
                particle.name
            )));
        }
        ponderomotive_depth(&beam, particle.charge, particle.mass)?
    } else {
        multiline_lightshift(&beam, &particle, FieldAmplitudeConvention::StandingWave)?
    };
    let transit = crate::kinematics::interaction_time(beam.waist, velocity)?;
    let envelope = match cfg.envelope.as_str() {
        "gaussian" => Envelope::Gaussian { transit },
        "rectangular" => Envelope::Rectangular { duration: transit },
        other => {
            return Err(Error::Config(format!(
                "unknown envelope '{other}' (expected rectangular | gaussian)"
            )));
        }
    };
    let sw = beam.standing_wave();
    let kind = if particle.lines.is_empty() {
        PotentialKind::Ponderomotive
    } else {
        PotentialKind::Lightshift
    };
    let spec = PotentialSpec::from_signed_depth(depth, sw.k, kind, envelope)?;
    let epsilon = crate::kinematics::recoil_frequency(particle.mass, beam.wavelength)?;
    let lattice = if cfg.lattice_half > 0 {
        ModeLattice::new(-cfg.lattice_half, cfg.lattice_half, cfg.offset_delta, epsilon)?
    } else {
        ModeLattice::auto(spec.depth, transit, cfg.offset_delta, epsilon)?
    };
    let initial = ModeAmplitudes::single(&lattice, cfg.incident_order)?;
    let run_cfg = EvolutionConfig {
        norm_tolerance: cfg.norm_tolerance,
        boundary_tolerance: cfg.boundary_tolerance,
        samples: cfg.samples,
        include_diagonal_offset: cfg.include_diagonal_offset,
        ..EvolutionConfig::for_potential(spec)
    };
    let run = evolve(&lattice, &initial, &run_cfg)?;

    let flags = ConventionFlags::default();
    let mut series_rows = Vec::new();
    for state in &run.samples {
        for n in run.lattice.indices() {
            series_rows.push(vec![
                fmt_sci(state.time),
                fmt_sci(n as f64 / 2.0),
                fmt_sci(state.population(n)),
            ]);
        }
    }
    write_csv(
        dir.join("timeseries.csv"),
        &flags,
        &["time_s", "order", "probability"],
        series_rows,
    )?;
    let spectrum = diffraction_spectrum(run.final_state(), &run.lattice, sw.k);
    write_csv(
        dir.join("spectrum.csv"),
        &flags,
        &["n", "order", "probability", "momentum_kg_m_s"],
        spectrum.iter().map(|r| {
            vec![
                r.n.to_string(),
                fmt_sci(r.order),
                fmt_sci(r.probability),
                fmt_sci(r.momentum),
            ]
        }),
    )?;
    #[derive(Serialize)]
    struct Payload {
        config: DiffractConfig,
        diagnostics: DiffractDiagnostics,
    }
    RunMeta::new(Payload {
        diagnostics: DiffractDiagnostics {
            depth_j: depth,
            epsilon_rad_s: epsilon,
            transit_s: transit,
            lattice_n_min: run.lattice.n_min,
            lattice_n_max: run.lattice.n_max,
            norm_drift: run.norm_drift,
            integrator_step_s: run.step,
            lattice_widenings: run.widenings,
        },
        config: cfg,
    })
    .write(dir.join("run.json"))?;
    println!(
        "wrote {}, {}, {}",
        dir.join("timeseries.csv").display(),
        dir.join("spectrum.csv").display(),
        dir.join("run.json").display()
    );
    Ok(())
}

// ------------------------------------------------------------- trajectories

#[derive(Debug, Args)]
struct TrajectoriesArgs {
    #[arg(long)]
    particle: Option<String>,
    #[arg(long)]
    wavelength_nm: Option<f64>,
    /// Potential depth as V0/hbar (rad/s); overrides beam-derived depth
    #[arg(long)]
    depth_over_hbar: Option<f64>,
    #[arg(long)]
    intensity: Option<f64>,
    #[arg(long)]
    waist_m: Option<f64>,
    #[arg(long)]
    velocity: Option<f64>,
    /// Interaction duration (s); defaults to waist / velocity
    #[arg(long)]
    duration_s: Option<f64>,
    #[arg(long)]
    envelope: Option<String>,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    bins: Option<usize>,
    /// Histogram half-range (rad); defaults to 3 rainbow angles
    #[arg(long)]
    angle_range: Option<f64>,
    /// Also write sampled trajectory paths (t, x, v_x)
    #[arg(long)]
    emit_paths: bool,
    #[arg(long)]
    paths_limit: Option<usize>,
    #[arg(long)]
    lines: Option<PathBuf>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct TrajectoriesConfig {
    particle: String,
    wavelength_nm: f64,
    depth_over_hbar: Option<f64>,
    intensity: f64,
    waist_m: f64,
    height_m: f64,
    velocity: f64,
    duration_s: Option<f64>,
    envelope: String,
    count: usize,
    seed: u64,
    bins: usize,
    angle_range: Option<f64>,
    emit_paths: bool,
    paths_limit: usize,
    lines: Option<PathBuf>,
}

impl Default for TrajectoriesConfig {
    fn default() -> Self {
        Self {
            particle: "Na".into(),
            wavelength_nm: 589.0,
            depth_over_hbar: Some(1.0e6),
            intensity: 0.0,
            waist_m: 100e-6,
            height_m: 1e-3,
            velocity: 1000.0,
            duration_s: Some(3.784e-7),
            envelope: "rectangular".into(),
            count: 20_000,
            seed: 1,
            bins: 201,
            angle_range: None,
            emit_paths: false,
            paths_limit: 10,
            lines: None,
        }
    }
}

impl Overlay for TrajectoriesArgs {
    type Config = TrajectoriesConfig;
    fn overlay(self, mut base: TrajectoriesConfig) -> TrajectoriesConfig {
        if let Some(v) = self.particle {
            base.particle = v;
        }
        if let Some(v) = self.wavelength_nm {
            base.wavelength_nm = v;
        }
        if let Some(v) = self.depth_over_hbar {
            base.depth_over_hbar = Some(v);
        }
        if let Some(v) = self.intensity {
            base.intensity = v;
            base.depth_over_hbar = None;
        }
        if let Some(v) = self.waist_m {
            base.waist_m = v;
        }
        if let Some(v) = self.velocity {
            base.velocity = v;
        }
        if let Some(v) = self.duration_s {
            base.duration_s = Some(v);
        }
        if let Some(v) = self.envelope {
            base.envelope = v;
        }
        if let Some(v) = self.count {
            base.count = v;
        }
        if let Some(v) = self.seed {
            base.seed = v;
        }
        if let Some(v) = self.bins {
            base.bins = v;
        }
        if let Some(v) = self.angle_range {
            base.angle_range = Some(v);
        }
        if self.emit_paths {
            base.emit_paths = true;
        }
        if let Some(v) = self.paths_limit {
            base.paths_limit = v;
        }
        if let Some(v) = self.lines {
            base.lines = Some(v);
        }
        base
    }
}

#[derive(Debug, Serialize)]
struct TrajectoriesDiagnostics {
    depth_j: f64,
    rainbow_angle_rad: f64,
    rainbow_regime_warning: bool,
    oscillation_frequency_rad_s: f64,
    max_energy_drift: f64,
}

fn run_trajectories(dir: &Path, cfg: TrajectoriesConfig) -> Result<()> {
    use crate::classical::{
        ensemble_histogram, integrate_trajectory, rainbow_angle, EnsembleConfig, TrajectoryConfig,
    };
    let particle = resolve_particle(&cfg.particle, &cfg.lines)?;
    let wavelength = cfg.wavelength_nm * 1e-9;
    let k = 2.0 * std::f64::consts::PI / wavelength;
    let depth = match cfg.depth_over_hbar {
        Some(rate) => rate * HBAR,
        None => {
            let beam = LaserBeam::new(wavelength, cfg.intensity, cfg.waist_m, cfg.height_m)?;
            if particle.lines.is_empty() {
                if particle.charge == 0.0 {
                    return Err(Error::Config(format!(
                        "particle '{}' is neutral and has no line list; supply --lines or --depth-over-hbar",
                        particle.name
                    )));
                }
                ponderomotive_depth(&beam, particle.charge, particle.mass)?
            } else {
                multiline_lightshift(&beam, &particle, FieldAmplitudeConvention::StandingWave)?
            }
        }
    };
    let duration = match cfg.duration_s {
        Some(d) => d,
        None => crate::kinematics::interaction_time(cfg.waist_m, cfg.velocity)?,
    };
    let envelope = match cfg.envelope.as_str() {
        "rectangular" => Envelope::Rectangular { duration },
        "gaussian" => Envelope::Gaussian { transit: duration },
        other => {
            return Err(Error::Config(format!(
                "unknown envelope '{other}' (expected rectangular | gaussian)"
            )));
        }
    };
    let spec = PotentialSpec::from_signed_depth(depth, k, PotentialKind::Lightshift, envelope)?;
    let template = TrajectoryConfig::new(spec, particle.mass, cfg.velocity)?;
    let rainbow = rainbow_angle(&template);
    let range = match cfg.angle_range {
        Some(r) => r,
        None if rainbow.angle > 0.0 => 3.0 * rainbow.angle,
        None => 1e-5,
    };
    let ens = EnsembleConfig::uniform(cfg.count, cfg.seed, cfg.bins, range)?;
    let hist = ensemble_histogram(&ens, &template)?;

    let flags = ConventionFlags::default();
    write_csv(
        dir.join("histogram.csv"),
        &flags,
        &["bin_center_rad", "count"],
        (0..hist.counts.len())
            .map(|i| vec![fmt_sci(hist.bin_center(i)), hist.counts[i].to_string()]),
    )?;
    if cfg.emit_paths {
        let period = template.potential.period();
        let mut rows = Vec::new();
        for i in 0..cfg.paths_limit.min(cfg.count) {
            let frac = (i as f64 + 0.5) / cfg.paths_limit.min(cfg.count) as f64;
            let tr = integrate_trajectory(&template.with_x0(frac * period), true)?;
            for (t, x, v) in tr.path.expect("path requested") {
                rows.push(vec![
                    i.to_string(),
                    fmt_sci(t),
                    fmt_sci(x),
                    fmt_sci(v),
                ]);
            }
        }
        write_csv(
            dir.join("paths.csv"),
            &flags,
            &["trajectory", "t_s", "x_m", "v_x_m_s"],
            rows,
        )?;
    }
    #[derive(Serialize)]
    struct Payload {
        config: TrajectoriesConfig,
        diagnostics: TrajectoriesDiagnostics,
    }
    RunMeta::new(Payload {
        diagnostics: TrajectoriesDiagnostics {
            depth_j: depth,
            rainbow_angle_rad: rainbow.angle,
            rainbow_regime_warning: rainbow.regime_warning,
            oscillation_frequency_rad_s: template.oscillation_frequency(),
            max_energy_drift: hist.max_energy_drift,
        },
        config: cfg,
    })
    .write(dir.join("run.json"))?;
    println!(
        "wrote {} and {}",
        dir.join("histogram.csv").display(),
        dir.join("run.json").display()
    );
    Ok(())
}

// ----------------------------------------------------------------- classify

#[derive(Debug, Args)]
struct ClassifyArgs {
    /// Published point id (A..I)
    #[arg(long)]
    point: Option<String>,
    /// Potential depth U (cyclic MHz)
    #[arg(long)]
    u_mhz: Option<f64>,
    /// Interaction rate 1/dt (cyclic MHz)
    #[arg(long)]
    inv_dt_mhz: Option<f64>,
    /// Recoil frequency (cyclic kHz)
    #[arg(long)]
    epsilon_khz: Option<f64>,
    /// Also export the regime map grid CSV
    #[arg(long)]
    map: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields, default)]
struct ClassifyConfig {
    point: Option<String>,
    u_mhz: Option<f64>,
    inv_dt_mhz: Option<f64>,
    epsilon_khz: Option<f64>,
    map: bool,
}

impl Overlay for ClassifyArgs {
    type Config = ClassifyConfig;
    fn overlay(self, mut base: ClassifyConfig) -> ClassifyConfig {
        if let Some(v) = self.point {
            base.point = Some(v);
        }
        if let Some(v) = self.u_mhz {
            base.u_mhz = Some(v);
        }
        if let Some(v) = self.inv_dt_mhz {
            base.inv_dt_mhz = Some(v);
        }
        if let Some(v) = self.epsilon_khz {
            base.epsilon_khz = Some(v);
        }
        if self.map {
            base.map = true;
        }
        base
    }
}

fn run_classify(dir: &Path, cfg: ClassifyConfig) -> Result<()> {
    use crate::regime::{classify_regime, regime_map, RegimePoint, RegimeThresholds, PUBLISHED_POINTS};
    let thresholds = RegimeThresholds::default();

    let point = match (&cfg.point, cfg.u_mhz, cfg.inv_dt_mhz, cfg.epsilon_khz) {
        (Some(id), None, None, None) => {
            let pp = PUBLISHED_POINTS
                .iter()
                .find(|p| p.id.eq_ignore_ascii_case(id))
                .ok_or_else(|| Error::Config(format!("unknown published point '{id}' (A..I)")))?;
            Some(pp.point())
        }
        (None, Some(u), Some(inv), Some(eps)) => Some(RegimePoint::from_cyclic_mhz_khz(u, inv, eps)?),
        (None, None, None, None) if cfg.map => None,
        _ => {
            return Err(Error::Config(
                "give either --point A..I, or all of --u-mhz --inv-dt-mhz --epsilon-khz, or --map"
                    .into(),
            ));
        }
    };

    if let Some(p) = point {
        let label = classify_regime(&p, &thresholds);
        let (x, y) = p.coordinates()?;
        #[derive(Serialize)]
        struct Payload {
            config: ClassifyConfig,
            u_over_eps: f64,
            inv_eps_dt: f64,
            critical_product_u_dt: f64,
            label: &'static str,
        }
        RunMeta::new(Payload {
            config: cfg.clone(),
            u_over_eps: x,
            inv_eps_dt: y,
            critical_product_u_dt: p.critical_product(),
            label: label.as_str(),
        })
        .write(dir.join("classification.json"))?;
        println!("{}", label.as_str());
    }
    if cfg.map {
        let rows = regime_map(&thresholds, (0.1, 1e6), (0.01, 100.0), 6)?;
        write_csv(
            dir.join("regime_map.csv"),
            &ConventionFlags::default(),
            &["u_over_eps", "inv_eps_dt", "label", "point"],
            rows.iter().map(|r| {
                vec![
                    fmt_sci(r.u_over_eps),
                    fmt_sci(r.inv_eps_dt),
                    r.label.as_str().to_string(),
                    r.point.unwrap_or("").to_string(),
                ]
            }),
        )?;
        println!("wrote {}", dir.join("regime_map.csv").display());
    }
    Ok(())
}

// ------------------------------------------------------------------- sagnac

#[derive(Debug, Args)]
struct SagnacArgs {
    /// Grating period (nm); sets k_g = 2 pi / period
    #[arg(long)]
    grating_period_nm: Option<f64>,
    /// Grating separation L (m)
    #[arg(long)]
    length_m: Option<f64>,
    #[arg(long)]
    velocity: Option<f64>,
    /// Fringe contrast in (0, 1]
    #[arg(long)]
    contrast: Option<f64>,
    /// Detected count rate (1/s)
    #[arg(long)]
    count_rate: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct SagnacCliConfig {
    grating_period_nm: f64,
    length_m: f64,
    velocity: f64,
    contrast: f64,
    count_rate: f64,
}

impl Default for SagnacCliConfig {
    fn default() -> Self {
        Self {
            grating_period_nm: 500.0,
            length_m: 0.25,
            velocity: 700.0,
            contrast: 0.2,
            count_rate: 1.0e4,
        }
    }
}

impl Overlay for SagnacArgs {
    type Config = SagnacCliConfig;
    fn overlay(self, mut base: SagnacCliConfig) -> SagnacCliConfig {
        if let Some(v) = self.grating_period_nm {
            base.grating_period_nm = v;
        }
        if let Some(v) = self.length_m {
            base.length_m = v;
        }
        if let Some(v) = self.velocity {
            base.velocity = v;
        }
        if let Some(v) = self.contrast {
            base.contrast = v;
        }
        if let Some(v) = self.count_rate {
            base.count_rate = v;
        }
        base
    }
}

fn run_sagnac(dir: &Path, cfg: SagnacCliConfig) -> Result<()> {
    use crate::interferometry::{sagnac_resolution, sagnac_sensitivity, SagnacConfig};
    let sc = SagnacConfig::new(
        2.0 * std::f64::consts::PI / (cfg.grating_period_nm * 1e-9),
        cfg.length_m,
        cfg.velocity,
        cfg.contrast,
        cfg.count_rate,
    )?;
    let r = sagnac_resolution(&sc);
    let s = sagnac_sensitivity(&sc);
    #[derive(Serialize)]
    struct Payload {
        config: SagnacCliConfig,
        resolution_s: f64,
        sensitivity_rad_s_per_sqrt_hz: f64,
        sensitivity_earth_rotations: f64,
    }
    RunMeta::new(Payload {
        config: cfg,
        resolution_s: r,
        sensitivity_rad_s_per_sqrt_hz: s.sensitivity,
        sensitivity_earth_rotations: s.in_earth_rotations,
    })
    .write(dir.join("sagnac.json"))?;
    println!(
        "R = {} s, S = {} rad/s/sqrt(Hz) = {} earth rotations / sqrt(s)",
        fmt_sci(r),
        fmt_sci(s.sensitivity),
        fmt_sci(s.in_earth_rotations)
    );
    Ok(())
}

// ------------------------------------------------------------------- tables

#[derive(Debug, Args)]
struct TablesArgs {
    /// Which table to reproduce: 1, 2 or 3
    #[arg(long)]
    id: Option<u8>,
    /// Species for table 2 (Na, Ar*, Ca+, Li+, Ba+)
    #[arg(long)]
    species: Option<String>,
    /// Line-list file for table 2 rows
    #[arg(long)]
    lines: Option<PathBuf>,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields, default)]
struct TablesConfig {
    id: Option<u8>,
    species: Option<String>,
    lines: Option<PathBuf>,
}

impl Overlay for TablesArgs {
    type Config = TablesConfig;
    fn overlay(self, mut base: TablesConfig) -> TablesConfig {
        if let Some(v) = self.id {
            base.id = Some(v);
        }
        if let Some(v) = self.species {
            base.species = Some(v);
        }
        if let Some(v) = self.lines {
            base.lines = Some(v);
        }
        base
    }
}

fn run_tables(dir: &Path, cfg: TablesConfig) -> Result<()> {
    use crate::tables::{high_intensity_presets, reproduce_tables, TablesRequest};
    let id = cfg
        .id
        .ok_or_else(|| Error::Config("need --id 1|2|3".into()))?;
    let mut request = TablesRequest::default();
    match id {
        1 => request.recoil = true,
        3 => request.electron_design = true,
        2 => {
            let species = cfg
                .species
                .clone()
                .ok_or_else(|| Error::Config("table 2 needs --species".into()))?;
            let preset = high_intensity_presets()
                .into_iter()
                .find(|p| p.species.eq_ignore_ascii_case(&species))
                .ok_or_else(|| Error::Config(format!("unknown table-2 species '{species}'")))?;
            let lines_path = cfg.lines.clone().ok_or_else(|| {
                Error::Config(format!(
                    "table-2 row '{}' requires a line list (--lines)",
                    preset.species
                ))
            })?;
            request
                .high_intensity
                .push((preset, load_line_list(&lines_path)?));
        }
        other => return Err(Error::Config(format!("unknown table id {other}"))),
    }
    let rows = reproduce_tables(&request)?;
    let path = dir.join(format!("table{id}.csv"));
    write_csv(
        &path,
        &ConventionFlags::default(),
        &["table", "row", "quantity", "computed", "published", "ratio", "unit"],
        rows.iter().map(|r| {
            vec![
                r.table.to_string(),
                r.row.clone(),
                r.quantity.clone(),
                fmt_sci(r.computed),
                fmt_sci(r.published),
                fmt_sci(r.ratio),
                r.unit.to_string(),
            ]
        }),
    )?;
    #[derive(Serialize)]
    struct Payload {
        config: TablesConfig,
        rows: usize,
    }
    RunMeta::new(Payload {
        config: cfg,
        rows: rows.len(),
    })
    .write(dir.join("run.json"))?;
    println!("wrote {}", path.display());
    Ok(())
}

// ------------------------------------------------------------------- figure

#[derive(Debug, Args)]
struct FigureArgs {
    /// Figure id: 5 | 7-left | 7-right | 8
    #[arg(long)]
    id: Option<String>,
    /// Trajectory count for figure 8
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct FigureConfig {
    id: String,
    count: usize,
    seed: u64,
}

impl Default for FigureConfig {
    fn default() -> Self {
        Self {
            id: "7-left".into(),
            count: 20_000,
            seed: 8,
        }
    }
}

impl Overlay for FigureArgs {
    type Config = FigureConfig;
    fn overlay(self, mut base: FigureConfig) -> FigureConfig {
        if let Some(v) = self.id {
            base.id = v;
        }
        if let Some(v) = self.count {
            base.count = v;
        }
        if let Some(v) = self.seed {
            base.seed = v;
        }
        base
    }
}

fn run_figure(dir: &Path, cfg: FigureConfig) -> Result<()> {
    match cfg.id.as_str() {
        "7-left" => figure7(dir, &cfg, ElectronRegime::Diffractive),
        "7-right" => figure7(dir, &cfg, ElectronRegime::Bragg),
        "5" => {
            let rows = crate::regime::regime_map(
                &crate::regime::RegimeThresholds::default(),
                (0.1, 1e6),
                (0.01, 100.0),
                6,
            )?;
            let path = dir.join("figure5_regime_map.csv");
            write_csv(
                &path,
                &ConventionFlags::default(),
                &["u_over_eps", "inv_eps_dt", "label", "point"],
                rows.iter().map(|r| {
                    vec![
                        fmt_sci(r.u_over_eps),
                        fmt_sci(r.inv_eps_dt),
                        r.label.as_str().to_string(),
                        r.point.unwrap_or("").to_string(),
                    ]
                }),
            )?;
            println!("wrote {}", path.display());
            Ok(())
        }
        "8" => {
            use crate::classical::{ensemble_histogram, rainbow_angle, EnsembleConfig, TrajectoryConfig};
            use crate::constants::ATOMIC_MASS_UNIT;
            // sodium in the impulse regime, omega_osc * dt = 0.3
            let k = 2.0 * std::f64::consts::PI / 589e-9;
            let depth = HBAR * 1.0e6;
            let mass = 22.98977 * ATOMIC_MASS_UNIT;
            let omega = k * (2.0 * depth / mass).sqrt();
            let spec = PotentialSpec::new(
                depth,
                k,
                PotentialKind::Lightshift,
                Envelope::Rectangular { duration: 0.3 / omega },
            )?;
            let template = TrajectoryConfig::new(spec, mass, 1000.0)?;
            let rainbow = rainbow_angle(&template);
            let ens = EnsembleConfig::uniform(cfg.count, cfg.seed, 201, 3.0 * rainbow.angle)?;
            let hist = ensemble_histogram(&ens, &template)?;
            let path = dir.join("figure8_histogram.csv");
            write_csv(
                &path,
                &ConventionFlags::default(),
                &["bin_center_rad", "count"],
                (0..hist.counts.len())
                    .map(|i| vec![fmt_sci(hist.bin_center(i)), hist.counts[i].to_string()]),
            )?;
            #[derive(Serialize)]
            struct Payload {
                config: FigureConfig,
                rainbow_angle_rad: f64,
                max_energy_drift: f64,
            }
            RunMeta::new(Payload {
                config: cfg.clone(),
                rainbow_angle_rad: rainbow.angle,
                max_energy_drift: hist.max_energy_drift,
            })
            .write(dir.join("run.json"))?;
            println!("wrote {}", path.display());
            Ok(())
        }
        other => Err(Error::Config(format!(
            "unknown figure id '{other}' (expected 5 | 7-left | 7-right | 8)"
        ))),
    }
}

fn figure7(dir: &Path, cfg: &FigureConfig, regime: ElectronRegime) -> Result<()> {
    let preset = electron_preset_run(regime)?;
    let flags = ConventionFlags::default();
    let tag = match regime {
        ElectronRegime::Diffractive => "left",
        ElectronRegime::Bragg => "right",
    };
    let series_path = dir.join(format!("figure7_{tag}_timeseries.csv"));
    let mut rows = Vec::new();
    for state in &preset.run.samples {
        for n in preset.run.lattice.indices() {
            rows.push(vec![
                fmt_sci(state.time),
                fmt_sci(n as f64 / 2.0),
                fmt_sci(state.population(n)),
            ]);
        }
    }
    write_csv(&series_path, &flags, &["time_s", "order", "probability"], rows)?;
    let spec_path = dir.join(format!("figure7_{tag}_spectrum.csv"));
    let sw = preset.beam.standing_wave();
    let spectrum = diffraction_spectrum(preset.run.final_state(), &preset.run.lattice, sw.k);
    write_csv(
        &spec_path,
        &flags,
        &["n", "order", "probability", "momentum_kg_m_s"],
        spectrum.iter().map(|r| {
            vec![
                r.n.to_string(),
                fmt_sci(r.order),
                fmt_sci(r.probability),
                fmt_sci(r.momentum),
            ]
        }),
    )?;
    #[derive(Serialize)]
    struct Payload {
        config: FigureConfig,
        regime: ElectronRegime,
        depth_over_hbar_rad_s: f64,
        epsilon_rad_s: f64,
        transit_s: f64,
        norm_drift: f64,
        lattice_n_max: i32,
    }
    RunMeta::new(Payload {
        config: cfg.clone(),
        regime,
        depth_over_hbar_rad_s: preset.depth / HBAR,
        epsilon_rad_s: preset.epsilon,
        transit_s: preset.transit,
        norm_drift: preset.run.norm_drift,
        lattice_n_max: preset.run.lattice.n_max,
    })
    .write(dir.join("run.json"))?;
    println!("wrote {} and {}", series_path.display(), spec_path.display());
    Ok(())
}

// ----------------------------------------------------------------- builtins

#[derive(Debug, Serialize)]
struct Catalogue {
    particles: Vec<CatalogueParticle>,
    presets: Vec<CataloguePreset>,
}

#[derive(Debug, Serialize)]
struct CatalogueParticle {
    name: String,
    mass_kg: f64,
    charge_c: f64,
}

#[derive(Debug, Serialize)]
struct CataloguePreset {
    id: String,
    description: String,
    requires_line_list: bool,
}

fn run_builtins() -> Result<()> {
    let particles = builtin_names()
        .into_iter()
        .map(|name| {
            let p = builtin(name).expect("listed builtin exists");
            CatalogueParticle {
                name: p.name,
                mass_kg: p.mass,
                charge_c: p.charge,
            }
        })
        .collect();
    let mut presets = vec![
        CataloguePreset {
            id: "figure:7-left".into(),
            description: "10 eV electron, 1064 nm, w = 0.005 cm, 1e13 W/m^2 (diffractive)".into(),
            requires_line_list: false,
        },
        CataloguePreset {
            id: "figure:7-right".into(),
            description: "10 eV electron, 1064 nm, w = 0.5 cm, 1e11 W/m^2 (Bragg)".into(),
            requires_line_list: false,
        },
        CataloguePreset {
            id: "figure:8".into(),
            description: "sodium rainbow-scattering ensemble, omega_osc*dt = 0.3".into(),
            requires_line_list: false,
        },
        CataloguePreset {
            id: "figure:5".into(),
            description: "regime map grid with the published points A..I".into(),
            requires_line_list: false,
        },
    ];
    for p in crate::tables::high_intensity_presets() {
        presets.push(CataloguePreset {
            id: format!("table2:{}", p.species),
            description: format!(
                "high-intensity diffraction row at {} nm, {} W/m^2 (published U*tau = {})",
                p.laser_wavelength * 1e9,
                p.intensity,
                p.published_product
            ),
            requires_line_list: p.requires_line_list,
        });
    }
    let catalogue = Catalogue {
        particles,
        presets,
    };
    println!("{}", serde_json::to_string_pretty(&catalogue)?);
    Ok(())
}
