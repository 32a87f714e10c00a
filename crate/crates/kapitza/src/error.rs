//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an input value failed.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Drive frequency within the resonance guard band of an undamped line;
    /// the classical oscillator model diverges there.
    #[error("on-resonance singular: |omega^2 - omega0^2| below guard (omega = {omega:.6e} rad/s, omega0 = {omega0:.6e} rad/s)")]
    OnResonance { omega: f64, omega0: f64 },

    /// Lightshift requested for a particle with no resonance lines.
    #[error("particle '{0}' has no resonance lines; use the ponderomotive potential for free charges")]
    EmptyLineList(String),

    /// Initial quantum state is not normalized.
    #[error("initial state not normalized: sum |c_n|^2 = {norm:.6e}")]
    NotNormalized { norm: f64 },

    /// Step halving drove the integrator step below the resolvable floor.
    #[error("step-size underflow: step {step:.3e} s cannot meet the norm tolerance")]
    StepUnderflow { step: f64 },

    /// Boundary population kept exceeding tolerance after the allowed number
    /// of lattice widenings.
    #[error("lattice widening retry limit exceeded after {widenings} attempts")]
    LatticeRetryLimit { widenings: usize },

    /// Configuration file or CLI arguments failed validation.
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit code the CLI maps this error to: 2 for validation problems,
    /// 3 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_)
            | Error::OnResonance { .. }
            | Error::EmptyLineList(_)
            | Error::NotNormalized { .. }
            | Error::Config(_)
            | Error::Io(_)
            | Error::Json(_) => 2,
            Error::StepUnderflow { .. } | Error::LatticeRetryLimit { .. } => 3,
        }
    }

    /// Short machine-readable kind tag for error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) | Error::Config(_) => "validation",
            Error::OnResonance { .. } => "on_resonance",
            Error::EmptyLineList(_) => "empty_line_list",
            Error::NotNormalized { .. } => "not_normalized",
            Error::StepUnderflow { .. } => "step_underflow",
            Error::LatticeRetryLimit { .. } => "lattice_retry_limit",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
