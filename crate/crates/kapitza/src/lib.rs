//! Kapitza-Dirac scattering: diffraction and deflection of electron, atom and
//! ion beams by a standing wave of light.
//!
//! The crate models the two interaction potentials (ponderomotive for free
//! charges, lightshift for polarisable particles), evolves the coupled
//! plane-wave amplitudes of the one-dimensional Schrödinger problem in the
//! sinusoidal potential, runs classical trajectory ensembles for the strong
//! scattering limit, classifies experiments on the standard parameter plane,
//! and evaluates Sagnac rotation-sensing figures of merit.
//!
//! Every major capability has a runnable example under `examples/`; the
//! `kapitza` binary exposes the same machinery as reproducible subcommands
//! writing CSV data plus JSON run metadata.

// `!(x > 0.0)` is the NaN-rejecting form of a positivity precondition
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bessel;
pub mod classical;
pub mod cli;
pub mod constants;
pub mod error;
pub mod field;
pub mod interferometry;
pub mod kinematics;
pub mod output;
pub mod particle;
pub mod potential;
pub mod quantum;
pub mod regime;
pub mod tables;

pub use error::{Error, Result};
