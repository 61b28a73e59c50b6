//! Simulation of symmetric two-atom Rydberg controlled-Z gates driven by
//! adiabatic pulses.
//!
//! The crate models a pair of neutral atoms whose qubit states are coupled to
//! Rydberg levels by shaped laser pulses. Evolution is computed from the
//! two-atom Lindblad master equation with spontaneous emission from the
//! excited levels, and gate quality is reported as the fidelity of the Bell
//! state prepared by a Hadamard / CZ / Hadamard sequence.
//!
//! Modules:
//! - [`levels`]: atomic level schemes, decay rates, branching tables.
//! - [`quantum`]: two-atom state space, density matrices, observables,
//!   ideal single-qubit gates, Bell fidelity.
//! - [`pulse`]: every waveform family used by the gate protocols.
//! - [`lindblad`]: the master-equation integrator.
//! - [`gate`]: complete gate protocols, phase extraction, sweeps and
//!   robustness grids.
//! - [`optimize`]: differential-evolution search over segmented pulses.
//! - [`analytic`]: closed-form model of the constant-amplitude protocol.

pub mod analytic;
pub mod error;
pub mod gate;
pub mod levels;
pub mod lindblad;
pub mod optimize;
pub mod pulse;
pub mod quantum;

pub use error::{Error, Result};
