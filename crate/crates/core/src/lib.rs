//! Simulator for the entropic dynamics of a seven-qubit cavity QED model: two
//! hydrogen-like atoms in optical cavities that exchange photons of two spin
//! modes, form or break a covalent bond by emitting or absorbing a phonon, and
//! tunnel between cavities.
//!
//! The pipeline is
//! [`basis::enumerate_states`] → [`model::build_hamiltonian`] →
//! [`evolve::run`] → [`entropy::reduced_density`] →
//! [`entropy::von_neumann_entropy`], with [`harness`] adding traces, sweeps
//! and wave-packet statistics on top.

pub mod basis;
pub mod config;
pub mod entropy;
pub mod error;
pub mod evolve;
pub mod harness;
pub mod model;
pub mod numerics;

pub use basis::{bond_space, enumerate_states, BasisState, Mode, StateSpace};
pub use entropy::{
    preset_partitions, reduced_density, von_neumann_entropy, Bipartition, Preset, ReducedDensity,
};
pub use error::{Error, Result};
pub use evolve::{initial_state, propagator, run, RunConfig, StateVector, Trajectory};
pub use model::{bond_rules, build_hamiltonian, validate_rwa, ModelParams, Param, G_REF};
