use num_complex::Complex64;

use super::{check_inequalities, EntropyTrace};
use crate::basis::{bond_space, REFERENCE_BASIS};
use crate::entropy::{preset_partitions, reduced_density};
use crate::error::Result;
use crate::evolve::{initial_state, observables, propagator, run_streaming, RunConfig};
use crate::model::{build_hamiltonian, ModelParams};
use crate::numerics::expm_oracle;

pub const PROPAGATOR_TOL: f64 = 1e-10;
pub const UNITARITY_TOL: f64 = 1e-12;
pub const NORM_DRIFT_TOL: f64 = 1e-9;
pub const ENERGY_DRIFT_TOL: f64 = 1e-8;
pub const SEPARABILITY_TOL: f64 = 1e-12;
pub const COMPLEMENT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

impl InvariantCheck {
    fn new(name: &'static str, ok: bool, detail: String) -> Self {
        Self { name, ok, detail }
    }
}

/// Structural and dynamical invariants of one run of the model: basis
/// closure, Hermiticity, propagator accuracy, conservation, separability of
/// the initial state, complement symmetry and the entropy orderings.
pub fn check_invariants(params: &ModelParams, config: &RunConfig) -> Result<Vec<InvariantCheck>> {
    let mut out = Vec::new();
    let space = bond_space();

    let same = space.as_set() == REFERENCE_BASIS.iter().copied().collect();
    out.push(InvariantCheck::new(
        "basis",
        same,
        format!("{} reachable states", space.len()),
    ));

    let h = build_hamiltonian(params, &space)?;
    let defect = h.hermitian_defect();
    out.push(InvariantCheck::new(
        "hermitian",
        defect == 0.0,
        format!("defect {defect:e}"),
    ));

    let u = propagator(&h, config.dt, params.hbar)?;
    let reference = expm_oracle(&h, Complex64::new(0.0, -config.dt / params.hbar))?;
    let err = (&u - &reference).frobenius_norm();
    out.push(InvariantCheck::new(
        "propagator",
        err <= PROPAGATOR_TOL,
        format!("|U - oracle|_F = {err:e}"),
    ));
    let unit = u.unitarity_defect();
    out.push(InvariantCheck::new(
        "unitarity",
        unit <= UNITARITY_TOL,
        format!("|U'U - I| = {unit:e}"),
    ));

    let psi0 = initial_state(&space)?;
    let mut worst0: f64 = 0.0;
    for p in preset_partitions() {
        worst0 = worst0.max(reduced_density(&psi0, &space, &p)?.entropy()?.abs());
    }
    out.push(InvariantCheck::new(
        "separability",
        worst0 <= SEPARABILITY_TOL,
        format!("max preset entropy at t=0 {worst0:e}"),
    ));

    let partitions = preset_partitions();
    let mut trace = EntropyTrace::from_series(
        Vec::new(),
        partitions.iter().map(|p| (p.clone(), Vec::new())).collect(),
    )?;
    trace.norm.clear();
    trace.energy.clear();
    let mut last = psi0;
    run_streaming(params, &space, config, |s| {
        let obs = observables(s.state, s.hamiltonian);
        trace.times.push(s.time);
        trace.norm.push(obs.norm);
        trace.energy.push(obs.energy);
        for (p, column) in partitions.iter().zip(trace.values.iter_mut()) {
            column.push(reduced_density(s.state, &space, p)?.entropy()?);
        }
        last.clone_from(s.state);
        Ok(())
    })?;
    let norm = trace
        .norm
        .iter()
        .map(|n| (n - 1.0).abs())
        .fold(0.0, f64::max);
    out.push(InvariantCheck::new(
        "norm",
        norm <= NORM_DRIFT_TOL,
        format!("max drift {norm:e}"),
    ));
    let e0 = trace.energy[0];
    let energy = trace
        .energy
        .iter()
        .map(|e| ((e - e0) / e0.abs().max(f64::MIN_POSITIVE)).abs())
        .fold(0.0, f64::max);
    out.push(InvariantCheck::new(
        "energy",
        energy <= ENERGY_DRIFT_TOL,
        format!("max relative drift {energy:e}"),
    ));

    let mut worst: f64 = 0.0;
    for p in &partitions {
        let a = reduced_density(&last, &space, p)?.entropy()?;
        let b = reduced_density(&last, &space, &p.complement())?.entropy()?;
        worst = worst.max((a - b).abs());
    }
    out.push(InvariantCheck::new(
        "complement",
        worst <= COMPLEMENT_TOL,
        format!("max |S(K) - S(rest)| {worst:e}"),
    ));

    let report = check_inequalities(&trace)?;
    let failing: Vec<String> = report
        .checks
        .iter()
        .filter(|c| c.1 > 0)
        .map(|c| format!("{}: {} samples from t={:e}", c.0, c.1, c.2.unwrap_or(0.0)))
        .collect();
    out.push(InvariantCheck::new(
        "inequalities",
        failing.is_empty(),
        if failing.is_empty() {
            format!("{} samples clean", report.samples)
        } else {
            failing.join("; ")
        },
    ));
    Ok(out)
}
