//! Initial state, step propagator and time stepping.
//!
//! The system is closed and starts pure, so the density-matrix update
//! `ρ → UρU†` is carried out on the state vector `ψ → Uψ`. Density matrices
//! are only formed for subsystems.

use num_complex::Complex64;

use crate::basis::{StateSpace, INITIAL_SUPPORT};
use crate::error::{Error, Result};
use crate::model::{build_hamiltonian, ModelParams};
use crate::numerics::{expm_ptsim, ComplexMatrix};

/// Runs abort when `|‖ψ‖ − 1|` exceeds this.
pub const NORM_ABORT: f64 = 1e-6;

pub const DEFAULT_DT: f64 = 1e-9;
pub const DEFAULT_STEPS: usize = 10_000;

/// Complex amplitudes over a restricted basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector(Vec<Complex64>);

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Self {
        Self(amplitudes)
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a.conj() * b).sum()
    }

    /// `|ψ⟩⟨ψ|` over the restricted basis.
    pub fn density_matrix(&self) -> ComplexMatrix {
        let n = self.len();
        ComplexMatrix::from_fn(n, n, |i, j| self.0[i] * self.0[j].conj())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub samples: Vec<StateVector>,
}

/// `½(|Φ0↑Φ0↓⟩ + |Φ1↑Φ0↓⟩ − |Φ0↑Φ1↓⟩ − |Φ1↑Φ1↓⟩)`, bond broken and nuclei
/// in separate cavities.
pub fn initial_state(space: &StateSpace) -> Result<StateVector> {
    let mut amps = vec![Complex64::new(0.0, 0.0); space.len()];
    for s in INITIAL_SUPPORT {
        let i = space.index_of(&s).ok_or(Error::StateOutsideSpace(s))?;
        // the minus sign goes with the excited spin-down orbital
        let sign = if s.l2() == 1 { -0.5 } else { 0.5 };
        amps[i] = Complex64::new(sign, 0.0);
    }
    Ok(StateVector(amps))
}

/// `U = exp(−i H dt / ħ)`.
pub fn propagator(h: &ComplexMatrix, dt: f64, hbar: f64) -> Result<ComplexMatrix> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "time step must be positive, got {dt}"
        )));
    }
    if !(hbar > 0.0 && hbar.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "ħ must be positive, got {hbar}"
        )));
    }
    expm_ptsim(&h.scale(Complex64::new(0.0, -dt / hbar)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observables {
    pub norm: f64,
    pub energy: f64,
}

pub fn observables(psi: &StateVector, h: &ComplexMatrix) -> Observables {
    let hpsi = StateVector(h.mul_vec(psi.amplitudes()));
    Observables {
        norm: psi.norm(),
        energy: psi.inner(&hpsi).re,
    }
}

/// Step size, step count and sampling stride of one run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub dt: f64,
    pub n_steps: usize,
    pub sample_every: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            dt: DEFAULT_DT,
            n_steps: DEFAULT_STEPS,
            sample_every: 1,
        }
    }
}

impl RunConfig {
    /// Enough steps of size `dt` to reach `horizon` (rounded to nearest).
    pub fn for_horizon(horizon: f64, dt: f64) -> Self {
        Self {
            dt,
            n_steps: (horizon / dt).round() as usize,
            sample_every: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "dt must be positive, got {}",
                self.dt
            )));
        }
        if self.sample_every == 0 {
            return Err(Error::InvalidArgument(
                "sample_every must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn sample_count(&self) -> usize {
        self.n_steps / self.sample_every + 1
    }
}

/// One recorded point handed to a [`run_streaming`] observer.
pub struct Sample<'a> {
    pub index: usize,
    pub step: usize,
    pub time: f64,
    pub state: &'a StateVector,
    pub hamiltonian: &'a ComplexMatrix,
}

/// Evolves the initial state, calling `observer` at `t = 0` and after every
/// `sample_every` steps. Nothing but the current state is kept.
pub fn run_streaming<F>(
    params: &ModelParams,
    space: &StateSpace,
    config: &RunConfig,
    mut observer: F,
) -> Result<()>
where
    F: FnMut(Sample<'_>) -> Result<()>,
{
    config.validate()?;
    let h = build_hamiltonian(params, space)?;
    let u = propagator(&h, config.dt, params.hbar)?;
    let mut psi = initial_state(space)?;
    let mut next = psi.clone();

    observer(Sample {
        index: 0,
        step: 0,
        time: 0.0,
        state: &psi,
        hamiltonian: &h,
    })?;
    let mut index = 1;
    for step in 1..=config.n_steps {
        u.mul_vec_into(&psi.0, &mut next.0);
        std::mem::swap(&mut psi, &mut next);
        let drift = (psi.norm() - 1.0).abs();
        if drift > NORM_ABORT {
            return Err(Error::NormDrift { step, drift });
        }
        if step % config.sample_every == 0 {
            observer(Sample {
                index,
                step,
                time: step as f64 * config.dt,
                state: &psi,
                hamiltonian: &h,
            })?;
            index += 1;
        }
    }
    Ok(())
}

/// Evolves and keeps every sampled state.
pub fn run(
    params: &ModelParams,
    space: &StateSpace,
    dt: f64,
    n_steps: usize,
    sample_every: usize,
) -> Result<Trajectory> {
    let config = RunConfig {
        dt,
        n_steps,
        sample_every,
    };
    let mut traj = Trajectory {
        times: Vec::with_capacity(config.sample_count()),
        samples: Vec::with_capacity(config.sample_count()),
    };
    run_streaming(params, space, &config, |s| {
        traj.times.push(s.time);
        traj.samples.push(s.state.clone());
        Ok(())
    })?;
    Ok(traj)
}
