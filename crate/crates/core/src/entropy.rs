//! Reduced density matrices over qubit subsets and their von Neumann entropy.
//!
//! Qubit positions follow the ket order `p1 p2 m l1 l2 L k` (0..=6). A reduced
//! matrix is indexed by the kept qubits in the order they were listed, first
//! listed most significant; traced qubits are summed over.

use std::fmt;

use num_complex::Complex64;

use crate::basis::{StateSpace, REGISTER_QUBITS};
use crate::error::{Error, Result};
use crate::evolve::StateVector;
use crate::numerics::{eigvals_hermitian, ComplexMatrix};

/// Eigenvalues below this are treated as exact zeros.
pub const EIGEN_CLAMP: f64 = 1e-12;
/// Eigenvalues below this mean the input was not a density matrix.
pub const EIGEN_FLOOR: f64 = -1e-8;

/// Kept qubits of a bipartition of the seven-qubit register.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    keep: Vec<usize>,
    name: Option<String>,
}

impl Bipartition {
    pub fn new(keep: Vec<usize>) -> Result<Self> {
        validate_keep(&keep, REGISTER_QUBITS)?;
        Ok(Self { keep, name: None })
    }

    pub fn named(keep: Vec<usize>, name: impl Into<String>) -> Result<Self> {
        let mut p = Self::new(keep)?;
        p.name = Some(name.into());
        Ok(p)
    }

    /// Parses a comma-separated list of qubit positions, e.g. `"0,2,4"`.
    pub fn parse(text: &str) -> Result<Self> {
        let keep = text
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidPartition(format!("bad qubit index {t:?} in {text:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(keep)
    }

    pub fn keep(&self) -> &[usize] {
        &self.keep
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Column label: the preset name, or `S_q0_q1_...` for ad-hoc sets.
    pub fn label(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => {
                let idx: Vec<String> = self.keep.iter().map(|q| q.to_string()).collect();
                format!("S_q{}", idx.join("_q"))
            }
        }
    }

    /// Traced qubits in ascending order.
    pub fn complement(&self) -> Bipartition {
        let keep = (0..REGISTER_QUBITS)
            .filter(|q| !self.keep.contains(q))
            .collect();
        Bipartition { keep, name: None }
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.label(), self.keep)
    }
}

fn validate_keep(keep: &[usize], n_qubits: usize) -> Result<()> {
    if keep.is_empty() {
        return Err(Error::InvalidPartition("keep set is empty".into()));
    }
    if keep.len() >= n_qubits {
        return Err(Error::InvalidPartition(format!(
            "keep set {keep:?} must be a proper subset of {n_qubits} qubits"
        )));
    }
    for (i, &q) in keep.iter().enumerate() {
        if q >= n_qubits {
            return Err(Error::InvalidPartition(format!(
                "qubit {q} out of range 0..{n_qubits}"
            )));
        }
        if keep[..i].contains(&q) {
            return Err(Error::InvalidPartition(format!("qubit {q} listed twice")));
        }
    }
    Ok(())
}

/// The five subsystems compared in the study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Both photon modes.
    Photons,
    PhotonUp,
    PhotonDown,
    Phonon,
    /// Both photon modes and the phonon.
    PhotonsPhonon,
}

impl Preset {
    pub const ALL: [Preset; 5] = [
        Preset::Photons,
        Preset::PhotonUp,
        Preset::PhotonDown,
        Preset::Phonon,
        Preset::PhotonsPhonon,
    ];

    pub fn column(self) -> &'static str {
        match self {
            Preset::Photons => "S_Omega",
            Preset::PhotonUp => "S_Omega_up",
            Preset::PhotonDown => "S_Omega_down",
            Preset::Phonon => "S_omega",
            Preset::PhotonsPhonon => "S_Omega_omega",
        }
    }

    pub fn keep(self) -> &'static [usize] {
        match self {
            Preset::Photons => &[0, 1],
            Preset::PhotonUp => &[0],
            Preset::PhotonDown => &[1],
            Preset::Phonon => &[2],
            Preset::PhotonsPhonon => &[0, 1, 2],
        }
    }

    pub fn partition(self) -> Bipartition {
        Bipartition {
            keep: self.keep().to_vec(),
            name: Some(self.column().to_string()),
        }
    }

    pub fn from_column(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.column() == name)
            .ok_or_else(|| Error::UnknownSeries(name.to_string()))
    }
}

/// The five presets as named partitions, in CSV column order.
pub fn preset_partitions() -> Vec<Bipartition> {
    Preset::ALL.iter().map(|p| p.partition()).collect()
}

/// Reduced density matrix of the kept qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedDensity {
    pub keep: Vec<usize>,
    pub matrix: ComplexMatrix,
}

impl ReducedDensity {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn entropy(&self) -> Result<f64> {
        von_neumann_entropy(self)
    }
}

/// Splits a register index into (kept index, environment index).
fn split_index(full: usize, n_qubits: usize, keep: &[usize], kept_mask: usize) -> (usize, usize) {
    let bit = |q: usize| (full >> (n_qubits - 1 - q)) & 1;
    let k = keep.iter().fold(0, |acc, &q| (acc << 1) | bit(q));
    let e = (0..n_qubits)
        .filter(|q| kept_mask & (1 << q) == 0)
        .fold(0, |acc, q| (acc << 1) | bit(q));
    (k, e)
}

/// Partial trace of the pure state `Σ amp |full⟩` given as sparse entries.
///
/// Entries are bucketed by environment configuration; each bucket contributes
/// its outer product to the kept block.
pub fn partial_trace_pure(
    entries: &[(usize, Complex64)],
    n_qubits: usize,
    keep: &[usize],
) -> Result<ComplexMatrix> {
    validate_keep(keep, n_qubits)?;
    let kept_mask = keep.iter().fold(0usize, |m, &q| m | (1 << q));
    let dim = 1usize << keep.len();
    let env_dim = 1usize << (n_qubits - keep.len());

    let mut buckets: Vec<Vec<(usize, Complex64)>> = vec![Vec::new(); env_dim];
    for &(full, amp) in entries {
        if full >> n_qubits != 0 {
            return Err(Error::InvalidArgument(format!(
                "register index {full} out of range for {n_qubits} qubits"
            )));
        }
        if amp == Complex64::new(0.0, 0.0) {
            continue;
        }
        let (k, e) = split_index(full, n_qubits, keep, kept_mask);
        buckets[e].push((k, amp));
    }

    let mut rho = ComplexMatrix::zeros(dim, dim);
    for bucket in &buckets {
        for &(i, a) in bucket {
            for &(j, b) in bucket {
                rho[(i, j)] += a * b.conj();
            }
        }
    }
    Ok(rho)
}

/// Partial trace of a general (possibly mixed) register density matrix.
pub fn partial_trace(
    rho: &ComplexMatrix,
    n_qubits: usize,
    keep: &[usize],
) -> Result<ComplexMatrix> {
    validate_keep(keep, n_qubits)?;
    let n = rho.ensure_square()?;
    if n != 1 << n_qubits {
        return Err(Error::DimensionMismatch {
            expected: 1 << n_qubits,
            found: n,
        });
    }
    let kept_mask = keep.iter().fold(0usize, |m, &q| m | (1 << q));
    let dim = 1usize << keep.len();
    let split: Vec<(usize, usize)> = (0..n)
        .map(|f| split_index(f, n_qubits, keep, kept_mask))
        .collect();
    let mut out = ComplexMatrix::zeros(dim, dim);
    for a in 0..n {
        for b in 0..n {
            let (i, ea) = split[a];
            let (j, eb) = split[b];
            if ea == eb {
                out[(i, j)] += rho[(a, b)];
            }
        }
    }
    Ok(out)
}

/// Reduced density of `psi` (over `space`) on the kept qubits.
pub fn reduced_density(
    psi: &StateVector,
    space: &StateSpace,
    part: &Bipartition,
) -> Result<ReducedDensity> {
    if psi.len() != space.len() {
        return Err(Error::DimensionMismatch {
            expected: space.len(),
            found: psi.len(),
        });
    }
    let mut entries = Vec::with_capacity(psi.len());
    for (i, &amp) in psi.amplitudes().iter().enumerate() {
        match space.full_index_of(i) {
            Some(f) => entries.push((f, amp)),
            None if amp == Complex64::new(0.0, 0.0) => {}
            None => space.state(i).full_index().map(|_| ())?,
        }
    }
    let matrix = partial_trace_pure(&entries, REGISTER_QUBITS, part.keep())?;
    Ok(ReducedDensity {
        keep: part.keep().to_vec(),
        matrix,
    })
}

/// Reduced density of a dense 128-amplitude register vector.
pub fn reduced_density_register(
    amplitudes: &[Complex64],
    part: &Bipartition,
) -> Result<ReducedDensity> {
    if amplitudes.len() != 1 << REGISTER_QUBITS {
        return Err(Error::DimensionMismatch {
            expected: 1 << REGISTER_QUBITS,
            found: amplitudes.len(),
        });
    }
    let entries: Vec<(usize, Complex64)> = amplitudes.iter().copied().enumerate().collect();
    let matrix = partial_trace_pure(&entries, REGISTER_QUBITS, part.keep())?;
    Ok(ReducedDensity {
        keep: part.keep().to_vec(),
        matrix,
    })
}

/// `S = −Σ λ log2 λ` in bits.
pub fn von_neumann_entropy(rho: &ReducedDensity) -> Result<f64> {
    entropy_bits(&rho.matrix)
}

pub fn entropy_bits(rho: &ComplexMatrix) -> Result<f64> {
    let mut s = 0.0;
    for l in eigvals_hermitian(rho)? {
        if l < EIGEN_FLOOR {
            return Err(Error::NegativeEigenvalue(l));
        }
        if l >= EIGEN_CLAMP {
            s -= l * l.log2();
        }
    }
    Ok(s.max(0.0))
}
