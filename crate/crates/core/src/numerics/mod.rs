//! Dense complex linear algebra sized for this model: a row-major matrix type,
//! the precise-integration matrix exponential, and a Jacobi eigensolver for
//! Hermitian matrices that doubles as the exponential's reference.

mod eigen;
mod expm;
mod matrix;

pub use eigen::{eigh, eigvals_hermitian, HermitianEigen, JACOBI_MAX_SWEEPS, JACOBI_REL_TOL};
pub use expm::{expm_oracle, expm_ptsim, expm_ptsim_with, PTSIM_SQUARINGS, PTSIM_TAYLOR_ORDER};
pub use matrix::ComplexMatrix;
