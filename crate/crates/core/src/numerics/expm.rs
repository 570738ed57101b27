//! Precise time-step integration of `exp(A)`.
//!
//! The argument is scaled by `ε = 2^-M`, a short Taylor kernel without the
//! identity is formed, and the kernel is doubled `M` times with
//! `T ← 2T + T·T`. The identity enters only in the final `I + T`, so the
//! small increments are never added onto order-one entries along the way.

use num_complex::Complex64;

use super::{eigh, ComplexMatrix};
use crate::error::{Error, Result};

/// Number of halvings applied to the argument.
pub const PTSIM_SQUARINGS: u32 = 20;
/// Terms kept in the Taylor kernel.
pub const PTSIM_TAYLOR_ORDER: u32 = 4;

/// `exp(a)` with 20 squarings and a fourth-order kernel.
pub fn expm_ptsim(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    expm_ptsim_with(a, PTSIM_SQUARINGS, PTSIM_TAYLOR_ORDER)
}

pub fn expm_ptsim_with(
    a: &ComplexMatrix,
    squarings: u32,
    taylor_order: u32,
) -> Result<ComplexMatrix> {
    let n = a.ensure_square()?;
    if taylor_order == 0 {
        return Err(Error::InvalidArgument(
            "taylor_order must be at least 1".into(),
        ));
    }
    if squarings > 1000 {
        return Err(Error::InvalidArgument(format!(
            "{squarings} squarings would underflow the scaled argument"
        )));
    }

    let eps = (-(squarings as f64)).exp2();
    let scaled = a.scale(Complex64::new(eps, 0.0));

    // T_{a,0} = Σ_{j=1..order} (Aε)^j / j!
    let mut term = scaled.clone();
    let mut kernel = scaled.clone();
    for j in 2..=taylor_order {
        term = (&term * &scaled).scale(Complex64::new(1.0 / j as f64, 0.0));
        kernel = &kernel + &term;
    }

    // T_{a,n} = 2 T_{a,n-1} + T_{a,n-1} T_{a,n-1}
    for _ in 0..squarings {
        let sq = &kernel * &kernel;
        kernel = &kernel.scale(Complex64::new(2.0, 0.0)) + &sq;
    }

    Ok(&ComplexMatrix::identity(n) + &kernel)
}

/// Relative Hermiticity tolerance accepted by [`expm_oracle`].
const ORACLE_HERMITIAN_TOL: f64 = 1e-12;

/// `exp(scale · H)` through the eigendecomposition `H = V Λ V†`.
///
/// Independent of the doubling scheme; used to check it. Unitary when
/// `scale` is purely imaginary.
pub fn expm_oracle(h: &ComplexMatrix, scale: Complex64) -> Result<ComplexMatrix> {
    let n = h.ensure_square()?;
    let defect = h.hermitian_defect();
    if defect > ORACLE_HERMITIAN_TOL * h.max_abs().max(1.0) {
        return Err(Error::NotHermitian { defect });
    }
    let eig = eigh(h)?;
    let phases: Vec<Complex64> = eig.values.iter().map(|&l| (scale * l).exp()).collect();
    let v = &eig.vectors;
    Ok(ComplexMatrix::from_fn(n, n, |i, j| {
        (0..n)
            .map(|k| v[(i, k)] * phases[k] * v[(j, k)].conj())
            .sum()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_gives_identity() {
        let z = ComplexMatrix::zeros(5, 5);
        assert_eq!(expm_ptsim(&z).unwrap(), ComplexMatrix::identity(5));
        assert!(
            (expm_oracle(&z, c(0., -1.)).unwrap() - ComplexMatrix::identity(5)).frobenius_norm()
                < 1e-15
        );
    }

    #[test]
    fn diagonal_phases() {
        let (t1, t2) = (0.7, -2.3);
        let a = ComplexMatrix::diagonal(&[c(0., t1), c(0., t2)]);
        let e = expm_ptsim(&a).unwrap();
        assert!((e[(0, 0)] - c(0., t1).exp()).norm() < 1e-13);
        assert!((e[(1, 1)] - c(0., t2).exp()).norm() < 1e-13);
        assert!(e[(0, 1)].norm() < 1e-15);
    }

    #[test]
    fn oracle_on_pauli_z() {
        let z = ComplexMatrix::from_real_rows(&[&[1., 0.], &[0., -1.]]).unwrap();
        let e = expm_oracle(&z, c(0., std::f64::consts::FRAC_PI_2)).unwrap();
        let want = ComplexMatrix::diagonal(&[c(0., 1.), c(0., -1.)]);
        assert!((e - want).frobenius_norm() < 1e-13);
    }

    #[test]
    fn nilpotent_is_exact() {
        // exp([[0,1],[0,0]]) = [[1,1],[0,1]]
        let n = ComplexMatrix::from_real_rows(&[&[0., 1.], &[0., 0.]]).unwrap();
        let e = expm_ptsim(&n).unwrap();
        let want = ComplexMatrix::from_real_rows(&[&[1., 1.], &[0., 1.]]).unwrap();
        assert!((e - want).frobenius_norm() < 1e-13);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            expm_ptsim(&ComplexMatrix::zeros(2, 3)),
            Err(Error::NotSquare { .. })
        ));
        assert!(expm_ptsim_with(&ComplexMatrix::zeros(2, 2), 20, 0).is_err());
        let skew = ComplexMatrix::from_real_rows(&[&[0., 1.], &[-1., 0.]]).unwrap();
        assert!(matches!(
            expm_oracle(&skew, c(1., 0.)),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn zero_squarings_is_plain_taylor() {
        let a = ComplexMatrix::diagonal(&[c(0.1, 0.)]);
        let e = expm_ptsim_with(&a, 0, 2).unwrap();
        assert!((e[(0, 0)].re - (1.0 + 0.1 + 0.005)).abs() < 1e-15);
    }
}
