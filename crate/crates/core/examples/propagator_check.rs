//! Compares the doubling-based matrix exponential against the
//! eigendecomposition for the model Hamiltonian at several step sizes.
//!
//! ```bash
//! cargo run --example propagator_check
//! ```

use cavity_entropy::numerics::{expm_oracle, ComplexMatrix};
use cavity_entropy::{bond_space, build_hamiltonian, propagator, validate_rwa, ModelParams};
use num_complex::Complex64;

fn main() -> cavity_entropy::Result<()> {
    let params = ModelParams::default();
    let rwa = validate_rwa(&params)?;
    println!(
        "g/ħΩ = {:.1e}, g_ω/ħω = {:.1e}, rotating-wave regime: {}",
        rwa.ratio_photon, rwa.ratio_phonon, rwa.ok
    );
    let h = build_hamiltonian(&params, &bond_space())?;
    println!("{:>8} {:>14} {:>14}", "dt", "|U-oracle|_F", "|U'U-I|");
    for dt in [1e-11, 1e-10, 1e-9, 1e-8, 1e-7] {
        let u = propagator(&h, dt, params.hbar)?;
        let exact = expm_oracle(&h, Complex64::new(0.0, -dt / params.hbar))?;
        let diff: ComplexMatrix = &u - &exact;
        println!(
            "{dt:>8.0e} {:>14.3e} {:>14.3e}",
            diff.frobenius_norm(),
            u.unitarity_defect()
        );
    }
    Ok(())
}
