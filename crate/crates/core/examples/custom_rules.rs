//! Builds a reduced model with only the bond and tunnelling channels and
//! evolves it. Any guard/transition set works the same way as the built-in
//! rules.
//!
//! ```bash
//! cargo run --example custom_rules
//! ```

use cavity_entropy::basis::{BasisState, Mode};
use cavity_entropy::model::{build_hamiltonian_with, Coupling, Rule, RuleSet};
use cavity_entropy::{
    entropy::entropy_bits, enumerate_states, propagator, ModelParams, StateVector,
};
use num_complex::Complex64;

fn main() -> cavity_entropy::Result<()> {
    use Mode::*;
    let rules = RuleSet::new(vec![
        Rule::new(
            "bond",
            Coupling::Bond,
            vec![(Nuclei, 0)],
            Bond,
            Some(Phonon),
        )?,
        Rule::new("hop", Coupling::Tunneling, vec![(Bond, 1)], Nuclei, None)?,
    ]);
    let start = BasisState::new(0, 0, 0, 0, 0, 1, 1);
    let space = enumerate_states(&[start], &rules)?;
    for s in space.states() {
        println!("{s}");
    }

    let params = ModelParams::default();
    let h = build_hamiltonian_with(&params, &space, &rules)?;
    let u = propagator(&h, 1e-8, params.hbar)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); space.len()];
    amps[space.index_of(&start).unwrap()] = Complex64::new(1.0, 0.0);
    let mut psi = StateVector::new(amps);
    for step in 0..=400 {
        if step % 50 == 0 {
            let pops: Vec<String> = psi
                .amplitudes()
                .iter()
                .map(|a| format!("{:.3}", a.norm_sqr()))
                .collect();
            let rho = psi.density_matrix();
            println!(
                "t={:.1e}  populations [{}]  S(total)={:.1e}",
                step as f64 * 1e-8,
                pops.join(", "),
                entropy_bits(&rho)?
            );
        }
        psi = StateVector::new(u.mul_vec(psi.amplitudes()));
    }
    Ok(())
}
