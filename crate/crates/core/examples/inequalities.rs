//! Checks the orderings between photon, phonon and joint entropies sample
//! by sample and reports where they break.
//!
//! ```bash
//! cargo run --release --example inequalities
//! ```

use cavity_entropy::harness::{check_inequalities, simulate_presets};
use cavity_entropy::{bond_space, ModelParams, RunConfig};

fn main() -> cavity_entropy::Result<()> {
    let trace = simulate_presets(
        &ModelParams::default(),
        &bond_space(),
        &RunConfig::for_horizon(1e-5, 1e-9),
    )?;
    let report = check_inequalities(&trace)?;
    println!("{} samples", report.samples);
    for (relation, n, first) in &report.checks {
        match first {
            Some(t) => println!(
                "{relation:<40} {n:>5} violations, first at {:.3} µs",
                t * 1e6
            ),
            None => println!("{relation:<40} holds"),
        }
    }
    let so = trace.series("S_Omega")?;
    let sw = trace.series("S_omega")?;
    let (k, gap) = so.iter().zip(sw).map(|(a, b)| a - b).enumerate().fold(
        (0, f64::NEG_INFINITY),
        |acc, (k, g)| if g > acc.1 { (k, g) } else { acc },
    );
    println!(
        "largest S_Omega - S_omega: {gap:.3e} at {:.3} µs (S_Omega = {:.7})",
        trace.times[k] * 1e6,
        so[k]
    );
    Ok(())
}
