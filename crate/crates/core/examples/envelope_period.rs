//! Wave-packet envelope period of the photon entropy for several bond
//! couplings. The period scales as 1/g_ω.
//!
//! ```bash
//! cargo run --release --example envelope_period
//! ```

use cavity_entropy::harness::{envelope, envelope_period, simulate, QUIET_ZONE_EPS};
use cavity_entropy::{bond_space, ModelParams, Preset, RunConfig, G_REF};

fn main() -> cavity_entropy::Result<()> {
    let space = bond_space();
    let part = [Preset::Photons.partition()];
    println!(
        "{:>8} {:>12} {:>14} {:>10}",
        "g_ω/g", "period [µs]", "period·g_ω", "maxima"
    );
    for k in [0.05, 0.1, 0.15, 0.2] {
        let params = ModelParams::default().with_bond_coupling(k * G_REF);
        let trace = simulate(&params, &space, &RunConfig::for_horizon(2e-5, 1e-9), &part)?;
        let period = envelope_period(&trace, "S_Omega", QUIET_ZONE_EPS)?;
        let n = envelope(&trace, "S_Omega")?.len();
        println!(
            "{k:>8} {:>12.4} {:>14.4} {n:>10}",
            period * 1e6,
            period * k * G_REF
        );
    }
    Ok(())
}
