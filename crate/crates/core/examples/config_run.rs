//! Loads parameters from a flat `key = value` file plus overrides, the same
//! way the command-line tool does, and reports the photon entropy peak.
//!
//! ```bash
//! cargo run --release --example config_run -- zeta=2g g_bond=0.05g
//! ```

use cavity_entropy::config::{load_params, parse_config};
use cavity_entropy::harness::{peak_entropy, simulate};
use cavity_entropy::{bond_space, Param, Preset, RunConfig};

const FILE: &str = "\
# couplings in units of g = 1e7
g_photon = 1g
g_bond   = 0.1g
zeta     = 1g
";

fn main() -> cavity_entropy::Result<()> {
    let path = std::env::temp_dir().join("cavity-entropy-example.conf");
    std::fs::write(&path, FILE).map_err(|e| cavity_entropy::Error::Config(e.to_string()))?;
    println!("file sets {} keys", parse_config(FILE)?.len());

    let overrides: Vec<String> = std::env::args().skip(1).collect();
    let params = load_params(Some(&path), &overrides)?;
    for p in Param::STORED {
        println!("{:<11} {:e}", p.key(), p.get(&params));
    }
    let trace = simulate(
        &params,
        &bond_space(),
        &RunConfig::for_horizon(1e-5, 1e-9),
        &[Preset::Photons.partition()],
    )?;
    println!(
        "peak S_Omega over 10 µs: {:.6}",
        peak_entropy(&trace, "S_Omega")?
    );
    Ok(())
}
