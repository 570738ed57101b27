//! Entropy of the five standard subsystems over the first 10 µs, printed
//! every 0.25 µs. Pass `--csv` to dump every sample instead.
//!
//! ```bash
//! cargo run --release --example entropy_trace
//! cargo run --release --example entropy_trace -- --csv > trace.csv
//! ```

use cavity_entropy::harness::{peak_entropy, simulate_presets, write_trace_csv};
use cavity_entropy::{bond_space, ModelParams, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trace = simulate_presets(
        &ModelParams::default(),
        &bond_space(),
        &RunConfig::for_horizon(1e-5, 1e-9),
    )?;
    if std::env::args().any(|a| a == "--csv") {
        write_trace_csv(&trace, std::io::stdout().lock())?;
        return Ok(());
    }
    let labels = trace.labels();
    println!(
        "{:>8} {}",
        "t [µs]",
        labels
            .iter()
            .map(|l| format!("{l:>14}"))
            .collect::<String>()
    );
    for k in (0..trace.len()).step_by(250) {
        let row: String = trace
            .values
            .iter()
            .map(|v| format!("{:>14.6}", v[k]))
            .collect();
        println!("{:>8.2} {row}", trace.times[k] * 1e6);
    }
    for l in &labels {
        println!("peak {l}: {:.7}", peak_entropy(&trace, l)?);
    }
    Ok(())
}
