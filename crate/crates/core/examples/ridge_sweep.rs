//! Peak photon entropy over a (g_Ω, ζ) grid; the high values sit on the
//! lines ζ = g_Ω and ζ = 2g_Ω. Writes long-form CSV when given a path.
//!
//! ```bash
//! cargo run --release --example ridge_sweep
//! cargo run --release --example ridge_sweep -- ridges.csv
//! ```

use cavity_entropy::harness::{sweep2d, write_sweep_csv, ParamAxis};
use cavity_entropy::{ModelParams, Param, Preset, G_REF};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = ParamAxis::linspace(Param::GPhoton, 0.5 * G_REF, 3.0 * G_REF, 6)?;
    let y = ParamAxis::linspace(Param::Zeta, 0.5 * G_REF, 6.0 * G_REF, 12)?;
    let grid = sweep2d(
        &x,
        &y,
        &ModelParams::default(),
        &Preset::Photons.partition(),
        2e-5,
        1e-9,
    )?;

    print!("{:>7}", "ζ \\ gΩ");
    for v in &x.values {
        print!("{:>8.1}g", v / G_REF);
    }
    println!();
    for iy in (0..y.values.len()).rev() {
        print!("{:>6.1}g", y.values[iy] / G_REF);
        for ix in 0..x.values.len() {
            print!("{:>9.3}", grid.at(ix, iy));
        }
        println!();
    }
    if let Some(path) = std::env::args().nth(1) {
        write_sweep_csv(&grid, std::fs::File::create(&path)?)?;
        println!("wrote {path}");
    }
    Ok(())
}
