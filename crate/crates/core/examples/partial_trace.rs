//! Left, right and middle reductions of a three-qubit density matrix, and
//! the entropies of a GHZ state's subsystems.
//!
//! ```bash
//! cargo run --example partial_trace
//! ```

use cavity_entropy::entropy::{entropy_bits, partial_trace, partial_trace_pure};
use cavity_entropy::numerics::ComplexMatrix;
use num_complex::Complex64;

fn show(name: &str, m: &ComplexMatrix) {
    println!("{name}:");
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols())
            .map(|j| format!("{:>6.1}", m[(i, j)].re))
            .collect();
        println!("  [{}]", row.join(" "));
    }
}

fn main() -> cavity_entropy::Result<()> {
    // entries a_ij = 8i + j make every summation pattern visible
    let rho = ComplexMatrix::from_fn(8, 8, |i, j| Complex64::new((8 * i + j) as f64, 0.0));
    show("keep first qubit", &partial_trace(&rho, 3, &[0])?);
    show("keep last qubit", &partial_trace(&rho, 3, &[2])?);
    show("keep middle qubit", &partial_trace(&rho, 3, &[1])?);

    let s = std::f64::consts::FRAC_1_SQRT_2;
    let ghz = [
        (0b000, Complex64::new(s, 0.0)),
        (0b111, Complex64::new(s, 0.0)),
    ];
    for keep in [vec![0], vec![0, 1], vec![2, 0]] {
        let r = partial_trace_pure(&ghz, 3, &keep)?;
        println!("GHZ keep {keep:?}: S = {:.6} bits", entropy_bits(&r)?);
    }
    Ok(())
}
