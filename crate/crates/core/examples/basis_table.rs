//! Closes the initial support under the interaction rules and prints the
//! reachable basis next to its position in the reference table.
//!
//! ```bash
//! cargo run --example basis_table
//! ```

use cavity_entropy::basis::{enumerate_states, INITIAL_SUPPORT, REFERENCE_BASIS};
use cavity_entropy::bond_rules;

fn main() -> cavity_entropy::Result<()> {
    let space = enumerate_states(&INITIAL_SUPPORT, &bond_rules())?;
    println!("{} reachable states", space.len());
    println!(
        "{:>3}  {:<11} {:>8} {:>6}",
        "idx", "state", "register", "table"
    );
    for (i, s) in space.states().iter().enumerate() {
        let row = REFERENCE_BASIS.iter().position(|t| t == s);
        let row = row.map_or("-".to_string(), |r| r.to_string());
        println!("{i:>3}  {s:<11} {:>8} {row:>6}", s.full_index()?);
    }
    Ok(())
}
