//! Jets of theta functions on a principally polarized abelian surface.
//!
//! `eps(Theta, x) = 4/3` at every point, so `s(k Theta, x)` has three
//! candidates per `k`; counting sections of `k Theta` (there are `k^2`)
//! removes at least one of them.
//!
//! ```text
//! cargo run --example theta_tables
//! ```

use std::error::Error;

use seshadri_jets::catalog;
use seshadri_jets::cli::render;
use seshadri_jets::sections::table_rows;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ppas = catalog::fetch("ppas")?;

    let raw = table_rows(&ppas, 1, 10, false)?;
    println!("Candidates from the Seshadri constant alone:");
    print!("{}", render::plain_table(&ppas, &raw));

    let pruned = table_rows(&ppas, 1, 10, true)?;
    println!("\nAfter counting sections (h0(k Theta) = k^2):");
    print!("{}", render::plain_table(&ppas, &pruned));

    println!("\nLaTeX:");
    print!("{}", render::latex_table(&pruned));

    assert_eq!(pruned[2].feasible(), vec![2]);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
