//! Section counting on surfaces: `|kL|` can only generate `s`-jets if
//! `h0(kL) >= C(s+2, 2)`.

use std::error::Error;

use seshadri_jets::catalog;
use seshadri_jets::sections::{kunneth_h0, max_s_by_sections, table_rows, two_value_threshold};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for id in ["abelian_12", "quartic_generic"] {
        let rec = catalog::fetch(id)?;
        let surface = rec.surface().ok_or("missing surface data")?;
        println!("{} (two values from k = {}):", rec.name, two_value_threshold(surface, 2)?);
        for row in table_rows(&rec, 1, 6, true)? {
            println!("  k={} h0={:>3} s in {:?}", row.k, row.h0.unwrap_or(0), row.feasible());
        }
    }

    let deg9 = catalog::fetch("degree9_p3")?;
    let model = deg9.sections.ok_or("missing sections")?;
    println!("\n{}: eps = 3, yet s(kL, x) < 3k - 4", deg9.name);
    for k in [4u64, 5, 10, 50, 100] {
        println!("  k={k:>3}: s <= {}  (3k - 5 = {})", max_s_by_sections(k, &model)?, 3 * k - 5);
    }

    let g = 5;
    println!("\nC x C with genus {g}: eps = 1 but |kL| is empty for k < g");
    for k in 1..=7 {
        println!("  k={k}: h0 = {}", kunneth_h0(g, k));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
