//! Built-in descriptors, validation, JSON descriptors and the command-line
//! front end driven in-process.

use std::error::Error;

use seshadri_jets::catalog::{self, validate};
use seshadri_jets::cli::{self, Descriptor};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for rec in catalog::load_catalog()? {
        println!("{:<22} {}", rec.id, rec.name);
    }

    let json = Descriptor::from(&catalog::fetch("quartic_generic")?).to_canonical_json();
    println!("\n{json}");

    let mut bad = Descriptor::from_json(&json)?;
    bad.eps = Some("5/2".parse()?);
    let rec = catalog::VarietyRecord::try_from(bad)?;
    for v in validate(&rec) {
        println!("invalid: {v}");
    }

    let out = cli::run(["jets", "prune", "--catalog", "quartic_generic", "--k", "1..5", "--format", "csv"]);
    println!("\nexit {}:\n{}", out.code, out.stdout);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
