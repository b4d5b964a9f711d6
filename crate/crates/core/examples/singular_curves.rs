//! When a singular curve computes the Seshadri constant, `s(kL, x)` never
//! reaches `k eps`. On a principally polarized abelian surface with
//! `eps = 4/3` this lowers the top candidate whenever `3 | k`.

use std::error::Error;

use seshadri_jets::bounds::{index_theorem_check, singular_curve_cap, upper_jet_bound};
use seshadri_jets::catalog;
use seshadri_jets::Rational;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let ppas = catalog::fetch("ppas")?;
    let curve = ppas.singular_curve.ok_or("no singular curve")?.data;
    let eps = curve.eps()?;
    println!("L.C = {}, mult_x C = {}, eps = {eps}", curve.l_dot_c, curve.m);
    for k in 1..=9 {
        let generic = upper_jet_bound(k, &eps)?;
        let cap = singular_curve_cap(k, &curve)?;
        let note = if cap < generic { "  <- improved" } else { "" };
        println!("  k={k}: floor(k eps) = {generic:>2}, singular-curve cap = {cap:>2}{note}");
    }

    println!("\nIndex theorem on a quartic surface (L^2 = 4):");
    for (name, l_dot_c, c2, eps) in
        [("line through x", 1, -2, "1"), ("conic with C^2 = 0", 2, 0, "2"), ("curve with C^2 = 2", 1, 2, "1")]
    {
        let v = index_theorem_check(4, l_dot_c, c2, &eps.parse::<Rational>()?);
        println!("  {name}: {v:?}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
