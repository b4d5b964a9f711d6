//! First Chern class of jet bundles and the splitting-type check.
//!
//! `c1(J_k(L)) = C(n+k, n) c1(L) + C(n+k, n+1) c1(K_X)`, which vanishes for
//! `L = -K_X` exactly when `k = n + 1`.

use std::error::Error;

use seshadri_jets::chern::{anticanonical_jet_trivial, jet_c1, mori_positivity_check, sym_cotangent_c1, SplittingType};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 3;
    for j in 0..=4 {
        let s = sym_cotangent_c1(n, j);
        println!("Sym^{j} Omega on a {n}-fold: rank {}, c1 = {}·K", s.rank, s.expr.b);
    }
    for k in 0..=5 {
        let c1 = jet_c1(n, k);
        println!("c1(J_{k}(L)) = {c1}   at L = -K: {}·K", c1.at_anticanonical());
    }
    let trivial: Vec<u32> = (1..=12).filter(|&n| anticanonical_jet_trivial(n)).collect();
    println!("c1(J_(n+1)(-K)) = 0 for n in {trivial:?}");

    for (a, b) in [(vec![2], 2), (vec![1, 2], 3), (vec![0, 3], 3), (vec![1, 1, 2], 4), (vec![-1, 2, 3], 4)] {
        let st = SplittingType::new(a.clone(), b)?;
        println!("f*T = {a:?}, f*(-K) = O({b}): {:?}", mori_positivity_check(&st));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
