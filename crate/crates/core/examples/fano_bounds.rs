//! Anticanonical jets on Fano varieties.
//!
//! Projective space sits exactly on the upper bound; every other Fano
//! variety has `eps(-K_X, x) <= n`. The del Pezzo surfaces show how the
//! cap depends on whether `sqrt((-K_X)^2)` is an integer.

use std::error::Error;

use seshadri_jets::bounds::{bs_projective_space_test, fano_seshadri_cap, jet_interval, pn_verdict, CanonicalClass};
use seshadri_jets::Rational;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("P^n: s(k(-K), x) is pinned to k(n+1)");
    for n in 1..=4u32 {
        let e = u64::from(n) + 1;
        let eps = Rational::from_integer(e);
        let intervals: Vec<String> = (1..=5)
            .map(|k| jet_interval(CanonicalClass::Fano, k, &eps, n, e.pow(n)))
            .map(|iv| iv.map(|iv| format!("[{},{}]", iv.s_lo, iv.s_hi)))
            .collect::<Result<_, _>>()?;
        println!("  n={n}: {}", intervals.join(" "));
    }

    println!("\ndel Pezzo surfaces, (-K)^2 = 9 - r");
    for r in 0..=8u64 {
        let cap = fano_seshadri_cap(2, 9 - r);
        println!(
            "  r={r}: eps(-K, x) <= {}  (sqrt(-K^2) {})",
            cap.effective_cap(),
            if cap.root_is_integer { "integer" } else { "irrational" }
        );
    }
    println!("  P^1 x P^1: eps(-K, x) <= {}", fano_seshadri_cap(2, 8).effective_cap());

    println!("\nCharacterizing P^n");
    for (n, kn, eps) in [(3, 64, "4"), (2, 8, "5/2"), (2, 8, "2"), (2, 6, "3/2")] {
        let eps: Rational = eps.parse()?;
        println!("  n={n} (-K)^n={kn} eps={eps}: {:?}", pn_verdict(n, kn, &eps));
    }
    for k in 1..=3 {
        println!(
            "  jets of order 3k={} from k(-K) on a Fano surface of degree 9: {:?}",
            3 * k,
            bs_projective_space_test(2, 9, k, 3 * k)
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
