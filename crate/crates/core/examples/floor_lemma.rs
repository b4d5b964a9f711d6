//! The floor-gap lemma: if `floor((k+1) eps) - b <= floor(k eps)` for every
//! `k >= 1` then `eps <= b`. For `eps > b` this finds the first `k` that
//! breaks the inequality.

use std::error::Error;

use seshadri_jets::bounds::floor_gap_witness;
use seshadri_jets::exactmath::floor_scale;
use seshadri_jets::Rational;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (eps, b) in [("7/3", 2), ("5/2", 2), ("2", 2), ("3", 2), ("41/20", 2), ("17/8", 2), ("4/3", 1)] {
        let eps: Rational = eps.parse()?;
        match floor_gap_witness(&eps, b) {
            Some(k) => println!(
                "eps={eps:>5} b={b}: breaks at k={k}  (floor({}*eps) - {b} = {} > {} = floor({k}*eps))",
                k + 1,
                floor_scale(k + 1, &eps)? - b,
                floor_scale(k, &eps)?,
            ),
            None => println!("eps={eps:>5} b={b}: holds for every k"),
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
