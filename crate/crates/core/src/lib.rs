//! Jet generation of linear series from Seshadri constants.
//!
//! Given `eps(L, x)` for a polarized smooth projective variety, this crate
//! computes exact ranges for `s(kL, x)`, the largest order of jets that
//! `|kL|` generates at `x`:
//!
//! - [`bounds`]: upper bound `floor(k eps)` and the lower bounds for Fano
//!   varieties and varieties with trivial canonical class, the floor-gap
//!   lemma behind the Fano caps `eps(-K_X, x) <= n` (or `n + 1`), refinement
//!   by a singular computing curve, and the projective-space tests.
//! - [`sections`]: pruning by section counts, `h^0(kL) >= C(s+n, n)`.
//! - [`chern`]: the first Chern class of jet bundles and the splitting-type
//!   positivity check along rational curves.
//! - [`catalog`]: the classical examples as validated records.
//! - [`cli`]: the `jets` command-line front end and descriptor JSON.
//!
//! Everything is exact: rationals and big integers, no floating point.
//!
//! ```
//! use seshadri_jets::{catalog, sections};
//!
//! let ppas = catalog::fetch("ppas").unwrap();
//! let rows = sections::table_rows(&ppas, 1, 10, true).unwrap();
//! assert_eq!(rows[2].feasible(), vec![2]);
//! ```

pub mod bounds;
pub mod catalog;
pub mod chern;
pub mod cli;
mod error;
pub mod exactmath;
pub mod sections;

pub use error::{Error, Result};
pub use exactmath::{Rational, RootOrdering};
