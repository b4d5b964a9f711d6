//! First Chern classes of jet bundles, computed formally in the lattice
//! spanned by `c1(L)` and `c1(K_X)`.
//!
//! `J_k(L)` sits in `0 -> Sym^k(Omega_X) (x) L -> J_k(L) -> J_{k-1}(L) -> 0`,
//! so `c1(J_k(L))` is the sum of the twisted symmetric powers for `j = 0..=k`.
//! For `L = -K_X` and `k = n + 1` that sum vanishes.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::exactmath::binomial;

/// `a c1(L) + b c1(K_X)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DivisorExpression {
    pub a: BigInt,
    pub b: BigInt,
}

impl DivisorExpression {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        DivisorExpression { a: a.into(), b: b.into() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Coefficient of `c1(K_X)` after putting `L = -K_X`.
    pub fn at_anticanonical(&self) -> BigInt {
        &self.b - &self.a
    }
}

impl std::ops::Add for DivisorExpression {
    type Output = DivisorExpression;

    fn add(self, rhs: DivisorExpression) -> DivisorExpression {
        DivisorExpression { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl fmt::Display for DivisorExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·L + {}·K", self.a, self.b)
    }
}

/// Rank and first Chern class of `Sym^j(Omega_X)` on an `n`-fold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPower {
    pub rank: BigUint,
    /// `c1` as a multiple of `c1(K_X)`; the `a` part is zero.
    pub expr: DivisorExpression,
}

impl SymPower {
    /// `c1(Sym^j(Omega_X) (x) L) = rank c1(L) + c1(Sym^j(Omega_X))`.
    pub fn twisted(&self) -> DivisorExpression {
        DivisorExpression { a: BigInt::from(self.rank.clone()), b: self.expr.b.clone() }
    }
}

/// `rank = C(n+j-1, j)`, `c1 = C(n+j-1, n) c1(K_X)`.
pub fn sym_cotangent_c1(n: u32, j: u64) -> SymPower {
    let n = u64::from(n);
    let top = (n + j).saturating_sub(1);
    SymPower { rank: binomial(top, j), expr: DivisorExpression::new(0, BigInt::from(binomial(top, n))) }
}

/// `c1(J_k(L))` on an `n`-fold, accumulated one exact sequence at a time.
pub fn jet_c1(n: u32, k: u64) -> DivisorExpression {
    (0..=k).fold(DivisorExpression::default(), |acc, j| acc + sym_cotangent_c1(n, j).twisted())
}

/// Whether `c1(J_{n+1}(-K_X))` is trivial.
pub fn anticanonical_jet_trivial(n: u32) -> bool {
    jet_c1(n, u64::from(n) + 1).at_anticanonical().is_zero()
}

/// Splitting type of `T_X` and `-K_X` along a rational curve `f: P^1 -> X`:
/// `f*T_X = O(a_1) + ... + O(a_n)`, `f*(-K_X) = O(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingType {
    a_list: Vec<i64>,
    b: i64,
}

impl SplittingType {
    pub fn new(a_list: Vec<i64>, b: i64) -> Result<Self> {
        if a_list.is_empty() {
            return Err(invalid("splitting type needs at least one summand"));
        }
        if b < 1 {
            return Err(invalid(format!("-K_X is ample, so b must be positive (got {b})")));
        }
        let sum: i128 = a_list.iter().map(|&a| i128::from(a)).sum();
        if sum != i128::from(b) {
            return Err(invalid(format!("degrees {a_list:?} sum to {sum}, not b = {b}")));
        }
        Ok(SplittingType { a_list, b })
    }

    pub fn a_list(&self) -> &[i64] {
        &self.a_list
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn dim(&self) -> usize {
        self.a_list.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoriVerdict {
    /// Every `a_i > 0`: the hypothesis of Mori's characterization of
    /// projective space along this curve.
    AllPositive,
    /// `(n+1) a_i - b < 0` at the 1-based `index`.
    ConstraintViolated { index: usize },
}

/// Checks `(n+1) a_i - b >= 0` for every summand, which is what global
/// generation of `Sym^{n+1} T_X (x) K_X` along the curve requires.
pub fn mori_positivity_check(st: &SplittingType) -> MoriVerdict {
    let n1 = st.dim() as i128 + 1;
    st.a_list
        .iter()
        .position(|&a| n1 * i128::from(a) - i128::from(st.b) < 0)
        .map_or(MoriVerdict::AllPositive, |i| MoriVerdict::ConstraintViolated { index: i + 1 })
}
