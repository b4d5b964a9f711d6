//! Upper and lower bounds on the jet-generation numbers `s(kL, x)`.
//!
//! `s(kL, x)` is the largest `s` such that `|kL|` generates `s`-jets at `x`,
//! with `s = -1` meaning `x` is a base point. All bounds below are clamped at
//! `-1` for that reason.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::exactmath::{cmp_to_nth_root, floor_scale, perfect_nth_root, to_i64, Rational, RootOrdering};

/// Which lower bound applies to a polarized variety.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CanonicalClass {
    /// The polarization is `-K_X`, which is ample.
    #[serde(rename = "fano")]
    Fano,
    /// `K_X` is trivial; the polarization is any ample `L`.
    #[serde(rename = "trivialK")]
    TrivialK,
    /// No assumption on `K_X`; only the upper bound is available.
    #[serde(rename = "general")]
    General,
}

impl fmt::Display for CanonicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CanonicalClass::Fano => "fano",
            CanonicalClass::TrivialK => "trivialK",
            CanonicalClass::General => "general",
        })
    }
}

impl std::str::FromStr for CanonicalClass {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fano" => Ok(CanonicalClass::Fano),
            "trivialK" => Ok(CanonicalClass::TrivialK),
            "general" => Ok(CanonicalClass::General),
            other => Err(invalid(format!("unknown canonical class {other:?} (expected fano, trivialK or general)"))),
        }
    }
}

/// Admissible range `[s_lo, s_hi]` for `s(kL, x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct JetInterval {
    pub k: u64,
    pub s_lo: i64,
    pub s_hi: i64,
}

impl JetInterval {
    pub fn contains(&self, s: i64) -> bool {
        self.s_lo <= s && s <= self.s_hi
    }

    pub fn width(&self) -> i64 {
        self.s_hi - self.s_lo
    }
}

/// A curve computing the Seshadri constant, singular at the point:
/// `eps = l_dot_c / m` with `m = mult_x(C) >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularCurveData {
    #[serde(rename = "LC")]
    pub l_dot_c: u64,
    pub m: u64,
}

impl SingularCurveData {
    pub fn eps(&self) -> Result<Rational> {
        Rational::new(self.l_dot_c, self.m)
    }
}

/// Upper bounds on `eps(-K_X, x)` for a Fano variety of dimension `n` and
/// anticanonical degree `(-K_X)^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeshadriCap {
    /// `n + 1` when the n-th root of the degree is an integer, else `n`.
    pub corollary_bound: u64,
    /// `(degree, n)`: `eps` never exceeds `degree^(1/n)`.
    pub root_bound: (u64, u32),
    pub root_is_integer: bool,
}

impl SeshadriCap {
    /// The best integer cap: the corollary bound, lowered to the degree's
    /// n-th root when that root is an integer.
    pub fn effective_cap(&self) -> u64 {
        let (m, n) = self.root_bound;
        match perfect_nth_root(m, n) {
            Some(e) => self.corollary_bound.min(e),
            None => self.corollary_bound,
        }
    }

    /// Whether `eps` respects the caps: `eps <= degree^(1/n)` always, and
    /// `eps <= n` unless `eps` is exactly the integer root (then `<= n + 1`).
    pub fn admits(&self, eps: &Rational) -> bool {
        let (m, n) = self.root_bound;
        match cmp_to_nth_root(eps, m, n) {
            RootOrdering::Above => false,
            RootOrdering::Equal if self.root_is_integer => *eps <= Rational::from_integer(self.corollary_bound),
            _ => *eps <= Rational::from_integer(u64::from(n)),
        }
    }
}

fn clamp(x: BigInt) -> Result<i64> {
    let x = to_i64(&x, "jet bound")?;
    Ok(x.max(-1))
}

fn require_positive(eps: &Rational) -> Result<()> {
    if eps.is_positive() {
        Ok(())
    } else {
        Err(invalid(format!("Seshadri value must be positive, got {eps}")))
    }
}

/// Returns `Some(e)` when `eps` equals the integer root `e` of `degree`
/// (the alternative case), `None` for the first case.
fn alternative_case(eps: &Rational, degree: u64, n: u32) -> Result<Option<u64>> {
    match cmp_to_nth_root(eps, degree, n) {
        RootOrdering::Above => {
            Err(invalid(format!("Seshadri value {eps} exceeds the {n}-th root of the degree {degree}")))
        }
        RootOrdering::Below => Ok(None),
        RootOrdering::Equal => Ok(perfect_nth_root(degree, n)),
    }
}

/// `max(-1, floor(k * eps))`. Valid on every smooth projective variety.
pub fn upper_jet_bound(k: u64, eps: &Rational) -> Result<i64> {
    clamp(floor_scale(k, eps)?)
}

/// Lower bound on `s(k(-K_X), x)` for a Fano variety with `eps = eps(-K_X, x)`
/// and `kn = (-K_X)^n`.
///
/// First case (eps below the root, or the root is irrational):
/// `floor((k+1) eps) - n`. Alternative case (eps equals the integer root `e`):
/// `(k+1) e - (n+1)`.
pub fn fano_lower_bound(k: u64, eps: &Rational, n: u32, kn: u64) -> Result<i64> {
    require_positive(eps)?;
    let case = alternative_case(eps, kn, n)?;
    let cap = fano_seshadri_cap(n, kn);
    if !cap.admits(eps) {
        return Err(invalid(format!(
            "Seshadri value {eps} exceeds the Fano cap {} for degree {kn} in dimension {n}",
            cap.effective_cap()
        )));
    }
    let n = BigInt::from(n);
    match case {
        None => clamp(floor_scale(k + 1, eps)? - n),
        Some(e) => clamp(BigInt::from(k + 1) * e - (n + 1)),
    }
}

/// Lower bound on `s(kL, x)` when `K_X` is trivial and `ln = L^n`.
///
/// First case: `floor(k eps) - n`. Alternative case: `k e - (n+1)`.
pub fn trivial_k_lower_bound(k: u64, eps: &Rational, n: u32, ln: u64) -> Result<i64> {
    require_positive(eps)?;
    let case = alternative_case(eps, ln, n)?;
    let n = BigInt::from(n);
    match case {
        None => clamp(floor_scale(k, eps)? - n),
        Some(e) => clamp(BigInt::from(k) * e - (n + 1)),
    }
}

/// The class-appropriate interval for `s(kL, x)`. `degree` is `(-K_X)^n`
/// for Fano and `L^n` for trivial canonical class; it is ignored for
/// [`CanonicalClass::General`], which only has the upper bound.
pub fn jet_interval(cls: CanonicalClass, k: u64, eps: &Rational, n: u32, degree: u64) -> Result<JetInterval> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    let s_hi = upper_jet_bound(k, eps)?;
    let s_lo = match cls {
        CanonicalClass::Fano => fano_lower_bound(k, eps, n, degree)?,
        CanonicalClass::TrivialK => trivial_k_lower_bound(k, eps, n, degree)?,
        CanonicalClass::General => -1,
    };
    Ok(JetInterval { k, s_lo, s_hi })
}

/// Smallest `k >= 1` with `floor((k+1) eps) - b > floor(k eps)`, or `None`
/// when `eps <= b` (then no such `k` exists).
///
/// Writing `eps = e + d` with `0 <= d < 1`, the first `k` with
/// `k d < 1 <= (k+1) d` is a witness, so the scan stops by `den(eps) + 1`.
pub fn floor_gap_witness(eps: &Rational, b: u64) -> Option<u64> {
    if *eps <= Rational::from_integer(b) {
        return None;
    }
    let (num, den) = (eps.numer(), eps.denom());
    let stop = den + 1u32;
    let b = BigInt::from(b);
    let mut k = BigInt::one();
    loop {
        assert!(k <= stop, "no floor-gap witness below den + 1 for {eps}");
        let next = (num * (&k + 1u32)).div_floor(den);
        let here = (num * &k).div_floor(den);
        if next - &b > here {
            return Some(to_u64_signed(&k));
        }
        k += 1u32;
    }
}

fn to_u64_signed(k: &BigInt) -> u64 {
    k.to_u64().expect("witness bounded by den + 1")
}

/// Caps on `eps(-K_X, x)` for a Fano variety: at most `n + 1`, and at most
/// `n` unless `(-K_X)^n` is a perfect n-th power.
pub fn fano_seshadri_cap(n: u32, kn: u64) -> SeshadriCap {
    let root_is_integer = perfect_nth_root(kn, n).is_some();
    SeshadriCap { corollary_bound: u64::from(n) + u64::from(root_is_integer), root_bound: (kn, n), root_is_integer }
}

/// Largest `s` compatible with a singular computing curve:
/// `max(-1, floor((k L.C - 1) / m))`, strictly below `k eps`.
pub fn singular_curve_cap(k: u64, data: &SingularCurveData) -> Result<i64> {
    if data.m < 2 {
        return Err(invalid(format!("multiplicity {} does not describe a curve singular at the point", data.m)));
    }
    if data.l_dot_c == 0 {
        return Err(invalid("L.C must be positive for an ample L"));
    }
    let top: BigInt = BigInt::from(k) * data.l_dot_c - 1;
    clamp(top.div_floor(&BigInt::from(data.m)))
}

/// Outcome of the index-theorem checks on a surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IndexVerdict {
    /// `L^2 C^2 <= (L.C)^2`.
    pub hodge_ok: bool,
    /// `C^2 <= 1`, forced when the computing curve is smooth at the point.
    pub smooth_case_c2_le_1: bool,
    /// `C^2 <= 0`; only evaluated when `eps^2 < L^2`.
    pub strict_case_c2_le_0: Option<bool>,
}

impl IndexVerdict {
    pub fn all_pass(&self) -> bool {
        self.hodge_ok && self.smooth_case_c2_le_1 && self.strict_case_c2_le_0.unwrap_or(true)
    }
}

/// Index-theorem constraints for a curve `C` on a surface computing `eps`
/// and smooth at the point.
pub fn index_theorem_check(l2: u64, l_dot_c: u64, c2: i64, eps: &Rational) -> IndexVerdict {
    let lhs = BigInt::from(l2) * c2;
    let rhs: BigInt = Pow::pow(BigInt::from(l_dot_c), 2u32);
    let strict = eps.square() < Rational::from_integer(l2);
    IndexVerdict { hodge_ok: lhs <= rhs, smooth_case_c2_le_1: c2 <= 1, strict_case_c2_le_0: strict.then_some(c2 <= 0) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BsVerdict {
    NoConclusion,
    MustBeProjectiveSpace,
}

/// A Fano `X` whose `k(-K_X)` generates `s`-jets everywhere satisfies
/// `(k(-K_X))^n >= s^n + s^(n-1)` unless `X` is projective space. Reports
/// `MustBeProjectiveSpace` when that inequality fails. `s = 0` gives no
/// conclusion.
pub fn bs_projective_space_test(n: u32, kn: u64, k: u64, s: u64) -> BsVerdict {
    if s == 0 || n == 0 {
        return BsVerdict::NoConclusion;
    }
    let lhs: BigInt = Pow::pow(BigInt::from(k), n) * kn;
    let s = BigInt::from(s);
    let rhs: BigInt = Pow::pow(&s, n) + Pow::pow(&s, n - 1);
    if lhs < rhs {
        BsVerdict::MustBeProjectiveSpace
    } else {
        BsVerdict::NoConclusion
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PnVerdict {
    IsProjectiveSpace,
    BoundViolated,
    NoConclusion,
}

/// Classifies a Fano datum `(n, (-K_X)^n, eps(-K_X, x))`. `eps = n + 1` at a
/// single point characterizes projective space, which also forces
/// `(-K_X)^n = (n+1)^n`; a mismatch there, or any `eps` above the Fano caps,
/// is reported as `BoundViolated`.
pub fn pn_verdict(n: u32, kn: u64, eps: &Rational) -> PnVerdict {
    if !eps.is_positive() {
        return PnVerdict::BoundViolated;
    }
    if *eps == Rational::from_integer(u64::from(n) + 1) {
        let expected: BigInt = Pow::pow(BigInt::from(n) + 1, n);
        return if BigInt::from(kn) == expected { PnVerdict::IsProjectiveSpace } else { PnVerdict::BoundViolated };
    }
    if fano_seshadri_cap(n, kn).admits(eps) {
        PnVerdict::NoConclusion
    } else {
        PnVerdict::BoundViolated
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(upper_jet_bound(1, &q("4/3")).unwrap(), 1);
        assert_eq!(upper_jet_bound(2, &q("3")).unwrap(), 6);
        assert_eq!(upper_jet_bound(5, &q("4/3")).unwrap(), 6);
        assert!(upper_jet_bound(1, &q("0")).is_err());
    }

    #[test]
    fn fano_lower_examples() {
        for k in 1..=5 {
            assert_eq!(fano_lower_bound(k, &q("3"), 2, 9).unwrap(), 3 * k as i64);
        }
        // floor(2 * 2) - 2
        assert_eq!(fano_lower_bound(1, &q("2"), 2, 8).unwrap(), 2);
        // alternative case on P^1: (k+1) - 2
        assert_eq!(fano_lower_bound(1, &q("1"), 1, 1).unwrap(), 0);
    }

    #[test]
    fn fano_lower_rejects_impossible_eps() {
        // above sqrt(8)
        assert!(fano_lower_bound(1, &q("3"), 2, 8).is_err());
        // below sqrt(8) but above the corollary cap n = 2
        assert!(fano_lower_bound(1, &q("5/2"), 2, 8).is_err());
    }

    #[test]
    fn trivial_k_lower_examples() {
        assert_eq!(trivial_k_lower_bound(5, &q("4/3"), 2, 2).unwrap(), 4);
        for k in 2..=20u64 {
            assert_eq!(trivial_k_lower_bound(k, &q("2"), 2, 4).unwrap(), 2 * k as i64 - 3);
        }
        assert_eq!(trivial_k_lower_bound(1, &q("1"), 2, 4).unwrap(), -1);
        assert!(trivial_k_lower_bound(1, &q("3/2"), 2, 2).is_err());
    }

    #[test]
    fn interval_examples() {
        let iv = jet_interval(CanonicalClass::TrivialK, 3, &q("4/3"), 2, 2).unwrap();
        assert_eq!((iv.s_lo, iv.s_hi), (2, 4));
        let iv = jet_interval(CanonicalClass::Fano, 2, &q("3"), 2, 9).unwrap();
        assert_eq!((iv.s_lo, iv.s_hi), (6, 6));
        let iv = jet_interval(CanonicalClass::General, 4, &q("1"), 2, 2).unwrap();
        assert_eq!((iv.s_lo, iv.s_hi), (-1, 4));
        assert!(jet_interval(CanonicalClass::General, 0, &q("1"), 2, 2).is_err());
    }

    #[test]
    fn floor_gap_examples() {
        assert_eq!(floor_gap_witness(&q("7/3"), 2), Some(2));
        assert_eq!(floor_gap_witness(&q("2"), 2), None);
        assert_eq!(floor_gap_witness(&q("5/2"), 2), Some(1));
        assert_eq!(floor_gap_witness(&q("3"), 2), Some(1));
    }

    #[test]
    fn cap_examples() {
        let c = fano_seshadri_cap(2, 8);
        assert_eq!((c.corollary_bound, c.root_is_integer, c.effective_cap()), (2, false, 2));
        let c = fano_seshadri_cap(2, 4);
        assert_eq!((c.corollary_bound, c.root_is_integer, c.effective_cap()), (3, true, 2));
        let c = fano_seshadri_cap(2, 1);
        assert_eq!((c.corollary_bound, c.effective_cap()), (3, 1));
        assert!(c.admits(&q("1")));
        assert!(!c.admits(&q("3/2")));
    }

    #[test]
    fn singular_cap_examples() {
        let d = SingularCurveData { l_dot_c: 4, m: 3 };
        assert_eq!(singular_curve_cap(3, &d).unwrap(), 3);
        assert_eq!(singular_curve_cap(6, &d).unwrap(), 7);
        assert_eq!(singular_curve_cap(1, &d).unwrap(), 1);
        assert!(singular_curve_cap(1, &SingularCurveData { l_dot_c: 4, m: 1 }).is_err());
        assert!(singular_curve_cap(1, &SingularCurveData { l_dot_c: 0, m: 2 }).is_err());
    }

    #[test]
    fn index_theorem_examples() {
        let v = index_theorem_check(4, 2, 0, &q("2"));
        assert!(v.all_pass());
        assert_eq!(v.strict_case_c2_le_0, None);

        assert!(!index_theorem_check(2, 1, 2, &q("1")).hodge_ok);

        // a line on a quartic: eps = 1 < 2 = sqrt(L^2), C^2 = -2
        for c2 in [0, -2] {
            let v = index_theorem_check(4, 1, c2, &q("1"));
            assert_eq!(v.strict_case_c2_le_0, Some(true));
            assert!(v.all_pass());
        }
        assert_eq!(index_theorem_check(4, 1, 1, &q("1")).strict_case_c2_le_0, Some(false));
    }

    #[test]
    fn bs_examples() {
        assert_eq!(bs_projective_space_test(2, 9, 1, 3), BsVerdict::MustBeProjectiveSpace);
        assert_eq!(bs_projective_space_test(2, 8, 1, 2), BsVerdict::NoConclusion);
        assert_eq!(bs_projective_space_test(2, 9, 2, 6), BsVerdict::MustBeProjectiveSpace);
        assert_eq!(bs_projective_space_test(2, 9, 2, 0), BsVerdict::NoConclusion);
    }

    #[test]
    fn pn_examples() {
        assert_eq!(pn_verdict(3, 64, &q("4")), PnVerdict::IsProjectiveSpace);
        assert_eq!(pn_verdict(3, 63, &q("4")), PnVerdict::BoundViolated);
        assert_eq!(pn_verdict(2, 8, &q("5/2")), PnVerdict::BoundViolated);
        assert_eq!(pn_verdict(2, 8, &q("2")), PnVerdict::NoConclusion);
    }

    #[test]
    fn projective_space_rigidity() {
        for n in 1..=6u32 {
            let kn = (u64::from(n) + 1).pow(n);
            let eps = Rational::from_integer(u64::from(n) + 1);
            for k in 1..=20u64 {
                let want = (k * (u64::from(n) + 1)) as i64;
                assert_eq!(fano_lower_bound(k, &eps, n, kn).unwrap(), want);
                assert_eq!(upper_jet_bound(k, &eps).unwrap(), want);
            }
        }
    }

    fn brute_gap_witness(p: i64, q: i64, b: i64, limit: i64) -> Option<u64> {
        (1..=limit).find(|&k| (p * (k + 1)).div_euclid(q) - b > (p * k).div_euclid(q)).map(|k| k as u64)
    }

    #[test]
    fn floor_gap_matches_scan() {
        for q_ in 1..=40i64 {
            for p in 1..=40i64 {
                let eps = Rational::new(p, q_).unwrap();
                for b in 0..=40i64 {
                    let scan = brute_gap_witness(p, q_, b, 10 * q_);
                    assert_eq!(floor_gap_witness(&eps, b as u64), scan, "eps={eps} b={b}");
                    assert_eq!(scan.is_some(), p > b * q_);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn trivial_k_lower_le_upper(k in 1u64..=1000, p in 1i64..=60, d in 1i64..=30, n in 1u32..=4, ln in 1u64..=200) {
            let eps = Rational::new(p, d).unwrap();
            prop_assume!(cmp_to_nth_root(&eps, ln, n) != RootOrdering::Above);
            let lo = trivial_k_lower_bound(k, &eps, n, ln).unwrap();
            let hi = upper_jet_bound(k, &eps).unwrap();
            prop_assert!(-1 <= lo && lo <= hi);
            match alternative_case(&eps, ln, n).unwrap() {
                None => if lo > -1 { prop_assert_eq!(hi - lo, i64::from(n)) },
                Some(_) => prop_assert!(hi - lo <= i64::from(n) + 1),
            }
        }

        #[test]
        fn fano_lower_le_upper(k in 1u64..=1000, p in 1i64..=60, d in 1i64..=30, n in 1u32..=4, kn in 1u64..=700) {
            let eps = Rational::new(p, d).unwrap();
            prop_assume!(fano_seshadri_cap(n, kn).admits(&eps));
            let lo = fano_lower_bound(k, &eps, n, kn).unwrap();
            let hi = upper_jet_bound(k, &eps).unwrap();
            prop_assert!(-1 <= lo && lo <= hi);
        }

        #[test]
        fn singular_cap_strictly_below_k_eps(k in 1u64..=1000, lc in 1u64..=50, m in 2u64..=50) {
            let d = SingularCurveData { l_dot_c: lc, m };
            let cap = singular_curve_cap(k, &d).unwrap();
            let k_eps = Rational::new(k * lc, m).unwrap();
            prop_assert!(Rational::from_integer(cap) < k_eps);
            // and it is the largest such s with s <= k eps - 1/m
            let next = &Rational::from_integer(cap + 1) + &Rational::new(1, m).unwrap();
            prop_assert!(cap == -1 || next > k_eps);
        }

        #[test]
        fn intervals_converge(k in 1u64..=1000, p in 1i64..=40, d in 1i64..=20, ln in 1u64..=100) {
            let eps = Rational::new(p, d).unwrap();
            let n = 2u32;
            prop_assume!(cmp_to_nth_root(&eps, ln, n) != RootOrdering::Above);
            let iv = jet_interval(CanonicalClass::TrivialK, k, &eps, n, ln).unwrap();
            let k_eps = Rational::new(BigInt::from(k) * eps.numer(), eps.denom().clone()).unwrap();
            let dist = |s: i64| {
                let x = Rational::from_integer(s);
                if x > k_eps { &x - &k_eps } else { &k_eps - &x }
            };
            prop_assert!(dist(iv.s_hi) <= Rational::from_integer(1));
            prop_assert!(dist(iv.s_lo) <= Rational::from_integer(i64::from(n) + 2));
        }
    }
}
