//! Exact integer and rational arithmetic.
//!
//! Every decision in the crate (floors, case splits on whether a Seshadri
//! constant hits the n-th root of the degree, section counts) goes through
//! this module. Nothing here touches floating point.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// A reduced fraction `num/den` with `den >= 1`.
///
/// Reduction happens on construction, so derived equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(invalid("zero denominator"));
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value, if the denominator is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    pub fn square(&self) -> Rational {
        Rational(&self.0 * &self.0)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&Rational> for &Rational {
            type Output = Rational;

            fn $method(self, rhs: &Rational) -> Rational {
                Rational(std::ops::$trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

fn parse_int(s: &str, signed: bool) -> Option<BigInt> {
    let digits = match s.strip_prefix('-') {
        Some(rest) if signed => rest,
        Some(_) => return None,
        None => s,
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q` in ASCII with no whitespace; only the numerator
    /// may carry a sign.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((p, q)) => (parse_int(p, true).ok_or_else(bad)?, parse_int(q, false).ok_or_else(bad)?),
            None => (parse_int(s, true).ok_or_else(bad)?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(bad());
        }
        Rational::new(num, den)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Position of a rational relative to a real n-th root.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootOrdering {
    Below,
    Equal,
    Above,
}

impl From<Ordering> for RootOrdering {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => RootOrdering::Below,
            Ordering::Equal => RootOrdering::Equal,
            Ordering::Greater => RootOrdering::Above,
        }
    }
}

/// `floor(k * eps)` for positive `eps`.
pub fn floor_scale(k: u64, eps: &Rational) -> Result<BigInt> {
    if !eps.is_positive() {
        return Err(invalid(format!("Seshadri value must be positive, got {eps}")));
    }
    Ok((eps.numer() * BigInt::from(k)).div_floor(eps.denom()))
}

/// Binomial coefficient `C(a, b)`, zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    // Each prefix product is itself a binomial, so the division is exact.
    (0..b).fold(BigUint::one(), |acc, i| acc * (a - i) / (i + 1))
}

/// The integer `e` with `e^n = m`, if there is one.
pub fn perfect_nth_root(m: u64, n: u32) -> Option<u64> {
    if n == 0 {
        return None;
    }
    let big = BigUint::from(m);
    let root = big.nth_root(n);
    (Pow::pow(&root, n) == big).then(|| root.to_u64().expect("root of a u64 fits in u64"))
}

/// Compares `eps` with the positive real `m^(1/n)` by testing
/// `num^n` against `m * den^n`.
pub fn cmp_to_nth_root(eps: &Rational, m: u64, n: u32) -> RootOrdering {
    if !eps.is_positive() {
        return if m == 0 && eps.numer().is_zero() { RootOrdering::Equal } else { RootOrdering::Below };
    }
    let lhs: BigInt = Pow::pow(eps.numer(), n);
    let rhs: BigInt = BigInt::from(m) * Pow::pow(eps.denom(), n);
    lhs.cmp(&rhs).into()
}

pub(crate) fn to_i64(x: &BigInt, what: &'static str) -> Result<i64> {
    x.to_i64().ok_or(Error::Overflow(what))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn floor_scale_examples() {
        assert_eq!(floor_scale(3, &q("4/3")).unwrap(), BigInt::from(4));
        assert_eq!(floor_scale(7, &q("2")).unwrap(), BigInt::from(14));
        assert_eq!(floor_scale(10, &q("4/3")).unwrap(), BigInt::from(13));
        assert!(floor_scale(1, &q("0")).is_err());
        assert!(floor_scale(1, &q("-1/2")).is_err());
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(15, 2), BigUint::from(105u32));
        assert_eq!(binomial(2, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }

    #[test]
    fn pascal_rule() {
        for a in 1..=200u64 {
            for b in 1..=a {
                assert_eq!(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b));
            }
        }
    }

    #[test]
    fn perfect_root_examples() {
        assert_eq!(perfect_nth_root(9, 2), Some(3));
        assert_eq!(perfect_nth_root(8, 2), None);
        assert_eq!(perfect_nth_root(27, 3), Some(3));
        assert_eq!(perfect_nth_root(1, 7), Some(1));
        assert_eq!(perfect_nth_root(u64::MAX, 1), Some(u64::MAX));
    }

    #[test]
    fn root_ordering_examples() {
        assert_eq!(cmp_to_nth_root(&q("4/3"), 2, 2), RootOrdering::Below);
        assert_eq!(cmp_to_nth_root(&q("3"), 9, 2), RootOrdering::Equal);
        assert_eq!(cmp_to_nth_root(&q("2"), 3, 2), RootOrdering::Above);
        assert_eq!(cmp_to_nth_root(&q("3/2"), 2, 2), RootOrdering::Above);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(q("6/4").to_string(), "3/2");
        assert_eq!(q("-6/3").to_string(), "-2");
        assert_eq!(q("5").to_string(), "5");
        for bad in ["", "/", "1/", "/2", "1/0", "1 /2", " 1", "3/-4", "+3", "1/2/3", "a"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} should not parse");
        }
    }

    proptest! {
        #[test]
        fn floor_scale_brackets(k in 1u64..=10_000, p in 1i64..=1000, d in 1i64..=1000) {
            let eps = Rational::new(p, d).unwrap();
            let f = floor_scale(k, &eps).unwrap();
            let (num, den) = (eps.numer().clone(), eps.denom().clone());
            let kp = num * BigInt::from(k);
            prop_assert!(&f * &den <= kp);
            prop_assert!(kp < (&f + 1) * &den);
        }

        #[test]
        fn perfect_root_matches_equal_ordering(m in 1u64..=1_000_000, n in 1u32..=6) {
            match perfect_nth_root(m, n) {
                Some(e) => prop_assert_eq!(
                    cmp_to_nth_root(&Rational::from_integer(e), m, n),
                    RootOrdering::Equal
                ),
                None => {
                    let r = BigUint::from(m).nth_root(n).to_u64().unwrap();
                    for e in [r, r + 1] {
                        prop_assert_ne!(
                            cmp_to_nth_root(&Rational::from_integer(e), m, n),
                            RootOrdering::Equal
                        );
                    }
                }
            }
        }

        #[test]
        fn ordering_is_literal_cross_check(p in 1i64..=500, d in 1i64..=500, m in 1u64..=1000, n in 1u32..=4) {
            let eps = Rational::new(p, d).unwrap();
            let lhs: BigInt = Pow::pow(eps.numer(), n);
            let rhs = BigInt::from(m) * Pow::pow(eps.denom(), n);
            let want: RootOrdering = lhs.cmp(&rhs).into();
            prop_assert_eq!(cmp_to_nth_root(&eps, m, n), want);
        }

        #[test]
        fn display_parse_roundtrip(p in -10_000i64..=10_000, d in 1i64..=10_000) {
            let r = Rational::new(p, d).unwrap();
            prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }
}
