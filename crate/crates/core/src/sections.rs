//! Section counting on surfaces.
//!
//! If `|kL|` generates `s`-jets at a point then `h^0(kL) >= C(s+n, n)`. With
//! a model for `h^0(kL)` (Riemann–Roch on a surface, or Künneth on a product
//! of curves) this prunes the intervals produced by [`crate::bounds`].

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::bounds::{jet_interval, JetInterval};
use crate::catalog::VarietyRecord;
use crate::error::{invalid, Error, Result};
use crate::exactmath::binomial;

/// Riemann–Roch data of a polarized surface `(X, L)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSections {
    /// `chi(O_X)`
    pub chi: i64,
    #[serde(rename = "L2")]
    pub l2: u64,
    /// `L.K_X`
    #[serde(rename = "LK")]
    pub l_dot_k: i64,
    /// Smallest `k` from which `chi(kL) = h^0(kL)`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact_from: Option<u64>,
}

/// `C x C` for a curve of genus `genus`, polarized by `pr1*D + pr2*D` with
/// `D` a general divisor of degree one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveProduct {
    pub genus: u64,
}

/// `h^0(kL)` as modelled, with whether the model is known to be exact at `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct H0 {
    pub value: u64,
    pub exact: bool,
}

/// Anything that can model `h^0(kL)`.
pub trait SectionCount {
    fn h0(&self, k: u64) -> Result<H0>;
}

impl SectionCount for SurfaceSections {
    fn h0(&self, k: u64) -> Result<H0> {
        let rr = rr_value(k, self)?;
        Ok(H0 {
            value: u64::try_from(rr.max(0)).map_err(|_| Error::Overflow("h0"))?,
            exact: self.exact_from.is_some_and(|from| k >= from),
        })
    }
}

impl SectionCount for CurveProduct {
    fn h0(&self, k: u64) -> Result<H0> {
        Ok(H0 { value: kunneth_h0(self.genus, k), exact: true })
    }
}

/// The section model attached to a variety record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionModel {
    Surface(SurfaceSections),
    CurveProduct(CurveProduct),
}

impl SectionCount for SectionModel {
    fn h0(&self, k: u64) -> Result<H0> {
        match self {
            SectionModel::Surface(s) => s.h0(k),
            SectionModel::CurveProduct(c) => c.h0(k),
        }
    }
}

/// `chi(kL) = chi(O_X) + (k^2 L^2 - k L.K) / 2`.
pub fn rr_value(k: u64, d: &SurfaceSections) -> Result<i64> {
    let k = i128::from(k);
    let twice = k * k * i128::from(d.l2) - k * i128::from(d.l_dot_k);
    if twice % 2 != 0 {
        return Err(Error::ParityViolation { k: k as u64, l2: d.l2, l_dot_k: d.l_dot_k });
    }
    let value = i128::from(d.chi) + twice / 2;
    i64::try_from(value).map_err(|_| Error::Overflow("Riemann-Roch value"))
}

pub fn h0_model(k: u64, d: &impl SectionCount) -> Result<H0> {
    d.h0(k)
}

/// Number of conditions imposed by `s`-jets at a point of an `n`-fold,
/// `C(s+n, n)`; zero for `s < 0`.
pub fn jet_codim(s: i64, n: u32) -> BigUint {
    match u64::try_from(s) {
        Ok(s) => binomial(s + u64::from(n), u64::from(n)),
        Err(_) => BigUint::zero(),
    }
}

/// Largest `s >= -1` with `C(s+n, n) <= h0`.
pub fn max_jet_order(h0: u64, n: u32) -> i64 {
    let h0 = BigUint::from(h0);
    // C(s+n, n) >= s + 1, so s <= h0 - 1.
    let (mut lo, mut hi) = (-1i64, i64::try_from(&h0).unwrap_or(i64::MAX) - 1);
    while lo < hi {
        let mid = lo + (hi - lo + 1) / 2;
        if jet_codim(mid, n) <= h0 {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// A jet interval after section-count pruning. The feasible values always
/// form a prefix `[raw.s_lo, feasible_max]` of the raw interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrunedRow {
    pub k: u64,
    pub raw: JetInterval,
    /// The `h^0(kL)` used for pruning; `None` when the row was not pruned.
    pub h0: Option<u64>,
    /// False when `h0` came from Riemann–Roch outside its exactness window.
    pub exact: bool,
    /// `None` when no value of the raw interval survives.
    pub feasible_max: Option<i64>,
}

impl PrunedRow {
    pub fn unpruned(raw: JetInterval) -> Self {
        PrunedRow { k: raw.k, raw, h0: None, exact: true, feasible_max: Some(raw.s_hi) }
    }

    pub fn feasible_min(&self) -> Option<i64> {
        self.feasible_max.map(|_| self.raw.s_lo)
    }

    /// Feasible values in ascending order.
    pub fn feasible(&self) -> Vec<i64> {
        match self.feasible_max {
            Some(max) => (self.raw.s_lo..=max).collect(),
            None => Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.feasible_max.is_none()
    }
}

/// Keeps the values `s` of `raw` with `C(s+n, n) <= h0`.
pub fn prune_interval(raw: JetInterval, h0: u64, n: u32) -> PrunedRow {
    let cap = max_jet_order(h0, n).min(raw.s_hi);
    PrunedRow { k: raw.k, raw, h0: Some(h0), exact: true, feasible_max: (cap >= raw.s_lo).then_some(cap) }
}

/// Largest `s` that the section count at `k` allows on a surface.
pub fn max_s_by_sections(k: u64, d: &impl SectionCount) -> Result<i64> {
    Ok(max_jet_order(d.h0(k)?.value, 2))
}

/// Rows `k_from..=k_to` of the jet table for `rec`, pruned by its section
/// model when `prune` is set.
pub fn table_rows(rec: &VarietyRecord, k_from: u64, k_to: u64, prune: bool) -> Result<Vec<PrunedRow>> {
    if k_from == 0 || k_from > k_to {
        return Err(invalid(format!("bad k range {k_from}..{k_to}")));
    }
    let eps = rec.eps.as_ref().ok_or_else(|| invalid(format!("record {:?} has no Seshadri value", rec.id)))?;
    let model = match (prune, rec.sections) {
        (true, None) => return Err(invalid(format!("record {:?} has no section data to prune with", rec.id))),
        (true, Some(m)) => Some(m),
        (false, _) => None,
    };
    (k_from..=k_to)
        .map(|k| {
            let raw = jet_interval(rec.class, k, &eps.value, rec.n, rec.degree)?;
            Ok(match &model {
                Some(m) => {
                    let h0 = m.h0(k)?;
                    PrunedRow { exact: h0.exact, ..prune_interval(raw, h0.value, rec.n) }
                }
                None => PrunedRow::unpruned(raw),
            })
        })
        .collect()
}

/// Whether the section count at `k` excludes `s >= k e - 1`, which together
/// with the trivial-canonical-class bounds leaves only `k e - 3` and `k e - 2`.
pub fn two_value_forced(k: u64, d: &SurfaceSections, e: u64) -> Result<bool> {
    let top = i64::try_from(k * e).map_err(|_| Error::Overflow("k e"))? - 1;
    Ok(jet_codim(top, 2) > BigUint::from(d.h0(k)?.value))
}

/// The least `k0` from which [`two_value_forced`] holds for every `k >= k0`,
/// for a surface with trivial canonical class and `eps = e = sqrt(L^2)`.
///
/// `C(ke+1, 2) > chi + e^2 k^2 / 2` reduces to `k e > 2 chi`.
pub fn two_value_threshold(d: &SurfaceSections, e: u64) -> Result<u64> {
    if e == 0 || e.checked_mul(e) != Some(d.l2) {
        return Err(invalid(format!("{e}^2 is not L^2 = {}", d.l2)));
    }
    if d.l_dot_k != 0 {
        return Err(invalid("two-value threshold needs L.K = 0"));
    }
    let k0 = (2 * i128::from(d.chi)).div_euclid(i128::from(e)) + 1;
    u64::try_from(k0.max(1)).map_err(|_| Error::Overflow("threshold"))
}

/// `h^0` of a general line bundle of degree `degree` on a curve of genus `g`.
pub fn general_curve_h0(g: u64, degree: u64) -> u64 {
    (degree + 1).saturating_sub(g)
}

/// `h^0(C x C, kL) = h^0(C, kD)^2` by Künneth.
pub fn kunneth_h0(g: u64, k: u64) -> u64 {
    general_curve_h0(g, k).pow(2)
}
