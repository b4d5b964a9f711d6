//! Built-in descriptors for the worked examples, and descriptor validation.

use std::fmt;

use serde::Serialize;

use crate::bounds::{fano_seshadri_cap, jet_interval, singular_curve_cap, CanonicalClass, SingularCurveData};
use crate::error::{Error, Result};
use crate::exactmath::{cmp_to_nth_root, Rational, RootOrdering};
use crate::sections::{rr_value, CurveProduct, SectionModel, SurfaceSections};

/// Which points a Seshadri value or jet fact is asserted for.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PointClass {
    AllPoints,
    VeryGeneral,
    Generic,
    Special(String),
}

impl PointClass {
    /// Text form used in JSON descriptors.
    pub fn label(&self) -> &str {
        match self {
            PointClass::AllPoints => "all_points",
            PointClass::VeryGeneral => "very_general",
            PointClass::Generic => "generic",
            PointClass::Special(label) => label,
        }
    }

    pub fn from_label(label: &str) -> Self {
        match label {
            "all_points" => PointClass::AllPoints,
            "very_general" => PointClass::VeryGeneral,
            "generic" => PointClass::Generic,
            other => PointClass::Special(other.to_string()),
        }
    }
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Where a stored value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Source {
    /// Quoted from the literature.
    Literature,
    /// Computed here from other data; not asserted by the literature.
    Derived,
    /// Supplied by a user descriptor.
    User,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeshadriDatum {
    pub value: Rational,
    pub point_class: PointClass,
    pub source: Source,
    pub note: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SingularCurve {
    pub data: SingularCurveData,
    pub source: Source,
}

/// A known value (or lower bound) of `s(kL, x)` at some class of points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnownJet {
    pub k: u64,
    pub s: i64,
    /// `s` is only a lower bound.
    pub at_least: bool,
    pub at: PointClass,
}

impl KnownJet {
    fn exact(k: u64, s: i64, at: PointClass) -> Self {
        KnownJet { k, s, at_least: false, at }
    }
}

/// A polarized smooth projective variety together with its Seshadri data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyRecord {
    pub id: String,
    pub name: String,
    pub n: u32,
    pub class: CanonicalClass,
    /// `L^n`, or `(-K_X)^n` for Fano records.
    pub degree: u64,
    pub eps: Option<SeshadriDatum>,
    pub sections: Option<SectionModel>,
    pub singular_curve: Option<SingularCurve>,
    pub known_s: Vec<KnownJet>,
}

impl VarietyRecord {
    pub fn surface(&self) -> Option<&SurfaceSections> {
        match &self.sections {
            Some(SectionModel::Surface(s)) => Some(s),
            _ => None,
        }
    }
}

/// One failed invariant of a [`VarietyRecord`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Shape(String),
    NonPositiveEps(Rational),
    DegreeBound { eps: Rational, degree: u64, n: u32 },
    FanoCap { eps: Rational, cap: u64 },
    SurfaceDimension { n: u32 },
    SurfaceDegree { l2: u64, degree: u64 },
    Parity { k: u64 },
    TrivialKSections,
    SingularCurve(String),
    KnownJetOutside { k: u64, s: i64, lo: i64, hi: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape(msg) => write!(f, "malformed record: {msg}"),
            Violation::NonPositiveEps(e) => write!(f, "Seshadri value {e} is not positive"),
            Violation::DegreeBound { eps, degree, n } => {
                write!(f, "degree-bound violation: ({eps})^{n} > {degree}")
            }
            Violation::FanoCap { eps, cap } => {
                write!(f, "Fano cap violation: {eps} exceeds the Seshadri cap {cap}")
            }
            Violation::SurfaceDimension { n } => {
                write!(f, "surface section data on a variety of dimension {n}")
            }
            Violation::SurfaceDegree { l2, degree } => {
                write!(f, "surface L^2 = {l2} disagrees with degree {degree}")
            }
            Violation::Parity { k } => {
                write!(f, "Riemann-Roch parity fails at k = {k} (k^2 L^2 - k L.K is odd)")
            }
            Violation::TrivialKSections => {
                write!(f, "trivial canonical class needs L.K = 0 and exact_from = 1")
            }
            Violation::SingularCurve(msg) => write!(f, "singular curve: {msg}"),
            Violation::KnownJetOutside { k, s, lo, hi } => {
                write!(f, "interval violation: {s} not in [{lo},{hi}] at k = {k}")
            }
        }
    }
}

/// Checks every invariant of `rec`; an empty list means the record is valid.
pub fn validate(rec: &VarietyRecord) -> Vec<Violation> {
    let mut out = Vec::new();
    if rec.n == 0 {
        out.push(Violation::Shape("dimension must be at least 1".into()));
    }
    if rec.degree == 0 {
        out.push(Violation::Shape("degree must be positive".into()));
    }
    if rec.id.is_empty() {
        out.push(Violation::Shape("empty id".into()));
    }
    if !out.is_empty() {
        return out;
    }

    let mut eps_ok = false;
    if let Some(datum) = &rec.eps {
        let eps = &datum.value;
        if !eps.is_positive() {
            out.push(Violation::NonPositiveEps(eps.clone()));
        } else if cmp_to_nth_root(eps, rec.degree, rec.n) == RootOrdering::Above {
            out.push(Violation::DegreeBound { eps: eps.clone(), degree: rec.degree, n: rec.n });
        } else if rec.class == CanonicalClass::Fano && !fano_seshadri_cap(rec.n, rec.degree).admits(eps) {
            let cap = fano_seshadri_cap(rec.n, rec.degree).effective_cap();
            out.push(Violation::FanoCap { eps: eps.clone(), cap });
        } else {
            eps_ok = true;
        }
    }

    match &rec.sections {
        Some(SectionModel::Surface(s)) => {
            if rec.n != 2 {
                out.push(Violation::SurfaceDimension { n: rec.n });
            }
            if s.l2 != rec.degree {
                out.push(Violation::SurfaceDegree { l2: s.l2, degree: rec.degree });
            }
            for k in [1, 2] {
                if rr_value(k, s).is_err() {
                    out.push(Violation::Parity { k });
                }
            }
            if rec.class == CanonicalClass::TrivialK && (s.l_dot_k != 0 || s.exact_from != Some(1)) {
                out.push(Violation::TrivialKSections);
            }
        }
        Some(SectionModel::CurveProduct(c)) => {
            if rec.n != 2 {
                out.push(Violation::SurfaceDimension { n: rec.n });
            }
            if c.genus == 0 {
                out.push(Violation::Shape("curve genus must be positive".into()));
            }
        }
        None => {}
    }

    if let Some(curve) = &rec.singular_curve {
        let d = curve.data;
        if d.m < 2 || d.l_dot_c == 0 {
            out.push(Violation::SingularCurve(format!(
                "L.C = {}, mult = {} does not describe a curve singular at the point",
                d.l_dot_c, d.m
            )));
        } else if let Some(datum) = &rec.eps {
            if d.eps().ok().as_ref() != Some(&datum.value) {
                out.push(Violation::SingularCurve(format!(
                    "{}/{} does not equal the Seshadri value {}",
                    d.l_dot_c, d.m, datum.value
                )));
            }
        }
    }

    if let (true, Some(datum)) = (eps_ok, &rec.eps) {
        for fact in &rec.known_s {
            let iv = match jet_interval(rec.class, fact.k, &datum.value, rec.n, rec.degree) {
                Ok(iv) => iv,
                Err(e) => {
                    out.push(Violation::Shape(format!("known jet at k = {}: {e}", fact.k)));
                    continue;
                }
            };
            let mut hi = iv.s_hi;
            if let Some(curve) = rec.singular_curve.filter(|c| c.data.m >= 2 && c.data.l_dot_c > 0) {
                hi = hi.min(singular_curve_cap(fact.k, &curve.data).unwrap_or(hi));
            }
            let lo = if fact.at_least { -1 } else { iv.s_lo };
            if fact.s < lo || fact.s > hi {
                out.push(Violation::KnownJetOutside { k: fact.k, s: fact.s, lo: iv.s_lo, hi });
            }
        }
    }
    out
}

fn literature(value: Rational, point_class: PointClass, note: &str) -> Option<SeshadriDatum> {
    Some(SeshadriDatum { value, point_class, source: Source::Literature, note: note.to_string() })
}

fn int(n: u64) -> Rational {
    Rational::from_integer(n)
}

pub fn projective_space(n: u32) -> VarietyRecord {
    let e = u64::from(n) + 1;
    VarietyRecord {
        id: format!("projective_space_{n}"),
        name: format!("P^{n} with -K = O({e})"),
        n,
        class: CanonicalClass::Fano,
        degree: e.pow(n),
        eps: literature(int(e), PointClass::AllPoints, "eps(O(1), x) = 1 at every point"),
        sections: None,
        singular_curve: None,
        known_s: (1..=4).map(|k| KnownJet::exact(k, (k * e) as i64, PointClass::AllPoints)).collect(),
    }
}

pub fn p1xp1() -> VarietyRecord {
    VarietyRecord {
        id: "p1xp1".into(),
        name: "P^1 x P^1, -K = O(2,2)".into(),
        n: 2,
        class: CanonicalClass::Fano,
        degree: 8,
        eps: literature(int(2), PointClass::AllPoints, "fibres of both rulings compute it"),
        sections: None,
        singular_curve: None,
        known_s: Vec::new(),
    }
}

/// The blow-up of `P^2` in `r` general points, `1 <= r <= 8`. Only the caps
/// on its Seshadri constants are recorded.
pub fn del_pezzo(r: u32) -> VarietyRecord {
    VarietyRecord {
        id: format!("del_pezzo_{r}"),
        name: format!("P^2 blown up in {r} point{}", if r == 1 { "" } else { "s" }),
        n: 2,
        class: CanonicalClass::Fano,
        degree: 9 - u64::from(r),
        eps: None,
        sections: None,
        singular_curve: None,
        known_s: Vec::new(),
    }
}

pub fn ppas() -> VarietyRecord {
    VarietyRecord {
        id: "ppas".into(),
        name: "irreducible principally polarized abelian surface (X, Theta)".into(),
        n: 2,
        class: CanonicalClass::TrivialK,
        degree: 2,
        eps: literature(Rational::new(4, 3).unwrap(), PointClass::AllPoints, "computed by a singular curve"),
        sections: Some(SectionModel::Surface(SurfaceSections { chi: 0, l2: 2, l_dot_k: 0, exact_from: Some(1) })),
        // Smallest representation of 4/3; the curve's actual data is not recorded.
        singular_curve: Some(SingularCurve { data: SingularCurveData { l_dot_c: 4, m: 3 }, source: Source::Derived }),
        known_s: vec![
            KnownJet::exact(1, 0, PointClass::Generic),
            KnownJet::exact(1, -1, PointClass::Special("x on Theta".into())),
            KnownJet { k: 2, s: 1, at_least: true, at: PointClass::Generic },
            KnownJet::exact(2, 0, PointClass::Special("Kummer double point".into())),
        ],
    }
}

pub fn abelian_12() -> VarietyRecord {
    VarietyRecord {
        id: "abelian_12".into(),
        name: "abelian surface of Picard number 1 with a (1,2) polarization".into(),
        n: 2,
        class: CanonicalClass::TrivialK,
        degree: 4,
        eps: literature(int(2), PointClass::AllPoints, "Picard number one"),
        sections: Some(SectionModel::Surface(SurfaceSections { chi: 0, l2: 4, l_dot_k: 0, exact_from: Some(1) })),
        singular_curve: None,
        known_s: Vec::new(),
    }
}

pub fn quartic_with_line() -> VarietyRecord {
    VarietyRecord {
        id: "quartic_with_line".into(),
        name: "smooth quartic surface in P^3 containing a line, L = O(1)".into(),
        n: 2,
        class: CanonicalClass::TrivialK,
        degree: 4,
        eps: literature(int(1), PointClass::Special("x on the line".into()), "computed by the line"),
        sections: Some(SectionModel::Surface(SurfaceSections { chi: 2, l2: 4, l_dot_k: 0, exact_from: Some(1) })),
        singular_curve: None,
        known_s: (1..=4).map(|k| KnownJet::exact(k, k as i64, PointClass::Special("x on the line".into()))).collect(),
    }
}

pub fn quartic_generic() -> VarietyRecord {
    VarietyRecord {
        id: "quartic_generic".into(),
        name: "smooth quartic surface in P^3, L = O(1)".into(),
        n: 2,
        class: CanonicalClass::TrivialK,
        degree: 4,
        eps: literature(int(2), PointClass::Generic, "general point"),
        sections: Some(SectionModel::Surface(SurfaceSections { chi: 2, l2: 4, l_dot_k: 0, exact_from: Some(1) })),
        singular_curve: None,
        known_s: Vec::new(),
    }
}

pub fn degree9_p3() -> VarietyRecord {
    VarietyRecord {
        id: "degree9_p3".into(),
        name: "smooth surface of degree 9 in P^3 with Picard number 1, L = O(1)".into(),
        n: 2,
        class: CanonicalClass::General,
        degree: 9,
        eps: literature(int(3), PointClass::VeryGeneral, "floor(sqrt(L^2)) at very general points"),
        // chi(O_X) = 1 + C(8, 3), K = 5H; h^2(kL) = h^0((5-k)H) vanishes from k = 6.
        sections: Some(SectionModel::Surface(SurfaceSections { chi: 57, l2: 9, l_dot_k: 45, exact_from: Some(6) })),
        singular_curve: None,
        known_s: Vec::new(),
    }
}

/// `C x C` for a curve of genus `g`, polarized by `pr1*D + pr2*D` with `D` a
/// general divisor of degree one.
pub fn cxc_counterexample(g: u64) -> VarietyRecord {
    VarietyRecord {
        id: format!("cxc_counterexample_{g}"),
        name: format!("C x C, genus {g}, L = pr1*D + pr2*D with deg D = 1"),
        n: 2,
        class: CanonicalClass::General,
        degree: 2,
        eps: literature(int(1), PointClass::AllPoints, "fibres compute it"),
        sections: Some(SectionModel::CurveProduct(CurveProduct { genus: g })),
        singular_curve: None,
        known_s: (1..g).map(|k| KnownJet::exact(k, -1, PointClass::AllPoints)).collect(),
    }
}

/// Genus used for the C x C entry of [`load_catalog`].
pub const DEFAULT_CXC_GENUS: u64 = 5;

fn builtin_records() -> Vec<VarietyRecord> {
    let mut records: Vec<VarietyRecord> = (1..=6).map(projective_space).collect();
    records.push(p1xp1());
    records.extend((1..=8).map(del_pezzo));
    records.extend([
        ppas(),
        abelian_12(),
        quartic_with_line(),
        quartic_generic(),
        degree9_p3(),
        cxc_counterexample(DEFAULT_CXC_GENUS),
    ]);
    records
}

fn checked(rec: VarietyRecord) -> Result<VarietyRecord> {
    let violations = validate(&rec);
    if violations.is_empty() {
        Ok(rec)
    } else {
        let reasons = violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
        Err(Error::Validation { id: rec.id, reasons })
    }
}

/// All built-in records, each validated.
pub fn load_catalog() -> Result<Vec<VarietyRecord>> {
    builtin_records().into_iter().map(checked).collect()
}

/// Looks up a record by id. `cxc_counterexample_<g>` is accepted for any
/// genus `g >= 1`.
pub fn fetch(id: &str) -> Result<VarietyRecord> {
    if let Some(rec) = builtin_records().into_iter().find(|r| r.id == id) {
        return checked(rec);
    }
    match id.strip_prefix("cxc_counterexample_").and_then(|g| g.parse::<u64>().ok()) {
        Some(g) if g >= 1 => checked(cxc_counterexample(g)),
        _ => Err(Error::UnknownCatalogId(id.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_loads_and_is_deterministic() {
        let a = load_catalog().unwrap();
        let b = load_catalog().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 6 + 1 + 8 + 6);
        let mut ids: Vec<_> = a.iter().map(|r| r.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), a.len());
    }

    #[test]
    fn fetch_examples() {
        let r = fetch("ppas").unwrap();
        assert_eq!(r.eps.unwrap().value, Rational::new(4, 3).unwrap());
        assert_eq!(r.degree, 2);
        let r = fetch("del_pezzo_3").unwrap();
        assert_eq!((r.degree, r.eps), (6, None));
        let r = fetch("projective_space_3").unwrap();
        assert_eq!((r.degree, r.eps.unwrap().value), (64, int(4)));
        assert_eq!(fetch("cxc_counterexample_11").unwrap().known_s.len(), 10);
        assert!(matches!(fetch("k3_double_plane"), Err(Error::UnknownCatalogId(_))));
        assert!(fetch("cxc_counterexample_0").is_err());
    }

    #[test]
    fn records_respect_caps() {
        for rec in load_catalog().unwrap() {
            let Some(d) = &rec.eps else { continue };
            assert_ne!(cmp_to_nth_root(&d.value, rec.degree, rec.n), RootOrdering::Above, "{}", rec.id);
            if rec.class == CanonicalClass::Fano {
                assert!(fano_seshadri_cap(rec.n, rec.degree).admits(&d.value), "{}", rec.id);
            }
        }
    }

    #[test]
    fn validate_flags_bad_eps() {
        let mut r = ppas();
        r.eps.as_mut().unwrap().value = Rational::new(3, 2).unwrap();
        let v = validate(&r);
        assert!(matches!(v[0], Violation::DegreeBound { .. }), "{v:?}");
        assert_eq!(v[0].to_string(), "degree-bound violation: (3/2)^2 > 2");
    }

    #[test]
    fn validate_flags_known_jet_outside() {
        let mut r = projective_space(2);
        r.known_s = vec![KnownJet::exact(2, 7, PointClass::AllPoints)];
        let v = validate(&r);
        assert_eq!(v, vec![Violation::KnownJetOutside { k: 2, s: 7, lo: 6, hi: 6 }]);
        assert_eq!(v[0].to_string(), "interval violation: 7 not in [6,6] at k = 2");
    }

    #[test]
    fn validate_other_invariants() {
        let mut r = ppas();
        r.sections = Some(SectionModel::Surface(SurfaceSections { chi: 0, l2: 2, l_dot_k: 1, exact_from: Some(1) }));
        let v = validate(&r);
        assert!(v.contains(&Violation::Parity { k: 1 }));
        assert!(v.contains(&Violation::TrivialKSections));

        let mut r = ppas();
        r.singular_curve = Some(SingularCurve { data: SingularCurveData { l_dot_c: 3, m: 2 }, source: Source::User });
        assert!(matches!(validate(&r)[..], [Violation::SingularCurve(_)]));

        let mut r = p1xp1();
        r.eps.as_mut().unwrap().value = Rational::new(5, 2).unwrap();
        assert_eq!(validate(&r), vec![Violation::FanoCap { eps: Rational::new(5, 2).unwrap(), cap: 2 }]);

        let mut r = abelian_12();
        r.n = 3;
        assert!(validate(&r).contains(&Violation::SurfaceDimension { n: 3 }));
    }

    #[test]
    fn point_class_labels_roundtrip() {
        for pc in [
            PointClass::AllPoints,
            PointClass::VeryGeneral,
            PointClass::Generic,
            PointClass::Special("x on the line".into()),
        ] {
            assert_eq!(PointClass::from_label(pc.label()), pc);
        }
    }
}
