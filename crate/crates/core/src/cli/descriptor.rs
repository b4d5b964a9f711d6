//! JSON descriptor files: the external form of a [`VarietyRecord`].

use serde::{Deserialize, Serialize};

use crate::bounds::{CanonicalClass, SingularCurveData};
use crate::catalog::{PointClass, SeshadriDatum, SingularCurve, Source, VarietyRecord};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::sections::{CurveProduct, SectionModel, SurfaceSections};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Descriptor {
    pub id: String,
    pub name: String,
    pub n: u32,
    pub class: CanonicalClass,
    pub degree: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point_class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surface: Option<SurfaceSections>,
    /// `C x C` with its Künneth section count, in place of `surface`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve_product: Option<CurveProduct>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singular_curve: Option<SingularCurveData>,
}

impl Descriptor {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Descriptor(e.to_string()))
    }

    /// Compact JSON with sorted keys and reduced rationals.
    pub fn to_canonical_json(&self) -> String {
        // serde_json's default map is ordered by key.
        let value = serde_json::to_value(self).expect("descriptor serializes");
        serde_json::to_string(&value).expect("value serializes")
    }
}

impl From<&VarietyRecord> for Descriptor {
    fn from(rec: &VarietyRecord) -> Self {
        let (surface, curve_product) = match rec.sections {
            Some(SectionModel::Surface(s)) => (Some(s), None),
            Some(SectionModel::CurveProduct(c)) => (None, Some(c)),
            None => (None, None),
        };
        Descriptor {
            id: rec.id.clone(),
            name: rec.name.clone(),
            n: rec.n,
            class: rec.class,
            degree: rec.degree,
            eps: rec.eps.as_ref().map(|d| d.value.clone()),
            point_class: rec.eps.as_ref().map(|d| d.point_class.label().to_string()),
            surface,
            curve_product,
            singular_curve: rec.singular_curve.map(|c| c.data),
        }
    }
}

impl TryFrom<Descriptor> for VarietyRecord {
    type Error = Error;

    fn try_from(d: Descriptor) -> Result<Self> {
        let sections = match (d.surface, d.curve_product) {
            (Some(_), Some(_)) => {
                return Err(Error::Descriptor("give at most one of surface and curve_product".into()))
            }
            (Some(s), None) => Some(SectionModel::Surface(s)),
            (None, Some(c)) => Some(SectionModel::CurveProduct(c)),
            (None, None) => None,
        };
        if d.point_class.is_some() && d.eps.is_none() {
            return Err(Error::Descriptor("point_class given without eps".into()));
        }
        let eps = d.eps.map(|value| SeshadriDatum {
            value,
            point_class: d
                .point_class
                .as_deref()
                .map_or(PointClass::Special("unspecified".into()), PointClass::from_label),
            source: Source::User,
            note: String::new(),
        });
        Ok(VarietyRecord {
            id: d.id,
            name: d.name,
            n: d.n,
            class: d.class,
            degree: d.degree,
            eps,
            sections,
            singular_curve: d.singular_curve.map(|data| SingularCurve { data, source: Source::User }),
            known_s: Vec::new(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::load_catalog;

    #[test]
    fn parses_schema() {
        let text = r#"{"id": "ppas", "name": "pp abelian surface", "n": 2, "class": "trivialK",
            "degree": 2, "eps": "8/6", "point_class": "all_points",
            "surface": {"chi": 0, "L2": 2, "LK": 0, "exact_from": 1},
            "singular_curve": {"LC": 4, "m": 3}}"#;
        let d = Descriptor::from_json(text).unwrap();
        assert_eq!(d.eps, Some(Rational::new(4, 3).unwrap()));
        let rec = VarietyRecord::try_from(d.clone()).unwrap();
        assert!(crate::catalog::validate(&rec).is_empty());
        assert_eq!(
            d.to_canonical_json(),
            r#"{"class":"trivialK","degree":2,"eps":"4/3","id":"ppas","n":2,"name":"pp abelian surface","point_class":"all_points","singular_curve":{"LC":4,"m":3},"surface":{"L2":2,"LK":0,"chi":0,"exact_from":1}}"#
        );
    }

    #[test]
    fn rejects_bad_input() {
        for text in [
            r#"{"id":"x","name":"x","n":2,"class":"kahler","degree":2}"#,
            r#"{"id":"x","name":"x","n":2,"class":"general","degree":2,"eps":"1.5"}"#,
            r#"{"id":"x","name":"x","n":2,"class":"general","degree":2,"colour":"red"}"#,
            r#"{"id":"x","name":"x","n":2,"class":"general"}"#,
            "not json",
        ] {
            assert!(Descriptor::from_json(text).is_err(), "{text}");
        }
        let both = r#"{"id":"x","name":"x","n":2,"class":"general","degree":2,
            "surface":{"chi":0,"L2":2,"LK":0},"curve_product":{"genus":3}}"#;
        let d = Descriptor::from_json(both).unwrap();
        assert!(VarietyRecord::try_from(d).is_err());
    }

    #[test]
    fn catalog_records_roundtrip() {
        for rec in load_catalog().unwrap() {
            let d = Descriptor::from(&rec);
            let json = d.to_canonical_json();
            let back = Descriptor::from_json(&json).unwrap();
            let again = Descriptor::from(&VarietyRecord::try_from(back).unwrap());
            assert_eq!(again.to_canonical_json(), json, "{}", rec.id);
        }
    }
}
