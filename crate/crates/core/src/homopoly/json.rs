use std::fmt::Display;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::HomoPoly;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Canonical JSON form: `{"degree": n, "terms": [{"i": 3, "coeff": "5/2"}]}`.
/// Coefficients are exact strings, never floats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub i: usize,
    pub coeff: String,
}

impl<S: Scalar + Display> HomoPoly<S> {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            degree: self.degree(),
            terms: self
                .terms()
                .map(|(i, c)| TermJson {
                    i,
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl<S: Scalar + FromStr> HomoPoly<S> {
    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let terms = j
            .terms
            .iter()
            .map(|t| {
                t.coeff
                    .parse::<S>()
                    .map(|c| (t.i, c))
                    .map_err(|_| Error::Json(format!("bad coefficient {:?}", t.coeff)))
            })
            .collect::<Result<Vec<_>>>()?;
        HomoPoly::from_terms(j.degree, terms)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_json(&j)
    }
}

impl<S: Scalar + Display> Serialize for HomoPoly<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de, S: Scalar + FromStr> Deserialize<'de> for HomoPoly<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(deserializer)?;
        HomoPoly::from_json(&j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, QContext, QScalar, Rational};
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        let p = HomoPoly::<Rational>::from_rational_terms(6, &[(0, 1, 1), (3, 5, 2), (6, -1, 8)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"degree":6,"terms":[{"i":0,"coeff":"1"},{"i":3,"coeff":"5/2"},{"i":6,"coeff":"-1/8"}]}"#
        );
        let back: HomoPoly<Rational> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_bad_json() {
        assert!(HomoPoly::<Rational>::from_json_str(r#"{"degree":2,"terms":[{"i":3,"coeff":"1"}]}"#).is_err());
        assert!(HomoPoly::<Rational>::from_json_str(r#"{"degree":2,"terms":[{"i":0,"coeff":"0.5"}]}"#).is_err());
        assert!(HomoPoly::<Rational>::from_json_str("[1,2]").is_err());
    }

    #[test]
    fn surd_coefficients_roundtrip() {
        let c = QContext::new(rat(2, 1)).unwrap();
        let p = HomoPoly::from_terms(1, [(0, QScalar::new(rat(1, 2), rat(-3, 4), &c)), (1, QScalar::from(rat(7, 1)))]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        let back: HomoPoly<QScalar> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    proptest! {
        #[test]
        fn json_roundtrip(v in proptest::collection::vec((-99i64..99, 1i64..50), 1..12)) {
            let p = HomoPoly::<Rational>::from_dense(v.into_iter().map(|(a, b)| rat(a, b)).collect());
            let back = HomoPoly::<Rational>::from_json(&p.to_json()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
