//! JSON documents for maps and sequences.

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::morphism::{Base, BaseMor, Morphism};
use crate::parse::parse_map;
use crate::poly::PolyMap;
use crate::scalar::Scalar;
use crate::seq::PreDSeq;

/// `{"base", "dom", "cod", "components"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDoc {
    pub base: Base,
    pub dom: usize,
    pub cod: usize,
    pub components: Vec<String>,
}

impl MapDoc {
    pub fn from_poly<S: Scalar>(p: &PolyMap<S>) -> Self {
        MapDoc {
            base: Base::Poly,
            dom: p.dom(),
            cod: p.cod(),
            components: p.component_strings(),
        }
    }

    pub fn from_mor<S: Scalar>(m: &BaseMor<S>) -> Self {
        MapDoc {
            base: m.base(),
            dom: m.dom(),
            cod: m.cod(),
            components: m.component_strings(),
        }
    }

    pub fn to_mor<S: Scalar>(&self) -> Result<BaseMor<S>> {
        check_dim("declared cod", self.cod, self.components.len())?;
        parse_map(self.base, self.dom, &self.components)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

/// `{"base", "dom", "cod", "order", "terms"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqDoc {
    pub base: Base,
    pub dom: usize,
    pub cod: usize,
    pub order: usize,
    pub terms: Vec<MapDoc>,
}

impl SeqDoc {
    pub fn from_seq<S: Scalar>(f: &PreDSeq<BaseMor<S>>) -> Self {
        SeqDoc {
            base: f.base(),
            dom: f.dom(),
            cod: f.cod(),
            order: f.order(),
            terms: f.terms().iter().map(MapDoc::from_mor).collect(),
        }
    }

    pub fn to_seq<S: Scalar>(&self) -> Result<PreDSeq<BaseMor<S>>> {
        check_dim("declared order", self.order + 1, self.terms.len())?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.base != self.base {
                return Err(Error::TagMismatch {
                    left: self.base,
                    right: t.base,
                });
            }
            terms.push(t.to_mor()?);
        }
        PreDSeq::new(self.dom, self.cod, terms)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

/// Either document kind, distinguished by the presence of `terms`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AnyDoc {
    Seq(SeqDoc),
    Map(MapDoc),
}

impl AnyDoc {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn map_round_trip() {
        let text = r#"{"base":"poly","dom":2,"cod":1,"components":["x0^2 + 3/2*x0*x1"]}"#;
        let doc = MapDoc::from_json(text).unwrap();
        let m: BaseMor<Q> = doc.to_mor().unwrap();
        assert_eq!(serde_json::to_string(&MapDoc::from_mor(&m)).unwrap(), text);
    }

    #[test]
    fn seq_round_trip() {
        let f: BaseMor<Q> = parse_map(Base::Poly, 1, &["x0^2"]).unwrap();
        let s = crate::comonad::omega(&f, 2);
        let doc = SeqDoc::from_seq(&s);
        let text = serde_json::to_string(&doc).unwrap();
        let back: PreDSeq<BaseMor<Q>> = SeqDoc::from_json(&text).unwrap().to_seq().unwrap();
        assert_eq!(back.terms(), s.terms());
        assert!(matches!(AnyDoc::from_json(&text).unwrap(), AnyDoc::Seq(_)));
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(MapDoc::from_json("{"), Err(Error::Format(_))));
        let doc = MapDoc {
            base: Base::Poly,
            dom: 1,
            cod: 2,
            components: vec!["x0".into()],
        };
        assert!(matches!(
            doc.to_mor::<Q>(),
            Err(Error::DimensionMismatch { .. })
        ));
        let bad = r#"{"base":"quux","dom":1,"cod":1,"components":["x0"]}"#;
        assert!(MapDoc::from_json(bad).is_err());
    }
}
