//! The algebra spec file format.
//!
//! ```json
//! { "basis": [{"name": "t1", "degree": [0, 0]}],
//!   "brackets": [{"left": "t1", "right": "t2",
//!                 "result": [{"coeff": {"re": "-1", "im": "0"}, "elem": "t3"}]}],
//!   "involution": [["t1", "t1", {"re": "-1", "im": "0"}]],
//!   "kind_overrides": [[[0, 1], [1, 0], "anticomm"]] }
//! ```
//!
//! Omitted brackets are zero. A bracket given in one order only has its
//! reverse filled by the sign rule; if both orders are given and disagree the
//! loader keeps both and reports a warning.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{AlgebraError, AlgebraSpec, Element};
use crate::grading::{BracketKind, Degree};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub name: String,
    pub degree: Degree,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: Scalar,
    pub elem: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub result: Vec<Term>,
}

/// Free-form provenance for catalog exports: which builder and parameters
/// produced the file. Ignored on import.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, Scalar>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
    pub basis: Vec<BasisEntry>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub involution: Vec<(String, String, Scalar)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub kind_overrides: Vec<(Degree, Degree, BracketKind)>,
}

fn terms(spec: &AlgebraSpec, e: &Element) -> Vec<Term> {
    e.iter()
        .map(|(k, c)| Term {
            coeff: c.clone(),
            elem: spec.name(k).to_string(),
        })
        .collect()
}

impl AlgebraFile {
    /// Serializes a spec. Each unordered pair is written once, left index
    /// first; the reversed order is written only when the sign rule would not
    /// reproduce it.
    pub fn from_spec(spec: &AlgebraSpec) -> Self {
        let n = spec.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i..n {
                let fwd = spec.structure(i, j);
                let rev = spec.structure(j, i);
                let s = Scalar::int(-spec.sign(spec.degree(i), spec.degree(j)) as i64);
                let rev_derived = *rev == fwd.scaled(&s);
                // An explicit empty entry keeps the loader from filling the
                // reverse of a one-sided bracket.
                if !fwd.is_zero() || !rev_derived {
                    brackets.push(BracketEntry {
                        left: spec.name(i).into(),
                        right: spec.name(j).into(),
                        result: terms(spec, fwd),
                    });
                }
                if i == j {
                    continue;
                }
                if !rev_derived {
                    brackets.push(BracketEntry {
                        left: spec.name(j).into(),
                        right: spec.name(i).into(),
                        result: terms(spec, rev),
                    });
                }
            }
        }
        let involution = spec
            .involution()
            .map(|inv| {
                inv.iter()
                    .enumerate()
                    .map(|(i, (j, s))| (spec.name(i).to_string(), spec.name(*j).to_string(), s.clone()))
                    .collect()
            })
            .unwrap_or_default();
        AlgebraFile {
            meta: None,
            basis: spec
                .basis()
                .iter()
                .map(|b| BasisEntry {
                    name: b.name.clone(),
                    degree: b.degree,
                })
                .collect(),
            brackets,
            involution,
            kind_overrides: spec.kind_overrides().iter().map(|(&(a, b), &k)| (a, b, k)).collect(),
        }
    }

    pub fn with_meta(mut self, meta: Meta) -> Self {
        self.meta = Some(meta);
        self
    }

    /// Builds the spec, returning it with any order-conflict warnings.
    pub fn to_spec(&self) -> Result<(AlgebraSpec, Vec<String>), AlgebraError> {
        let mut b = AlgebraSpec::builder();
        for e in &self.basis {
            b.push_element(e.name.clone(), e.degree);
        }
        for br in &self.brackets {
            b.push_bracket(
                &br.left,
                &br.right,
                br.result.iter().map(|t| (t.elem.clone(), t.coeff.clone())).collect(),
            );
        }
        for (from, to, s) in &self.involution {
            b.push_involution(from, to, s.clone());
        }
        for &(x, y, k) in &self.kind_overrides {
            b = b.kind_override(x, y, k);
        }
        let spec = b.build()?;

        let given: HashSet<(&str, &str)> = self
            .brackets
            .iter()
            .map(|br| (br.left.as_str(), br.right.as_str()))
            .collect();
        let mut warnings = Vec::new();
        for br in &self.brackets {
            let (l, r) = (br.left.as_str(), br.right.as_str());
            if l >= r || !given.contains(&(r, l)) {
                continue;
            }
            let (i, j) = (spec.index_of(l)?, spec.index_of(r)?);
            let s = Scalar::int(-spec.sign(spec.degree(i), spec.degree(j)) as i64);
            if *spec.structure(j, i) != spec.structure(i, j).scaled(&s) {
                warnings.push(format!(
                    "brackets ({l}, {r}) and ({r}, {l}) are both given and disagree under the {} rule",
                    spec.kind(spec.degree(i), spec.degree(j))
                ));
            }
        }
        Ok((spec, warnings))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra file serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(text)
            .map_err(|e| AlgebraError::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
    }
}

impl AlgebraSpec {
    pub fn to_json(&self) -> String {
        AlgebraFile::from_spec(self).to_json()
    }

    /// Parses a spec file, discarding warnings.
    pub fn from_json(text: &str) -> Result<AlgebraSpec, AlgebraError> {
        AlgebraFile::from_json(text)?.to_spec().map(|(s, _)| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> AlgebraSpec {
        AlgebraSpec::builder()
            .element("t1", Degree::ZERO)
            .element("t2", Degree::ZERO)
            .element("t3", Degree::ZERO)
            .element("q", Degree::ODD)
            .bracket("t1", "t2", &[("t3", Scalar::int(-1))])
            .bracket("t2", "t3", &[("t1", Scalar::one())])
            .bracket("t3", "t1", &[("t2", Scalar::one())])
            .bracket("q", "q", &[("t1", Scalar::ratio(1, 2)), ("t2", Scalar::gauss(0, -1))])
            .involution("t1", "t1", Scalar::int(-1))
            .involution("t2", "t2", Scalar::int(-1))
            .involution("t3", "t3", Scalar::int(-1))
            .involution("q", "q", Scalar::i())
            .build()
            .unwrap()
    }

    #[test]
    fn round_trip() {
        let s = sample();
        let text = s.to_json();
        let back = AlgebraSpec::from_json(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json(), text);
        assert!(text.contains(r#""im": "-1""#));
    }

    #[test]
    fn one_sided_reverse_survives() {
        let s = AlgebraSpec::builder()
            .element("x", Degree::ZERO)
            .element("y", Degree::ZERO)
            .bracket("y", "x", &[("x", Scalar::one())])
            .without_reverse_fill()
            .build()
            .unwrap();
        let (back, warnings) = AlgebraFile::from_spec(&s).to_spec().unwrap();
        assert_eq!(warnings.len(), 1);
        assert_eq!(back.structure(1, 0), s.structure(1, 0));
        assert!(back.structure(0, 1).is_zero());
    }

    #[test]
    fn conflicting_orders_warn() {
        let text = r#"{
          "basis": [{"name": "x", "degree": [0,0]}, {"name": "y", "degree": [0,0]}],
          "brackets": [
            {"left": "x", "right": "y", "result": [{"coeff": {"re": "1", "im": "0"}, "elem": "x"}]},
            {"left": "y", "right": "x", "result": [{"coeff": {"re": "1", "im": "0"}, "elem": "x"}]}
          ]
        }"#;
        let (_, warnings) = AlgebraFile::from_json(text).unwrap().to_spec().unwrap();
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn parse_errors_have_position() {
        let err = AlgebraFile::from_json("{\n  \"basis\": [}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let bad = r#"{"basis": [{"name": "x", "degree": [0,2]}]}"#;
        assert!(AlgebraFile::from_json(bad).is_err());
    }

    #[test]
    fn overrides_round_trip() {
        let s = sample().with_overrides(&[(Degree::PARABOSE, Degree::ODD, BracketKind::Anticommutator)]);
        let text = s.to_json();
        assert!(text.contains("anticomm"));
        assert_eq!(
            AlgebraSpec::from_json(&text).unwrap().kind_overrides(),
            s.kind_overrides()
        );
    }
}
