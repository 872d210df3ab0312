//! JSON formats. Elements are 0-based throughout.
//!
//! A matroid file carries `n` and one of `bases`, `nonbases` (with `rank`),
//! `matrix` (integer rows; columns are the elements) or `edges`, plus
//! optional `labels`:
//!
//! ```json
//! {"n": 3, "rank": 2, "bases": [[0, 1], [0, 2], [1, 2]]}
//! ```

use serde::{Deserialize, Serialize};

use crate::construct::SignAssignment;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::Subset;

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nonbases: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<i64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn sets(v: &[Vec<usize>]) -> Vec<Subset> {
    v.iter()
        .map(|s| Subset::from_elems(s.iter().copied()))
        .collect()
}

pub fn elems(s: Subset) -> Vec<usize> {
    s.iter().collect()
}

impl MatroidJson {
    pub fn to_matroid(&self) -> Result<Matroid> {
        let given = [
            self.bases.is_some(),
            self.nonbases.is_some(),
            self.matrix.is_some(),
            self.edges.is_some(),
        ];
        if given.iter().filter(|&&g| g).count() != 1 {
            return Err(Error::Parse(
                "give exactly one of bases, nonbases, matrix, edges".into(),
            ));
        }
        let m = if let Some(b) = &self.bases {
            let n = self.n.ok_or_else(|| Error::Parse("bases need n".into()))?;
            Matroid::from_bases(n, sets(b))?
        } else if let Some(nb) = &self.nonbases {
            let (n, r) = self
                .n
                .zip(self.rank)
                .ok_or_else(|| Error::Parse("nonbases need n and rank".into()))?;
            Matroid::from_nonbases(n, r, sets(nb))?
        } else if let Some(rows) = &self.matrix {
            Matroid::from_integer_vectors(rows)?
        } else {
            Matroid::from_graph(self.edges.as_deref().unwrap_or_default())?
        };
        if let Some(n) = self.n {
            if n != m.n() {
                return Err(Error::CardinalityMismatch {
                    expected: n,
                    found: m.n(),
                });
            }
        }
        if let Some(r) = self.rank {
            if r != m.rank() {
                return Err(Error::CardinalityMismatch {
                    expected: r,
                    found: m.rank(),
                });
            }
        }
        match &self.labels {
            Some(l) if l.len() != m.n() => Err(Error::CardinalityMismatch {
                expected: m.n(),
                found: l.len(),
            }),
            Some(l) => Ok(m.with_labels(l.clone())),
            None => Ok(m),
        }
    }

    pub fn from_matroid(m: &Matroid) -> MatroidJson {
        MatroidJson {
            n: Some(m.n()),
            rank: Some(m.rank()),
            bases: Some(m.bases().iter().map(|&b| elems(b)).collect()),
            labels: m.labels().map(<[String]>::to_vec),
            ..MatroidJson::default()
        }
    }
}

pub fn parse_matroid(text: &str) -> Result<Matroid> {
    let j: MatroidJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    j.to_matroid()
}

pub fn matroid_to_json(m: &Matroid) -> serde_json::Value {
    serde_json::to_value(MatroidJson::from_matroid(m)).expect("serializable")
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SignEntry {
    pub hyperplane: Vec<usize>,
    pub sign: i8,
}

/// `{"signs": [{"hyperplane": [6, 7, 8], "sign": -1}, ...]}`, one entry per
/// cyclic hyperplane.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignsJson {
    pub signs: Vec<SignEntry>,
}

impl SignsJson {
    pub fn to_assignment(&self) -> SignAssignment {
        SignAssignment {
            signs: self
                .signs
                .iter()
                .map(|e| (Subset::from_elems(e.hyperplane.iter().copied()), e.sign))
                .collect(),
        }
    }

    pub fn from_assignment(s: &SignAssignment) -> SignsJson {
        SignsJson {
            signs: s
                .signs
                .iter()
                .map(|(&h, &sign)| SignEntry {
                    hyperplane: elems(h),
                    sign,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_agree() {
        let a = parse_matroid(r#"{"n":3,"rank":2,"bases":[[0,1],[0,2],[1,2]]}"#).unwrap();
        let b = parse_matroid(r#"{"n":3,"rank":2,"nonbases":[]}"#).unwrap();
        let c = parse_matroid(r#"{"matrix":[[1,0,1],[0,1,1]]}"#).unwrap();
        let d = parse_matroid(r#"{"edges":[[0,1],[1,2],[0,2]]}"#).unwrap();
        let u = Matroid::uniform(2, 3);
        for m in [a, b, c, d] {
            assert_eq!(m, u);
        }
    }

    #[test]
    fn roundtrip() {
        let m = crate::matroid::grid_matroid();
        let text = matroid_to_json(&m).to_string();
        assert_eq!(parse_matroid(&text).unwrap(), m);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_matroid(r#"{"n":3}"#).is_err());
        assert!(parse_matroid(r#"{"n":3,"bases":[[0,1]],"edges":[]}"#).is_err());
        assert!(parse_matroid(r#"{"n":2,"rank":2,"bases":[[0,1]],"colour":1}"#).is_err());
        assert!(parse_matroid(r#"{"n":3,"rank":1,"bases":[[0,1]]}"#).is_err());
    }
}
