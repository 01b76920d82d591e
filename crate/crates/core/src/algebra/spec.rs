//! JSON algebra spec files.
//!
//! ```json
//! {
//!   "id": "heisenberg",
//!   "dims": { "r": 0, "n": 3 },
//!   "brackets": [ { "i": "u1", "j": "u2", "components": ["0", "0", "1"] } ],
//!   "metric": [ { "i": 1, "j": 1, "value": "1" }, { "i": 2, "j": 2, "value": "1" },
//!               { "i": 3, "j": 3, "value": "1" } ],
//!   "params": {}
//! }
//! ```
//!
//! Bracket endpoints are basis labels `e1..er`, `u1..un`; components run over
//! all r+n basis elements in that order. Metric entries are one-based on m
//! and set both (i, j) and (j, i). Omitted brackets and metric entries are
//! zero.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{HomogeneousPair, MVector, PairBuilder};
use crate::error::SpecError;
use crate::exact::{QMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dims {
    pub r: usize,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: String,
    pub j: String,
    pub components: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricEntry {
    pub i: usize,
    pub j: usize,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairSpec {
    #[serde(default)]
    pub id: String,
    #[serde(default)]
    pub name: String,
    pub dims: Dims,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    pub metric: Vec<MetricEntry>,
    #[serde(default)]
    pub params: BTreeMap<String, Rational>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub partial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant_subspace: Option<Vec<Vec<Rational>>>,
}

fn parse_label(label: &str, dims: &Dims) -> Result<usize, SpecError> {
    let bad = || SpecError::Invalid(format!("bad basis label {label:?}"));
    let (kind, num) = label.split_at(label.char_indices().nth(1).map_or(label.len(), |(i, _)| i));
    let k: usize = num.parse().map_err(|_| bad())?;
    match kind {
        "e" if (1..=dims.r).contains(&k) => Ok(k - 1),
        "u" if (1..=dims.n).contains(&k) => Ok(dims.r + k - 1),
        _ => Err(bad()),
    }
}

fn label(a: usize, r: usize) -> String {
    if a < r {
        format!("e{}", a + 1)
    } else {
        format!("u{}", a - r + 1)
    }
}

/// Build and fully validate a pair from a parsed spec.
pub fn build_pair(spec: &PairSpec) -> Result<HomogeneousPair, SpecError> {
    let Dims { r, n } = spec.dims;
    if n == 0 {
        return Err(SpecError::Invalid("dims.n must be positive".into()));
    }
    let mut g = QMatrix::zeros(n, n);
    let mut seen = BTreeMap::new();
    for e in &spec.metric {
        if !(1..=n).contains(&e.i) || !(1..=n).contains(&e.j) {
            return Err(SpecError::Invalid(format!(
                "metric entry ({}, {}) outside 1..={n}",
                e.i, e.j
            )));
        }
        let key = (e.i.min(e.j), e.i.max(e.j));
        if let Some(prev) = seen.insert(key, e.value.clone()) {
            if prev != e.value {
                return Err(SpecError::Invalid(format!(
                    "conflicting metric entries at ({}, {})",
                    e.i, e.j
                )));
            }
        }
        g[(e.i - 1, e.j - 1)] = e.value.clone();
        g[(e.j - 1, e.i - 1)] = e.value.clone();
    }
    let mut b = PairBuilder::new(r, n).id(&spec.id).name(&spec.name).metric(g);
    for (name, v) in &spec.params {
        b = b.param(name, v.clone());
    }
    for e in &spec.brackets {
        let i = parse_label(&e.i, &spec.dims)?;
        let j = parse_label(&e.j, &spec.dims)?;
        b = b.bracket(i, j, e.components.clone());
    }
    if spec.partial {
        let fixture = spec
            .invariant_subspace
            .as_ref()
            .map(|vs| vs.iter().cloned().map(MVector).collect());
        b = b.partial(fixture);
    }
    Ok(b.build()?)
}

pub fn load_spec(path: impl AsRef<Path>) -> Result<HomogeneousPair, SpecError> {
    let text = std::fs::read_to_string(path)?;
    let spec: PairSpec = serde_json::from_str(&text)?;
    build_pair(&spec)
}

impl PairSpec {
    /// Serialize a pair; only the a < b brackets that are nonzero are listed.
    pub fn from_pair(pair: &HomogeneousPair) -> PairSpec {
        let (r, n) = (pair.r(), pair.n());
        let d = r + n;
        let mut brackets = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                let c = pair.bracket_basis(a, b);
                if c.iter().any(|x| !x.is_zero()) {
                    brackets.push(BracketEntry {
                        i: label(a, r),
                        j: label(b, r),
                        components: c.to_vec(),
                    });
                }
            }
        }
        let g = pair.metric();
        let metric = (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !g[(i, j)].is_zero())
            .map(|(i, j)| MetricEntry {
                i: i + 1,
                j: j + 1,
                value: g[(i, j)].clone(),
            })
            .collect();
        PairSpec {
            id: pair.meta().id.clone(),
            name: pair.meta().name.clone(),
            dims: Dims { r, n },
            brackets,
            metric,
            params: pair.meta().params.clone(),
            partial: pair.is_partial(),
            invariant_subspace: pair
                .invariance_fixture()
                .map(|vs| vs.iter().map(|v| v.0.clone()).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::samples;

    #[test]
    fn roundtrip_heisenberg() {
        let p = samples::heisenberg();
        let spec = PairSpec::from_pair(&p);
        let json = serde_json::to_string(&spec).unwrap();
        let back: PairSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(build_pair(&back).unwrap(), p);
    }

    #[test]
    fn rejects_bad_labels_and_metric() {
        let json = r#"{"dims":{"r":0,"n":2},"brackets":[{"i":"u3","j":"u1","components":["0","0"]}],
                      "metric":[{"i":1,"j":1,"value":"1"},{"i":2,"j":2,"value":"1"}]}"#;
        let spec: PairSpec = serde_json::from_str(json).unwrap();
        assert!(matches!(build_pair(&spec), Err(SpecError::Invalid(_))));

        let json = r#"{"dims":{"r":0,"n":2},"metric":[{"i":1,"j":1,"value":"1"}]}"#;
        let spec: PairSpec = serde_json::from_str(json).unwrap();
        assert!(matches!(build_pair(&spec), Err(SpecError::Algebra(_))));
    }

    #[test]
    fn rational_strings_are_strict() {
        let json = r#"{"dims":{"r":0,"n":1},"metric":[{"i":1,"j":1,"value":"1.5"}]}"#;
        assert!(serde_json::from_str::<PairSpec>(json).is_err());
    }
}
