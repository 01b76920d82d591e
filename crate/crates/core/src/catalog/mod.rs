//! Algebra families with their printed fixtures, parameter domains, metric
//! resolution and a one-shot verification per entry.

mod entries;
pub mod metadata;
mod resolve;
mod verify;

use serde::Serialize;

use crate::algebra::spec::PairSpec;
use crate::algebra::{HomogeneousPair, MVector, PairBuilder};
use crate::error::CatalogError;
use crate::exact::{q, QMatrix, Rational};
use crate::geometry::brackets_from_nomizu;
use crate::soliton::{load_fixture_system, SolitonSystem};
use crate::Params;

pub use metadata::{TableRow, TABLE_ROWS};
pub use resolve::{resolve_metric, torsion_defects, Candidate, MetricResolution};
pub use verify::{same_solution_set, verify_entry};

/// Default parameter samples.
pub fn default_samples() -> Vec<Rational> {
    vec![q(1, 1), q(1, 2), q(-2, 1), q(3, 1)]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    Any,
    NonZero,
    /// {−1, 1}
    Sign,
}

impl Domain {
    pub fn admits(self, v: &Rational) -> bool {
        match self {
            Domain::Any => true,
            Domain::NonZero => !v.is_zero(),
            Domain::Sign => v.abs().is_one(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub domain: Domain,
    pub constraint: &'static str,
    #[serde(skip)]
    pub default: (i64, i64),
}

impl ParamSpec {
    pub fn default_value(&self) -> Rational {
        q(self.default.0, self.default.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EntryKind {
    Full,
    Partial,
    MetadataOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MetricStatus {
    /// Given explicitly.
    Resolved,
    /// Pseudo-orthonormal with unspecified sign placement; found by search.
    Searched,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Signature {
    Riemannian,
    Lorentzian,
    Neutral,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SigmaClaim {
    Value(Rational),
    Arbitrary,
}

/// What the source claims about the soliton equation.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolitonClaim {
    None,
    NotSoliton,
    Soliton {
        /// `None` when X is unconstrained.
        x: Option<Vec<Rational>>,
        sigma: SigmaClaim,
    },
}

type Bracket = (usize, usize, Vec<Rational>);

#[derive(Debug, Clone, Copy)]
pub(crate) struct EntryData {
    /// [u_i, u_j] m-components for i < j (zero-based).
    brackets: fn(&Params) -> Vec<Bracket>,
    metric: Option<fn(&Params) -> QMatrix>,
    lambda: Option<fn(&Params) -> Vec<QMatrix>>,
    ricci: Option<fn(&Params) -> QMatrix>,
    system: Option<&'static str>,
    claim: fn(&Params) -> SolitonClaim,
    invariance: Option<fn(&Params) -> Vec<MVector>>,
    expected_segre: Option<&'static str>,
    /// (where stated, symbol) pairs as printed.
    stated_segre: &'static [(&'static str, &'static str)],
}

#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub title: &'static str,
    pub kind: EntryKind,
    pub metric_status: MetricStatus,
    pub signature: Signature,
    pub params: &'static [ParamSpec],
    pub r: usize,
    pub n: usize,
    pub notes: &'static [&'static str],
    pub(crate) data: EntryData,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StatedSymbol {
    pub source: String,
    pub symbol: String,
}

/// Printed data of an entry evaluated at a parameter sample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fixtures {
    /// Printed Λ(u₁)..Λ(u_n).
    pub printed_lambda: Option<Vec<QMatrix>>,
    pub printed_ricci: Option<QMatrix>,
    pub system: Option<SolitonSystem>,
    pub claim: SolitonClaim,
    pub invariance_subspace: Option<Vec<MVector>>,
    pub expected_segre: Option<String>,
    pub stated_segre: Vec<StatedSymbol>,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub entry: &'static CatalogEntry,
    pub params: Params,
    pub pair: HomogeneousPair,
    pub fixtures: Fixtures,
}

pub fn entries() -> &'static [CatalogEntry] {
    entries::ENTRIES
}

/// Every id: reproducible entries first, then metadata rows.
pub fn ids() -> Vec<&'static str> {
    entries()
        .iter()
        .map(|e| e.id)
        .chain(TABLE_ROWS.iter().map(|r| r.id))
        .collect()
}

pub fn table_row(id: &str) -> Option<&'static TableRow> {
    TABLE_ROWS.iter().find(|r| r.id == id)
}

pub fn entry(id: &str) -> Result<&'static CatalogEntry, CatalogError> {
    if let Some(e) = entries().iter().find(|e| e.id == id) {
        return Ok(e);
    }
    if table_row(id).is_some() {
        return Err(CatalogError::MetadataOnly(id.to_string()));
    }
    Err(CatalogError::UnknownId(id.to_string()))
}

impl CatalogEntry {
    pub fn param_names(&self) -> Vec<&'static str> {
        self.params.iter().map(|p| p.name).collect()
    }

    pub fn default_params(&self) -> Params {
        self.params
            .iter()
            .map(|p| (p.name.to_string(), p.default_value()))
            .collect()
    }

    /// Fill unspecified parameters with defaults and check every domain.
    pub fn complete_params(&self, given: &Params) -> Result<Params, CatalogError> {
        for name in given.keys() {
            if !self.params.iter().any(|p| p.name == name) {
                return Err(CatalogError::UnknownParameter(
                    self.id.to_string(),
                    self.param_names().iter().map(|s| s.to_string()).collect(),
                    name.clone(),
                ));
            }
        }
        let mut out = self.default_params();
        for (k, v) in given {
            out.insert(k.clone(), v.clone());
        }
        for p in self.params {
            let v = &out[p.name];
            if !p.domain.admits(v) {
                return Err(CatalogError::Domain {
                    name: p.name.to_string(),
                    value: v.clone(),
                    constraint: p.constraint.to_string(),
                });
            }
        }
        Ok(out)
    }

    /// One parameter point per sample value. Parameter j of point k takes
    /// the (k + j)-th admissible sample, so parameters do not move in
    /// lockstep; sign parameters alternate 1, −1.
    pub fn sample_points(&self, samples: &[Rational]) -> Vec<Params> {
        if self.params.is_empty() || samples.is_empty() {
            return vec![self.default_params()];
        }
        let mut out: Vec<Params> = Vec::new();
        for k in 0..samples.len() {
            let point: Params = self
                .params
                .iter()
                .enumerate()
                .map(|(j, p)| {
                    let v = match p.domain {
                        Domain::Sign => q(if k % 2 == 0 { 1 } else { -1 }, 1),
                        d => {
                            let admissible: Vec<&Rational> =
                                samples.iter().filter(|s| d.admits(s)).collect();
                            if admissible.is_empty() {
                                p.default_value()
                            } else {
                                admissible[(k + j) % admissible.len()].clone()
                            }
                        }
                    };
                    (p.name.to_string(), v)
                })
                .collect();
            if !out.contains(&point) {
                out.push(point);
            }
        }
        out
    }

    /// Brackets at a sample, with the identity as placeholder metric.
    pub(crate) fn builder(&self, params: &Params) -> PairBuilder {
        let mut b = PairBuilder::new(self.r, self.n).id(self.id).name(self.title);
        for (k, v) in params {
            b = b.param(k, v.clone());
        }
        let brackets = match (self.kind, self.data.lambda) {
            (EntryKind::Partial, Some(lam)) => {
                let lams = lam(params);
                let mut out = Vec::new();
                for i in 0..self.n {
                    for j in i + 1..self.n {
                        let v = brackets_from_nomizu(&lams, i, j);
                        if !v.is_zero() {
                            out.push((i, j, v.0));
                        }
                    }
                }
                out
            }
            _ => (self.data.brackets)(params),
        };
        for (i, j, c) in brackets {
            b = b.bracket_mm(i, j, c);
        }
        if self.kind == EntryKind::Partial {
            b = b.partial(self.data.invariance.map(|f| f(params)));
        }
        b
    }

    pub fn fixtures(&self, params: &Params) -> Result<Fixtures, CatalogError> {
        let d = &self.data;
        Ok(Fixtures {
            printed_lambda: d.lambda.map(|f| f(params)),
            printed_ricci: d.ricci.map(|f| f(params)),
            system: d.system.map(|id| load_fixture_system(id, params)).transpose()?,
            claim: (d.claim)(params),
            invariance_subspace: d.invariance.map(|f| f(params)),
            expected_segre: d.expected_segre.map(str::to_string),
            stated_segre: d
                .stated_segre
                .iter()
                .map(|(s, sym)| StatedSymbol {
                    source: s.to_string(),
                    symbol: sym.to_string(),
                })
                .collect(),
        })
    }
}

/// Metric of an entry at a completed parameter sample.
fn metric_for(e: &'static CatalogEntry, params: &Params) -> Result<QMatrix, CatalogError> {
    match (e.metric_status, e.data.metric) {
        (MetricStatus::Resolved, Some(f)) => Ok(f(params)),
        _ => Ok(resolve_metric(e.id)?.metric),
    }
}

/// Validated pair and evaluated fixtures at a parameter sample; missing
/// parameters take their defaults.
pub fn instantiate(id: &str, params: &Params) -> Result<Instance, CatalogError> {
    let e = entry(id)?;
    let params = e.complete_params(params)?;
    let metric = metric_for(e, &params)?;
    let pair = e.builder(&params).metric(metric).build()?;
    let fixtures = e.fixtures(&params)?;
    Ok(Instance {
        entry: e,
        params,
        pair,
        fixtures,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryExport {
    pub id: &'static str,
    pub title: &'static str,
    pub kind: EntryKind,
    pub metric_status: MetricStatus,
    pub signature: Signature,
    pub params: &'static [ParamSpec],
    pub notes: &'static [&'static str],
    pub bindings: Params,
    pub spec: PairSpec,
    pub fixtures: Fixtures,
}

/// The entry at a sample in the algebra-spec format, with its fixtures.
pub fn export_entry(id: &str, params: &Params) -> Result<EntryExport, CatalogError> {
    let inst = instantiate(id, params)?;
    let e = inst.entry;
    Ok(EntryExport {
        id: e.id,
        title: e.title,
        kind: e.kind,
        metric_status: e.metric_status,
        signature: e.signature,
        params: e.params,
        notes: e.notes,
        bindings: inst.params,
        spec: PairSpec::from_pair(&inst.pair),
        fixtures: inst.fixtures,
    })
}
