//! Metric Lie algebras and homogeneous pairs g = h ⊕ m.
//!
//! Basis order is fixed as (e₁..e_r, u₁..u_n): global index `a < r` is an
//! isotropy element, `a ≥ r` is u_{a−r+1}. All indices in this API are
//! zero-based; `BasisIndex` renders them one-based.

pub mod samples;
pub mod spec;

use std::collections::BTreeMap;
use std::ops::{Deref, DerefMut};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, BasisIndex};
use crate::exact::{QMatrix, Rational};

pub use spec::{build_pair, load_spec, PairSpec};

/// Vector on the u₁..u_n basis of m.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MVector(pub Vec<Rational>);

impl MVector {
    pub fn zero(n: usize) -> Self {
        MVector(vec![Rational::zero(); n])
    }

    /// The basis vector u_{i+1}.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = MVector::zero(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }
}

impl Deref for MVector {
    type Target = Vec<Rational>;
    fn deref(&self) -> &Vec<Rational> {
        &self.0
    }
}

impl DerefMut for MVector {
    fn deref_mut(&mut self) -> &mut Vec<Rational> {
        &mut self.0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PairMeta {
    pub id: String,
    pub name: String,
    pub params: BTreeMap<String, Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousPair {
    r: usize,
    n: usize,
    /// `table[a][b]` = [x_a, x_b] on all r+n basis elements.
    table: Vec<Vec<Vec<Rational>>>,
    metric: QMatrix,
    meta: PairMeta,
    partial: bool,
    /// Basis of a documented invariance subspace of m, used when the
    /// isotropy action itself is not available.
    invariance_fixture: Option<Vec<MVector>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JacobiViolation {
    pub triple: (String, String, String),
    pub residual: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvarianceReport {
    pub invariant: bool,
    /// Zero-based isotropy indices j with ψ(eⱼ)ᵗg + gψ(eⱼ) ≠ 0.
    pub violations: Vec<usize>,
}

impl HomogeneousPair {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.r + self.n
    }

    pub fn metric(&self) -> &QMatrix {
        &self.metric
    }

    pub fn meta(&self) -> &PairMeta {
        &self.meta
    }

    pub fn id(&self) -> &str {
        &self.meta.id
    }

    /// True when the h-components of brackets are unknown.
    pub fn is_partial(&self) -> bool {
        self.partial
    }

    pub fn invariance_fixture(&self) -> Option<&[MVector]> {
        self.invariance_fixture.as_deref()
    }

    pub fn index(&self, a: usize) -> BasisIndex {
        if a < self.r {
            BasisIndex::H(a)
        } else {
            BasisIndex::M(a - self.r)
        }
    }

    /// Global index of u_{i+1}.
    pub fn m_index(&self, i: usize) -> usize {
        self.r + i
    }

    /// Bracket of two basis elements (global indices).
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[Rational] {
        &self.table[a][b]
    }

    /// Bracket of arbitrary g-vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = xa * yb;
                for (o, t) in out.iter_mut().zip(&self.table[a][b]) {
                    if !t.is_zero() {
                        *o += &(&c * t);
                    }
                }
            }
        }
        out
    }

    /// m-part of [x_a, x_b].
    pub fn bracket_m(&self, a: usize, b: usize) -> MVector {
        MVector(self.table[a][b][self.r..].to_vec())
    }

    /// Embed an m-vector into g.
    pub fn embed_m(&self, x: &[Rational]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.r];
        v.extend_from_slice(x);
        v
    }

    /// Number of nonzero bracket relations [x_a, x_b], a < b.
    pub fn nonzero_relations(&self) -> usize {
        let d = self.dim();
        (0..d)
            .flat_map(|a| (a + 1..d).map(move |b| (a, b)))
            .filter(|&(a, b)| self.table[a][b].iter().any(|c| !c.is_zero()))
            .count()
    }

    /// Residuals [[x,y],z] + [[y,z],x] + [[z,x],y] over basis triples a < b < c.
    pub fn jacobi_check(&self) -> Vec<JacobiViolation> {
        self.jacobi_residuals()
            .into_iter()
            .map(|((a, b, c), residual)| JacobiViolation {
                triple: (
                    self.index(a).to_string(),
                    self.index(b).to_string(),
                    self.index(c).to_string(),
                ),
                residual,
            })
            .collect()
    }

    fn jacobi_residuals(&self) -> Vec<((usize, usize, usize), Vec<Rational>)> {
        let d = self.dim();
        let basis = |a: usize| {
            let mut v = vec![Rational::zero(); d];
            v[a] = Rational::one();
            v
        };
        let mut out = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                for c in b + 1..d {
                    let (x, y, z) = (basis(a), basis(b), basis(c));
                    let t1 = self.bracket(&self.bracket(&x, &y), &z);
                    let t2 = self.bracket(&self.bracket(&y, &z), &x);
                    let t3 = self.bracket(&self.bracket(&z, &x), &y);
                    let residual: Vec<Rational> = t1
                        .iter()
                        .zip(&t2)
                        .zip(&t3)
                        .map(|((p, q), r)| p + q + r)
                        .collect();
                    if residual.iter().any(|v| !v.is_zero()) {
                        out.push(((a, b, c), residual));
                    }
                }
            }
        }
        out
    }

    /// Matrix of ψ(e_{j+1}) on the u-basis; column i is [eⱼ, uᵢ]_m.
    pub fn isotropy_matrix(&self, j: usize) -> Result<QMatrix, AlgebraError> {
        if self.r == 0 {
            return Err(AlgebraError::NoIsotropy);
        }
        if j >= self.r {
            return Err(AlgebraError::IsotropyIndex(j));
        }
        if self.partial {
            return Err(AlgebraError::Partial(self.meta.id.clone()));
        }
        let cols: Vec<Vec<Rational>> = (0..self.n)
            .map(|i| self.bracket_m(j, self.m_index(i)).0)
            .collect();
        Ok(QMatrix::from_columns(&cols))
    }

    pub fn metric_invariance_check(&self) -> Result<InvarianceReport, AlgebraError> {
        let mut violations = Vec::new();
        for j in 0..self.r {
            let psi = self.isotropy_matrix(j)?;
            if !(&(&psi.transpose() * &self.metric) + &(&self.metric * &psi)).is_zero() {
                violations.push(j);
            }
        }
        Ok(InvarianceReport {
            invariant: violations.is_empty(),
            violations,
        })
    }

    /// ψ(eⱼ)X = 0 for all j. PARTIAL pairs fall back to the documented
    /// invariance subspace.
    pub fn is_invariant_field(&self, x: &MVector) -> Result<bool, AlgebraError> {
        if x.len() != self.n {
            return Err(AlgebraError::ComponentLength {
                expected: self.n,
                got: x.len(),
            });
        }
        if self.r == 0 || x.is_zero() {
            return Ok(true);
        }
        if self.partial {
            let Some(basis) = &self.invariance_fixture else {
                return Err(AlgebraError::Partial(self.meta.id.clone()));
            };
            return Ok(in_span(basis, x));
        }
        for j in 0..self.r {
            if !self.isotropy_matrix(j)?.mul_vec(x).iter().all(Rational::is_zero) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Basis of {X ∈ m : ψ(eⱼ)X = 0 ∀j}, or the documented fixture subspace
    /// for PARTIAL pairs.
    pub fn invariant_subspace(&self) -> Result<Vec<MVector>, AlgebraError> {
        if self.r == 0 {
            return Ok((0..self.n).map(|i| MVector::basis(self.n, i)).collect());
        }
        if self.partial {
            return self
                .invariance_fixture
                .clone()
                .ok_or_else(|| AlgebraError::Partial(self.meta.id.clone()));
        }
        let mut rows = Vec::new();
        for j in 0..self.r {
            rows.extend(self.isotropy_matrix(j)?.to_rows());
        }
        Ok(QMatrix::from_rows(rows)
            .nullspace()
            .into_iter()
            .map(MVector)
            .collect())
    }

    /// Same algebra with a different metric, fully revalidated.
    pub fn with_metric(&self, metric: QMatrix) -> Result<HomogeneousPair, AlgebraError> {
        let mut p = self.clone();
        p.metric = metric;
        p.validate()?;
        Ok(p)
    }

    pub fn with_meta(mut self, meta: PairMeta) -> Self {
        self.meta = meta;
        self
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.n;
        if self.metric.rows() != n || self.metric.cols() != n {
            return Err(AlgebraError::MetricShape {
                expected: n,
                got: self.metric.rows().max(self.metric.cols()),
            });
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.metric[(i, j)] != self.metric[(j, i)] {
                    return Err(AlgebraError::AsymmetricMetric(i, j));
                }
            }
        }
        if self.metric.det().map_or(true, |d| d.is_zero()) {
            return Err(AlgebraError::DegenerateMetric);
        }
        if self.partial {
            // h-components are unknown: only the m-structure can be checked.
            return Ok(());
        }
        for a in 0..self.r {
            for b in a + 1..self.r {
                if self.table[a][b][self.r..].iter().any(|c| !c.is_zero()) {
                    return Err(AlgebraError::NotSubalgebra(self.index(a), self.index(b)));
                }
            }
        }
        if let Some(((a, b, c), _)) = self.jacobi_residuals().into_iter().next() {
            return Err(AlgebraError::Jacobi(self.index(a), self.index(b), self.index(c)));
        }
        let inv = self.metric_invariance_check()?;
        if let Some(&j) = inv.violations.first() {
            return Err(AlgebraError::NonInvariantMetric(BasisIndex::H(j)));
        }
        Ok(())
    }
}

fn in_span(basis: &[MVector], x: &MVector) -> bool {
    if basis.is_empty() {
        return x.is_zero();
    }
    let cols: Vec<Vec<Rational>> = basis.iter().map(|v| v.0.clone()).collect();
    let a = QMatrix::from_columns(&cols);
    crate::exact::rref_solve(&a, x).is_ok_and(|s| s.is_consistent())
}

/// Incremental construction of a pair. Brackets are given for a < b; the
/// antisymmetric partner is filled in.
#[derive(Debug, Clone)]
pub struct PairBuilder {
    r: usize,
    n: usize,
    table: Vec<Vec<Option<Vec<Rational>>>>,
    metric: Option<QMatrix>,
    meta: PairMeta,
    partial: bool,
    invariance_fixture: Option<Vec<MVector>>,
    error: Option<AlgebraError>,
}

impl PairBuilder {
    pub fn new(r: usize, n: usize) -> Self {
        let d = r + n;
        PairBuilder {
            r,
            n,
            table: vec![vec![None; d]; d],
            metric: None,
            meta: PairMeta::default(),
            partial: false,
            invariance_fixture: None,
            error: None,
        }
    }

    /// Lie algebra (r = 0) of dimension n.
    pub fn lie_algebra(n: usize) -> Self {
        PairBuilder::new(0, n)
    }

    pub fn id(mut self, id: &str) -> Self {
        self.meta.id = id.to_string();
        self
    }

    pub fn name(mut self, name: &str) -> Self {
        self.meta.name = name.to_string();
        self
    }

    pub fn param(mut self, name: &str, value: Rational) -> Self {
        self.meta.params.insert(name.to_string(), value);
        self
    }

    pub fn partial(mut self, invariance_fixture: Option<Vec<MVector>>) -> Self {
        self.partial = true;
        self.invariance_fixture = invariance_fixture;
        self
    }

    /// Set [x_a, x_b] (global zero-based indices) to `components`.
    pub fn bracket(mut self, a: usize, b: usize, components: Vec<Rational>) -> Self {
        if self.error.is_some() {
            return self;
        }
        let d = self.r + self.n;
        if a >= d || b >= d {
            self.error = Some(AlgebraError::IndexOutOfRange(a.max(b)));
            return self;
        }
        if components.len() != d {
            self.error = Some(AlgebraError::ComponentLength {
                expected: d,
                got: components.len(),
            });
            return self;
        }
        let neg: Vec<Rational> = components.iter().map(|c| -c).collect();
        let conflict = |slot: &Option<Vec<Rational>>, want: &Vec<Rational>| {
            slot.as_ref().is_some_and(|v| v != want)
        };
        if (a == b && components.iter().any(|c| !c.is_zero()))
            || conflict(&self.table[a][b], &components)
            || conflict(&self.table[b][a], &neg)
        {
            self.error = Some(AlgebraError::Antisymmetry(self.index(a), self.index(b)));
            return self;
        }
        self.table[a][b] = Some(components);
        self.table[b][a] = Some(neg);
        self
    }

    /// Bracket of m-basis elements [u_i, u_j] with only m-components given;
    /// h-components are zero.
    pub fn bracket_mm(self, i: usize, j: usize, m_components: Vec<Rational>) -> Self {
        let r = self.r;
        let mut full = vec![Rational::zero(); r];
        full.extend(m_components);
        self.bracket(r + i, r + j, full)
    }

    /// Integer convenience for [u_i, u_j].
    pub fn bracket_mm_i64(self, i: usize, j: usize, m_components: &[i64]) -> Self {
        self.bracket_mm(i, j, m_components.iter().map(|&c| Rational::integer(c)).collect())
    }

    pub fn metric(mut self, g: QMatrix) -> Self {
        self.metric = Some(g);
        self
    }

    fn index(&self, a: usize) -> BasisIndex {
        if a < self.r {
            BasisIndex::H(a)
        } else {
            BasisIndex::M(a - self.r)
        }
    }

    fn assemble(self) -> Result<HomogeneousPair, AlgebraError> {
        if let Some(e) = self.error {
            return Err(e);
        }
        let d = self.r + self.n;
        let table = self
            .table
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| c.unwrap_or_else(|| vec![Rational::zero(); d]))
                    .collect()
            })
            .collect();
        let metric = self.metric.unwrap_or_else(|| QMatrix::identity(self.n));
        Ok(HomogeneousPair {
            r: self.r,
            n: self.n,
            table,
            metric,
            meta: self.meta,
            partial: self.partial,
            invariance_fixture: self.invariance_fixture,
        })
    }

    /// Validate every invariant and return the pair.
    pub fn build(self) -> Result<HomogeneousPair, AlgebraError> {
        let p = self.assemble()?;
        p.validate()?;
        Ok(p)
    }

    /// Shape and antisymmetry only; Jacobi, nondegeneracy and invariance are
    /// left for the caller to inspect with the check methods.
    pub fn build_unchecked(self) -> Result<HomogeneousPair, AlgebraError> {
        self.assemble()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;

    #[test]
    fn jacobi_violation_reported_with_triple() {
        let err = PairBuilder::lie_algebra(3)
            .bracket_mm_i64(0, 1, &[1, 0, 0])
            .bracket_mm_i64(0, 2, &[0, 1, 0])
            .build()
            .unwrap_err();
        assert_eq!(
            err,
            AlgebraError::Jacobi(BasisIndex::M(0), BasisIndex::M(1), BasisIndex::M(2))
        );
    }

    #[test]
    fn antisymmetry_conflict() {
        let err = PairBuilder::lie_algebra(2)
            .bracket_mm_i64(0, 1, &[1, 0])
            .bracket_mm_i64(1, 0, &[1, 0])
            .build()
            .unwrap_err();
        assert!(matches!(err, AlgebraError::Antisymmetry(..)));
        let err = PairBuilder::lie_algebra(2)
            .bracket_mm_i64(1, 1, &[1, 0])
            .build()
            .unwrap_err();
        assert!(matches!(err, AlgebraError::Antisymmetry(..)));
    }

    #[test]
    fn degenerate_and_asymmetric_metrics() {
        let e = PairBuilder::lie_algebra(2)
            .metric(QMatrix::from_i64(&[&[1, 1], &[1, 1]]))
            .build()
            .unwrap_err();
        assert_eq!(e, AlgebraError::DegenerateMetric);
        let e = PairBuilder::lie_algebra(2)
            .metric(QMatrix::from_i64(&[&[1, 1], &[0, 1]]))
            .build()
            .unwrap_err();
        assert_eq!(e, AlgebraError::AsymmetricMetric(0, 1));
    }

    #[test]
    fn h_must_close() {
        let e = PairBuilder::new(2, 1)
            .bracket(0, 1, vec![qi(0), qi(0), qi(1)])
            .build()
            .unwrap_err();
        assert_eq!(e, AlgebraError::NotSubalgebra(BasisIndex::H(0), BasisIndex::H(1)));
    }

    #[test]
    fn bracket_is_bilinear() {
        let p = samples::heisenberg();
        let x = vec![qi(2), qi(1), qi(0)];
        let y = vec![qi(0), qi(3), qi(5)];
        assert_eq!(p.bracket(&x, &y), vec![qi(0), qi(0), qi(6)]);
        assert_eq!(p.bracket(&y, &x), vec![qi(0), qi(0), qi(-6)]);
    }
}
