use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational literal {0:?} (expected \"p\" or \"p/q\")")]
pub struct ParseRationalError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("zero polynomial has no factorization")]
    ZeroPolynomial,
}

/// Basis element of g = h ⊕ m: `H(j)` is e_{j+1}, `M(i)` is u_{i+1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisIndex {
    H(usize),
    M(usize),
}

impl std::fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisIndex::H(j) => write!(f, "e{}", j + 1),
            BasisIndex::M(i) => write!(f, "u{}", i + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("bracket table is not antisymmetric at ({0}, {1})")]
    Antisymmetry(BasisIndex, BasisIndex),
    #[error("Jacobi identity fails at ({0}, {1}, {2})")]
    Jacobi(BasisIndex, BasisIndex, BasisIndex),
    #[error("metric is degenerate (det = 0)")]
    DegenerateMetric,
    #[error("metric is not symmetric at ({0}, {1})")]
    AsymmetricMetric(usize, usize),
    #[error("isotropy h is not a subalgebra: [{0}, {1}] has an m-component")]
    NotSubalgebra(BasisIndex, BasisIndex),
    #[error("metric is not invariant under the isotropy action of {0}")]
    NonInvariantMetric(BasisIndex),
    #[error("bracket index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("component vector has length {got}, expected {expected}")]
    ComponentLength { expected: usize, got: usize },
    #[error("metric is {got}x{got}, expected {expected}x{expected}")]
    MetricShape { expected: usize, got: usize },
    #[error("pair {0:?} is PARTIAL: h-components of brackets are not known")]
    Partial(String),
    #[error("Lie-group pair (r = 0) has no isotropy matrices")]
    NoIsotropy,
    #[error("isotropy index {0} out of range")]
    IsotropyIndex(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("the Weyl branch needs dim m >= 4, got {0}; use cotton_check")]
    WeylDimension(usize),
    #[error("cotton_check needs dim m = 3, got {0}")]
    CottonDimension(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SegreError {
    #[error("Q is not self-adjoint with respect to g (g·Q is not symmetric)")]
    NotSelfAdjoint,
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("malformed Segre symbol {0:?}: {1}")]
    Parse(String, String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolitonError {
    #[error("Ricci tensor is {got}x{got}, pair has dim m = {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("sample is not in the solution set")]
    NotInSolutionSet,
    #[error("solution is inconsistent; nothing to classify")]
    Inconsistent,
    #[error("unknown fixture system {0:?}")]
    UnknownFixture(String),
    #[error("PARTIAL pair without a documented invariance subspace")]
    NoInvarianceData,
    #[error("unknown variable {0:?} in system row")]
    UnknownVariable(String),
    #[error("system has a term of degree > 2 in the unknowns")]
    DegreeTooHigh,
    #[error("row {0:?} stays quadratic after fixing every determined unknown")]
    Nonlinear(String),
    #[error("missing parameter {0:?}")]
    MissingParameter(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error("parameter {name} = {value} is out of domain: {constraint}")]
    Domain {
        name: String,
        value: Rational,
        constraint: String,
    },
    #[error("entry {0:?} has parameter names {1:?}; got unknown parameter {2:?}")]
    UnknownParameter(String, Vec<String>, String),
    #[error("entry {0:?} is metadata-only (not reproducible: brackets absent)")]
    MetadataOnly(String),
    #[error("metric resolution for {0:?} matched no candidate")]
    NoCandidate(String),
    #[error("metric resolution for {id:?} is ambiguous: {survivors:?}")]
    Ambiguous { id: String, survivors: Vec<String> },
    #[error(transparent)]
    Soliton(#[from] SolitonError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("spec file is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("spec file I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid algebra: {0}")]
    Algebra(#[from] AlgebraError),
    #[error("invalid spec: {0}")]
    Invalid(String),
}
