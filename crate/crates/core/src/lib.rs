//! Exact curvature, Segre types and Ricci solitons of metric Lie algebras
//! and homogeneous pairs g = h ⊕ m.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod report;
pub mod segre;
pub mod soliton;

/// Parameter bindings by name.
pub type Params = std::collections::BTreeMap<String, exact::Rational>;
