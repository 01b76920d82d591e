//! Exact rational arithmetic: scalars, dense matrices, linear systems and
//! univariate polynomials.

pub mod linsolve;
pub mod matrix;
pub mod poly;
pub mod rational;

pub use linsolve::{minimal_certificate, rref_solve, InconsistencyCertificate, SolutionSet, Solved};
pub use matrix::QMatrix;
pub use poly::{char_poly, factor_poly, minimal_poly, Factor, Poly, RootInfo, RootInterval};
pub use rational::{q, qi, Rational};
