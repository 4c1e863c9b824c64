//! Exact computations on finite-dimensional real Lie algebras with
//! left-invariant metrics: Levi-Civita and Weyl connections, their curvature,
//! and the classification of stretched non-positive (SNP) invariant Weyl
//! connections.
//!
//! Structural computations use exact rationals ([`Scalar`]). Floating point
//! appears only in orthonormalization with irrational norms and in the
//! heuristic curvature scan.

pub mod catalog;
pub mod constructors;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod metric;
pub mod sample;
pub mod scalar;
pub mod weyl;

pub use error::{Error, Result};
pub use lie::{semidirect_sum, LieAlgebra, Series, ValidationReport, VergneType};
pub use linalg::{Matrix, Subspace};
pub use metric::{Connection, InnerProduct, MetricLieAlgebra};
pub use scalar::{Scalar, Vector};
