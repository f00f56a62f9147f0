//! Ehrhart polynomials of uniform, minimal and sparse paving matroids,
//! bounds on their quadratic coefficients, the rank-2 positivity checks,
//! and the h*-transform.

pub mod bounds;
pub mod hstar;
pub mod minimal;
pub mod rank2;
pub mod search;
pub mod sparse;
pub mod uniform;

use num_bigint::BigInt;

pub use bounds::{
    counterexample_inequality, intermediate_upper_bound_quad, ln_upper_bound, lower_bound_quad,
    strengthened_inequality, upper_bound_quad_uniform, LogReplacement,
};
pub use hstar::{hstar, is_real_rooted};
pub use minimal::{
    coeff_minimal_shifted_rank2, ehr_minimal, ehr_minimal_shifted, quad_coeff_minimal_shifted,
};
pub use rank2::{rank2_poly, verify_rank2_inequalities, Rank2Verification};
pub use search::{search_counterexamples, CounterexampleReport, LambdaProvenance};
pub use sparse::{ehr_of_matroid, ehr_sparse, sparse_coefficient_newton};
pub use uniform::{count_points_uniform, ehr_uniform, uniform_coefficient_newton, uniform_counts};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("rank {k} outside the admissible range {range} for n = {n}")]
    InvalidRank { n: usize, k: usize, range: &'static str },
    #[error("no sparse paving matroid with this λ exists (λ = {lambda} exceeds bound {bound} for n = {n}, k = {k})")]
    LambdaOutOfRange { n: usize, k: usize, lambda: BigInt, bound: BigInt },
    #[error("dimension mismatch: polynomial has degree {found:?}, expected {expected}")]
    DimensionMismatch { expected: usize, found: Option<usize> },
    #[error("the zero polynomial has no real-rootedness verdict")]
    ZeroPolynomial,
}
