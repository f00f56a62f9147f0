//! Exact Ehrhart polynomials of sparse paving matroid polytopes.
//!
//! A sparse paving matroid of rank `k` on `n` elements is determined by its
//! set of circuit-hyperplanes, a family of `k`-subsets with pairwise
//! symmetric difference at least 4. Its Ehrhart polynomial is
//! `ehr(U_{k,n}, t) - lambda * ehr(T_{k,n}, t - 1)` where `lambda` counts the
//! circuit-hyperplanes. This crate computes those polynomials with exact
//! rational arithmetic, builds large circuit-hyperplane families from
//! constant-weight codes, and checks everything against a brute-force
//! lattice-point counter.

pub mod codes;
pub mod ehrhart;
pub mod exact;
pub mod matroid;
pub mod oracle;
pub mod report;

pub use exact::{Polynomial, Rational};
pub use matroid::{SparsePavingMatroid, SubsetMask};
