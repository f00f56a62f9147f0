//! `ehr(M, t) = ehr(U_{k,n}, t) - λ · ehr(T_{k,n}, t - 1)` for a sparse
//! paving matroid with λ circuit-hyperplanes.

use num_bigint::BigInt;
use num_traits::Signed;

use super::minimal::{ehr_minimal_shifted, quad_coeff_minimal_shifted};
use super::uniform::{ehr_uniform, uniform_coefficient_newton};
use super::EngineError;
use crate::codes::max_ch_upper_bound;
use crate::exact::{Polynomial, Rational};
use crate::matroid::SparsePavingMatroid;

fn check_lambda(n: usize, k: usize, lambda: &BigInt) -> Result<(), EngineError> {
    let bound = max_ch_upper_bound(n as i64, k as i64);
    if lambda.is_negative() || *lambda > bound {
        return Err(EngineError::LambdaOutOfRange { n, k, lambda: lambda.clone(), bound });
    }
    Ok(())
}

pub fn ehr_sparse(n: usize, k: usize, lambda: &BigInt) -> Result<Polynomial, EngineError> {
    if k == 0 || k >= n {
        return Err(EngineError::InvalidRank { n, k, range: "1..=n-1" });
    }
    check_lambda(n, k, lambda)?;
    let uniform = ehr_uniform(k, n)?;
    if lambda.sign() == num_bigint::Sign::NoSign {
        return Ok(uniform);
    }
    let step = ehr_minimal_shifted(k, n)?;
    Ok(&uniform - &step.scale(&Rational::from_integer(lambda.clone())))
}

/// Ehrhart polynomial of a concrete matroid; rank 0 and full rank give a
/// point.
pub fn ehr_of_matroid(m: &SparsePavingMatroid) -> Result<Polynomial, EngineError> {
    if m.rank() == 0 || m.rank() == m.n() {
        return Ok(Polynomial::one());
    }
    ehr_sparse(m.n(), m.rank(), &BigInt::from(m.lambda()))
}

/// `[t^2] ehr(M, t)` without materializing either polynomial: the uniform
/// part from forward differences of lattice-point counts, the minimal part
/// from its closed form. Meant for large `n` with small `k`.
pub fn sparse_coefficient_newton(n: usize, k: usize, lambda: &BigInt) -> Result<Rational, EngineError> {
    check_lambda(n, k, lambda)?;
    let uniform = uniform_coefficient_newton(k, n, 2)?;
    let minimal = quad_coeff_minimal_shifted(k, n)?;
    Ok(uniform - minimal * Rational::from_integer(lambda.clone()))
}
