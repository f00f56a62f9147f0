//! h*-vectors and an exact real-rootedness test.

use num_traits::{Signed, Zero};

use super::EngineError;
use crate::exact::{binomial, Polynomial, Rational};

/// `h*_0..h*_dim` with `Σ_t p(t) z^t = h*(z) / (1-z)^(dim+1)`.
///
/// `h*_i = Σ_{j<=i} (-1)^j C(dim+1, j) p(i-j)`.
pub fn hstar(p: &Polynomial, dim: usize) -> Result<Vec<Rational>, EngineError> {
    if p.degree() != Some(dim) {
        return Err(EngineError::DimensionMismatch { expected: dim, found: p.degree() });
    }
    let values = p.eval_ints(0..=dim as i64);
    Ok((0..=dim)
        .map(|i| {
            let mut h = Rational::zero();
            for j in 0..=i {
                let term = Rational::from_integer(binomial(dim as i64 + 1, j as i64)) * &values[i - j];
                if j % 2 == 0 {
                    h += term;
                } else {
                    h -= term;
                }
            }
            h
        })
        .collect())
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain[chain.len() - 1].is_zero() {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        chain.push(-r);
    }
    chain.pop();
    chain
}

/// Distinct real roots of `p`.
pub fn count_real_roots(p: &Polynomial) -> usize {
    let chain = sturm_chain(p);
    let sign_at = |q: &Polynomial, negative: bool| -> i8 {
        let lead = q.leading_coeff().expect("chain members are nonzero");
        let mut s: i8 = if lead.is_positive() { 1 } else { -1 };
        if negative && q.degree().unwrap_or(0) % 2 == 1 {
            s = -s;
        }
        s
    };
    let at_minus = sign_changes(chain.iter().map(|q| sign_at(q, true)));
    let at_plus = sign_changes(chain.iter().map(|q| sign_at(q, false)));
    at_minus - at_plus
}

/// Whether `Σ coeffs[i] z^i` has only real roots. Constants count as real
/// rooted.
pub fn is_real_rooted(coeffs: &[Rational]) -> Result<bool, EngineError> {
    let p = Polynomial::from_coeffs(coeffs.to_vec());
    let degree = p.degree().ok_or(EngineError::ZeroPolynomial)?;
    if degree == 0 {
        return Ok(true);
    }
    let (squarefree, _) = p.div_rem(&p.gcd(&p.derivative()));
    Ok(count_real_roots(&squarefree) == squarefree.degree().unwrap_or(0))
}
