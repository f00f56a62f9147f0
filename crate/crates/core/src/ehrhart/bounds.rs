//! Bounds on quadratic Ehrhart coefficients and the sufficient inequality
//! for a negative quadratic coefficient.
//!
//! With `λ = floor(C(n,k)/n)`,
//! `[t^2] ehr(M) <= C(k+1,2) H_{n-1}^2 - C(n,k) / (n k (n-1))`, so the
//! matroid is not Ehrhart positive once the right-hand side is negative.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{binomial, factorial, harmonic, stirling1_unsigned, Rational};

fn r(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `1/(k(n-1))`, a lower bound for `[t^2] ehr(T_{k,n}, t-1)`.
pub fn lower_bound_quad(k: usize, n: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(k * (n - 1)))
}

/// `C(k+1,2) H_{n-1}^2`, an upper bound for `[t^2] ehr(U_{k,n}, t)`.
pub fn upper_bound_quad_uniform(k: usize, n: usize) -> Rational {
    let h = harmonic(n - 1);
    r(binomial(k as i64 + 1, 2)) * &h * &h
}

/// `(C(k+1,2) + C(k,2)) [n,3] / (n-1)!`, the sharper intermediate bound.
pub fn intermediate_upper_bound_quad(k: usize, n: usize) -> Rational {
    let weight = binomial(k as i64 + 1, 2) + binomial(k as i64, 2);
    Rational::new(weight * stirling1_unsigned(n, 3), factorial(n - 1))
}

/// `C(k+1,2) H_{n-1}^2 < C(n,k) / (n k (n-1))`, decided exactly.
pub fn counterexample_inequality(k: usize, n: usize) -> bool {
    let rhs = Rational::new(
        binomial(n as i64, k as i64),
        BigInt::from(n) * BigInt::from(k) * BigInt::from(n - 1),
    );
    upper_bound_quad_uniform(k, n) < rhs
}

/// How the rank-9 inequality replaces `log(n) + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogReplacement {
    /// A certified rational upper bound for `ln(n) + 1`.
    NaturalLog,
    /// `H_n`, which never exceeds `ln(n) + 1`.
    Harmonic,
}

/// `C(n+1,2) L^2 < C(n,9) / (n · n(n-1))` with `L` per `replacement`.
///
/// For `9 <= k <= n/2` the left side dominates `C(k+1,2) H_{n-1}^2` and the
/// right side is dominated by `C(n,k)/(n k (n-1))`, so a true result implies
/// [`counterexample_inequality`] for every such `k`.
pub fn strengthened_inequality(n: usize, replacement: LogReplacement) -> bool {
    let log_term = match replacement {
        LogReplacement::NaturalLog => ln_upper_bound(n as u64) + Rational::one(),
        LogReplacement::Harmonic => harmonic(n),
    };
    let lhs = r(binomial(n as i64 + 1, 2)) * &log_term * &log_term;
    let rhs = Rational::new(
        binomial(n as i64, 9),
        BigInt::from(n) * BigInt::from(n) * BigInt::from(n - 1),
    );
    lhs < rhs
}

/// Rational upper bound for `2 atanh(y)`, `0 <= y <= 1/3`, from `terms`
/// terms of the odd power series plus a geometric tail bound.
fn two_atanh_upper(y: &Rational, terms: u32) -> Rational {
    let y2 = y * y;
    let mut power = y.clone();
    let mut sum = Rational::zero();
    for i in 0..terms {
        sum += &power / r(2 * i + 1);
        power *= &y2;
    }
    let tail = &power / (r(2 * terms + 1) * (Rational::one() - &y2));
    (sum + tail) * r(2)
}

/// Rational `u` with `ln(n) <= u <= ln(n) + 10^-30`, for `n >= 1`.
pub fn ln_upper_bound(n: u64) -> Rational {
    assert!(n >= 1, "ln of zero");
    // n = 2^e · m with 1 <= m < 2; ln x = 2 atanh((x-1)/(x+1))
    let e = 63 - n.leading_zeros();
    let m = Rational::new(BigInt::from(n), BigInt::one() << e);
    let y_m = (&m - Rational::one()) / (&m + Rational::one());
    let ln2 = two_atanh_upper(&Rational::new(1.into(), 3.into()), 40);
    ln2 * r(e) + two_atanh_upper(&y_m, 40)
}
