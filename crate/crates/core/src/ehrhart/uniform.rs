//! Lattice points of dilated hypersimplices.
//!
//! `t·Δ_{k,n}` contains the integer vectors with `0 <= x_i <= t` and
//! `Σ x_i = kt`. Inclusion–exclusion over the coordinates that exceed `t`
//! counts them; the Ehrhart polynomial is recovered from `n` counts.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::EngineError;
use crate::exact::{binomial, factorial, interpolate_naturals, stirling1_column, Polynomial, Rational};

/// `#{x in Z^n : 0 <= x_i <= t, Σ x_i = kt}`.
pub fn count_points_uniform(k: usize, n: usize, t: u64) -> BigInt {
    if n == 0 {
        return BigInt::from(u8::from(k == 0 || t == 0));
    }
    let (k, n, t) = (k as i64, n as i64, t as i64);
    let mut total = BigInt::zero();
    for j in 0..=n {
        let rest = k * t - j * (t + 1);
        if rest < 0 {
            break;
        }
        let term = binomial(n, j) * binomial(rest + n - 1, n - 1);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Counts for `t = 0..=t_max`, updating each inclusion–exclusion binomial
/// incrementally in `t`.
pub fn uniform_counts(k: usize, n: usize, t_max: u64) -> Vec<BigInt> {
    if n == 0 || k == 0 || k >= n {
        return (0..=t_max).map(|t| count_points_uniform(k, n, t)).collect();
    }
    let (ki, ni) = (k as i64, n as i64);
    let mut out = vec![BigInt::zero(); t_max as usize + 1];
    for j in 0..ki {
        let weight = binomial(ni, j);
        let step = ki - j;
        // current binomial C(top, n-1), top = (k-j)t - j + n - 1
        let mut current: Option<(i64, BigInt)> = None;
        for t in 0..=t_max as i64 {
            let rest = step * t - j;
            if rest < 0 {
                continue;
            }
            let top = rest + ni - 1;
            let value = match current.take() {
                None => binomial(top, ni - 1),
                Some((mut a, mut c)) => {
                    while a < top {
                        a += 1;
                        c *= a;
                        c /= a - (ni - 1);
                    }
                    c
                }
            };
            let term = &weight * &value;
            if j % 2 == 0 {
                out[t as usize] += term;
            } else {
                out[t as usize] -= term;
            }
            current = Some((top, value));
        }
    }
    out
}

/// `ehr(U_{k,n}, t)`, interpolated from the counts at `t = 0..n-1`.
///
/// For `k` in `{0, n}` the polytope is a single point and the result is the
/// constant 1.
pub fn ehr_uniform(k: usize, n: usize) -> Result<Polynomial, EngineError> {
    if k > n || n == 0 {
        return Err(EngineError::InvalidRank { n, k, range: "0..=n" });
    }
    if k == 0 || k == n {
        return Ok(Polynomial::one());
    }
    Ok(interpolate_naturals(&uniform_counts(k, n, n as u64 - 1)))
}

/// Leading entries `Δ^j v_0` of the forward-difference table of `values`.
pub fn forward_differences(values: &[BigInt]) -> Vec<BigInt> {
    let mut row = values.to_vec();
    let mut out = Vec::with_capacity(values.len());
    for level in 0..values.len() {
        out.push(row[0].clone());
        for i in 0..values.len() - level - 1 {
            let next = &row[i + 1] - &row[i];
            row[i] = next;
        }
    }
    out
}

/// `[t^m]` of `Σ_j diffs[j] · C(t, j)`.
///
/// `C(t, j) = Σ_m s(j, m) t^m / j!` with signed Stirling numbers
/// `s(j, m) = (-1)^(j-m) [j, m]`; everything is put over `d!` and reduced
/// once.
pub fn newton_coefficient(diffs: &[BigInt], m: usize) -> Rational {
    if diffs.len() <= m {
        return Rational::zero();
    }
    let d = diffs.len() - 1;
    let column = stirling1_column(d, m);
    // d!/j! for j = d, d-1, ..., 0
    let mut scale = BigInt::one();
    let mut numer = BigInt::zero();
    for j in (m..=d).rev() {
        if !diffs[j].is_zero() {
            let term = &diffs[j] * &column[j] * &scale;
            if (j - m).is_multiple_of(2) {
                numer += term;
            } else {
                numer -= term;
            }
        }
        scale *= j;
    }
    Rational::new(numer, factorial(d))
}

/// `[t^m] ehr(U_{k,n}, t)` from forward differences of the integer counts,
/// without building the full polynomial.
pub fn uniform_coefficient_newton(k: usize, n: usize, m: usize) -> Result<Rational, EngineError> {
    if k > n || n == 0 {
        return Err(EngineError::InvalidRank { n, k, range: "0..=n" });
    }
    if k == 0 || k == n {
        return Ok(if m == 0 { Rational::one() } else { Rational::zero() });
    }
    let counts = uniform_counts(k, n, n as u64 - 1);
    Ok(newton_coefficient(&forward_differences(&counts), m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binom_poly, int};

    /// Direct enumeration of `{x : 0 <= x_i <= t, Σ x = kt}`.
    fn enumerate(k: usize, n: usize, t: u64) -> u64 {
        fn rec(i: usize, n: usize, t: u64, remaining: u64) -> u64 {
            if i == n {
                return u64::from(remaining == 0);
            }
            (0..=t.min(remaining)).map(|v| rec(i + 1, n, t, remaining - v)).sum()
        }
        rec(0, n, t, k as u64 * t)
    }

    #[test]
    fn count_examples() {
        for n in 1..8usize {
            for t in 0..5u64 {
                assert_eq!(
                    count_points_uniform(1, n, t),
                    binomial(t as i64 + n as i64 - 1, n as i64 - 1)
                );
            }
        }
        assert_eq!(count_points_uniform(2, 3, 1), BigInt::from(3));
        assert_eq!(count_points_uniform(9, 20, 1), binomial(20, 9));
        assert_eq!(count_points_uniform(9, 20, 1), BigInt::from(167960));
    }

    #[test]
    fn counts_match_enumeration() {
        for n in 1..=7usize {
            for k in 0..=n {
                let seq = uniform_counts(k, n, 5);
                for t in 0..=5u64 {
                    let e = BigInt::from(enumerate(k, n, t));
                    assert_eq!(count_points_uniform(k, n, t), e, "k={k} n={n} t={t}");
                    assert_eq!(seq[t as usize], e, "k={k} n={n} t={t}");
                }
            }
        }
    }

    #[test]
    fn incremental_counts_match_direct_at_scale() {
        let seq = uniform_counts(7, 30, 29);
        for t in [0u64, 1, 2, 13, 29] {
            assert_eq!(seq[t as usize], count_points_uniform(7, 30, t));
        }
    }

    #[test]
    fn ehr_uniform_examples() {
        assert_eq!(ehr_uniform(1, 3).unwrap(), binom_poly(2, 2));
        assert_eq!(ehr_uniform(2, 3).unwrap(), binom_poly(2, 2));
        let oct = ehr_uniform(2, 4).unwrap();
        assert_eq!(oct.eval_int(1), int(6));
        assert_eq!(oct.eval_int(0), int(1));
        assert_eq!(oct.degree(), Some(3));
        assert_eq!(ehr_uniform(0, 5).unwrap(), Polynomial::one());
        assert_eq!(ehr_uniform(5, 5).unwrap(), Polynomial::one());
        assert!(ehr_uniform(6, 5).is_err());
    }

    #[test]
    fn ehr_uniform_extrapolates_and_is_self_dual() {
        for n in 2..=12usize {
            for k in 1..n {
                let p = ehr_uniform(k, n).unwrap();
                assert_eq!(p.degree(), Some(n - 1));
                assert_eq!(p.eval_int(0), int(1));
                // beyond the interpolation nodes
                for t in [n as u64, n as u64 + 3] {
                    assert_eq!(p.eval_int(t as i64), int(count_points_uniform(k, n, t)));
                }
                assert_eq!(p, ehr_uniform(n - k, n).unwrap());
            }
        }
    }

    #[test]
    fn closed_form_cross_check() {
        // ehr(U_{k,n}, t) = Σ_{j<k} (-1)^j C(n,j) C((k-j)t - j + n - 1, n - 1)
        // as a polynomial identity; each term is a composed binomial polynomial
        for n in 2..=10usize {
            for k in 1..n {
                let mut acc = Polynomial::zero();
                for j in 0..k {
                    let inner = binom_poly(n as i64 - 1 - j as i64, n - 1);
                    // substitute t -> (k-j) t
                    let scaled = Polynomial::from_coeffs(
                        inner
                            .coeffs()
                            .iter()
                            .enumerate()
                            .map(|(i, c)| c * Rational::from_integer(BigInt::from(k - j).pow(i as u32)))
                            .collect(),
                    );
                    let term = scaled.scale(&int(binomial(n as i64, j as i64)));
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                assert_eq!(acc, ehr_uniform(k, n).unwrap(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn newton_path_matches_interpolation() {
        for n in 2..=30usize {
            for k in 1..n {
                let p = ehr_uniform(k, n).unwrap();
                for m in [0, 1, 2, 3, n - 1] {
                    assert_eq!(uniform_coefficient_newton(k, n, m).unwrap(), p.coeff(m));
                }
            }
        }
        for (k, n) in [(3, 100), (9, 100), (50, 100), (2, 77)] {
            let p = ehr_uniform(k, n).unwrap();
            let diffs = forward_differences(&uniform_counts(k, n, n as u64 - 1));
            for m in 0..n {
                assert_eq!(newton_coefficient(&diffs, m), p.coeff(m), "k={k} n={n} m={m}");
            }
        }
    }
}
