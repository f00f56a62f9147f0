//! The minimal matroid `T_{k,n}`: its Ehrhart polynomial and the shifted
//! polynomial `ehr(T_{k,n}, t - 1)` that one circuit-hyperplane relaxation
//! adds.

use num_traits::{One, Signed, Zero};

use super::EngineError;
use crate::exact::{binom_poly, binomial, factorial, stirling1_unsigned, Polynomial, Rational};

fn check_rank(k: usize, n: usize) -> Result<(), EngineError> {
    if k == 0 || k >= n {
        return Err(EngineError::InvalidRank { n, k, range: "1..=n-1" });
    }
    Ok(())
}

/// `ehr(T_{k,n}, t) = C(t+n-k, n-k) · Σ_{j<k} C(n-k-1+j, j) C(t+j, j) / C(n-1, k-1)`.
pub fn ehr_minimal(k: usize, n: usize) -> Result<Polynomial, EngineError> {
    check_rank(k, n)?;
    let (ki, ni) = (k as i64, n as i64);
    let mut sum = Polynomial::zero();
    for j in 0..k {
        let weight = Rational::from_integer(binomial(ni - ki - 1 + j as i64, j as i64));
        sum = &sum + &binom_poly(j as i64, j).scale(&weight);
    }
    let norm = Rational::from_integer(binomial(ni - 1, ki - 1)).recip();
    Ok((&binom_poly(ni - ki, n - k) * &sum).scale(&norm))
}

/// `ehr(T_{k,n}, t - 1)`. Every coefficient of degree at least 1 is strictly
/// positive and the constant term is 0.
pub fn ehr_minimal_shifted(k: usize, n: usize) -> Result<Polynomial, EngineError> {
    let p = ehr_minimal(k, n)?.shift(&-Rational::one());
    assert!(
        p.coeffs().first().is_some_and(|c| !c.is_negative())
            && p.coeffs().iter().skip(1).all(Signed::is_positive),
        "ehr(T_{{{k},{n}}}, t-1) lost positivity: {p}"
    );
    Ok(p)
}

/// `[t^2] ehr(T_{k,n}, t - 1)` in closed form:
/// `([n-k, 2]/(n-k)! + Σ_{j=1}^{k-1} C(n-k-1+j, j)/(j (n-k))) / C(n-1, k-1)`.
pub fn quad_coeff_minimal_shifted(k: usize, n: usize) -> Result<Rational, EngineError> {
    if k < 2 || k + 2 > n {
        return Err(EngineError::InvalidRank { n, k, range: "2..=n-2" });
    }
    let r = n - k;
    let mut sum = Rational::zero();
    for j in 1..k {
        sum += Rational::new(binomial((r - 1 + j) as i64, j as i64), j.into());
    }
    let inner = Rational::new(stirling1_unsigned(r, 2), factorial(r)) + sum / Rational::from_integer(r.into());
    Ok(inner / Rational::from_integer(binomial(n as i64 - 1, k as i64 - 1)))
}

/// `[t^m] ehr(T_{2,n}, t - 1) = ([n-2, m] + (n-2)[n-2, m-1]) / (n-1)!`.
pub fn coeff_minimal_shifted_rank2(n: usize, m: usize) -> Result<Rational, EngineError> {
    if n < 3 {
        return Err(EngineError::InvalidRank { n, k: 2, range: "n >= 3" });
    }
    let mut numer = stirling1_unsigned(n - 2, m);
    if m >= 1 {
        numer += stirling1_unsigned(n - 2, m - 1) * (n - 2);
    }
    Ok(Rational::new(numer, factorial(n - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::uniform::ehr_uniform;
    use crate::exact::{int, rat};

    #[test]
    fn minimal_examples() {
        for n in 2..10usize {
            assert_eq!(ehr_minimal(1, n).unwrap(), binom_poly(n as i64 - 1, n - 1));
            assert_eq!(ehr_minimal_shifted(1, n).unwrap(), binom_poly(n as i64 - 2, n - 1));
        }
        assert_eq!(ehr_minimal(2, 3).unwrap(), binom_poly(2, 2));
        assert_eq!(ehr_minimal(2, 3).unwrap(), ehr_uniform(2, 3).unwrap());
        assert!(ehr_minimal(0, 3).is_err());
        assert!(ehr_minimal(3, 3).is_err());
    }

    #[test]
    fn minimal_is_self_dual_and_normalized() {
        for n in 2..=12usize {
            for k in 1..n {
                let p = ehr_minimal(k, n).unwrap();
                assert_eq!(p, ehr_minimal(n - k, n).unwrap(), "k={k} n={n}");
                assert_eq!(p.degree(), Some(n - 1));
                assert_eq!(p.eval_int(0), int(1));
                let s = ehr_minimal_shifted(k, n).unwrap();
                // shifted value at 1 is the unshifted value at 0
                assert_eq!(s.eval_int(1), int(1));
                assert_eq!(s.coeff(0), int(0));
            }
        }
    }

    #[test]
    fn shifted_has_positive_coefficients_past_the_constant() {
        for n in 2..=24usize {
            for k in 1..n {
                let s = ehr_minimal_shifted(k, n).unwrap();
                assert!((1..n).all(|i| s.coeff(i) > int(0)), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn shifted_example() {
        // (t+1)(t+2)/2 shifted by -1 is t(t+1)/2
        assert_eq!(
            ehr_minimal_shifted(2, 3).unwrap(),
            Polynomial::from_coeffs(vec![int(0), rat(1, 2), rat(1, 2)])
        );
    }

    #[test]
    fn quadratic_closed_form_matches_extraction() {
        for n in 4..=30usize {
            for k in 2..=n - 2 {
                let closed = quad_coeff_minimal_shifted(k, n).unwrap();
                assert_eq!(closed, ehr_minimal_shifted(k, n).unwrap().coeff(2), "k={k} n={n}");
                assert!(closed >= rat(1, (k * (n - 1)) as i64));
            }
        }
        assert_eq!(
            quad_coeff_minimal_shifted(9, 20).unwrap(),
            ehr_minimal_shifted(9, 20).unwrap().coeff(2)
        );
        assert!(quad_coeff_minimal_shifted(1, 5).is_err());
        assert!(quad_coeff_minimal_shifted(4, 5).is_err());
    }

    #[test]
    fn rank2_closed_form_matches_extraction() {
        for n in 3..=25usize {
            let p = ehr_minimal_shifted(2, n).unwrap();
            for m in 0..n {
                assert_eq!(coeff_minimal_shifted_rank2(n, m).unwrap(), p.coeff(m), "n={n} m={m}");
            }
        }
        assert_eq!(coeff_minimal_shifted_rank2(3, 0).unwrap(), int(0));
        let n = 6;
        assert_eq!(
            coeff_minimal_shifted_rank2(n, n - 1).unwrap(),
            rat((n - 2) as i64, 120)
        );
        assert!(coeff_minimal_shifted_rank2(2, 0).is_err());
    }
}
