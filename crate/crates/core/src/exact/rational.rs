//! Exact rationals and their text form.
//!
//! [`Rational`] is `num_rational::BigRational`, which is always stored in
//! lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub type Rational = num_rational::BigRational;

/// Builds `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

/// Formats `r` as `p/q`. With `explicit_one == false` an integral value is
/// printed without the `/1`.
pub fn format_fraction(r: &Rational, explicit_one: bool) -> String {
    if !explicit_one && r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_fraction(s: &str) -> Result<Rational, FractionParseError> {
    let s = s.trim();
    let bad = || FractionParseError(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed fraction {0:?}")]
pub struct FractionParseError(pub String);

/// True iff `r` is an integer and not negative.
pub fn is_nonnegative_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}
