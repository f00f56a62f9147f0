//! Rank 2: the largest circuit-hyperplane family has `floor(n/2)` members,
//! and the resulting polynomial
//! `P_n(t) = ehr(U_{2,n}, t) - floor(n/2) ehr(T_{2,n}, t-1)` keeps positive
//! coefficients. The Stirling-number inequalities behind that are checked
//! here exhaustively up to a cutoff.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::minimal::ehr_minimal_shifted;
use super::uniform::ehr_uniform;
use super::EngineError;
use crate::exact::{Polynomial, Rational};

pub fn rank2_poly(n: usize) -> Result<Polynomial, EngineError> {
    if n < 3 {
        return Err(EngineError::InvalidRank { n, k: 2, range: "n >= 3" });
    }
    let half = Rational::from_integer(BigInt::from(n / 2));
    Ok(ehr_uniform(2, n)? - ehr_minimal_shifted(2, n)?.scale(&half))
}

/// Every `(n, m)` where an inequality failed, grouped by family. Empty
/// everywhere means the check passed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Rank2Verification {
    pub n_max: usize,
    /// `[n,m+1](2^m-m-1) + (n-1)[n-1,m+1] >= (n/2)([n-2,m] + (n-2)[n-2,m-1])`,
    /// `n >= 4`, `2 <= m <= n-1`. At `m = 2` this is the last inequality of
    /// the family, checked for every `n >= 4`.
    pub target: Vec<(usize, usize)>,
    /// `[n,m-1] <= [n,m+1](2^m-m-2)` for `3 <= m <= 12`, `n >= 13`.
    pub reduced: Vec<(usize, usize)>,
    /// For `m >= 13`, `n >= m+1`: the ratio bounds
    /// `[n,j+1]/[n,j] >= 2(1/j - 1/n)` at `j = m, m-1`,
    /// `m^2(m+1)(m-1)/4 <= 2^m-m-2`, and the reduced inequality itself.
    pub ratio_chain: Vec<(usize, usize)>,
    /// `[n,11] <= 4082 [n,13]` for `n >= 13`.
    pub reduced12: Vec<usize>,
}

impl Rank2Verification {
    pub fn passed(&self) -> bool {
        self.target.is_empty()
            && self.reduced.is_empty()
            && self.ratio_chain.is_empty()
            && self.reduced12.is_empty()
    }
}

fn at(row: &[BigInt], m: isize) -> BigInt {
    if m < 0 {
        return BigInt::zero();
    }
    row.get(m as usize).cloned().unwrap_or_else(BigInt::zero)
}

/// Runs every family up to `n_max`, keeping only three Stirling rows alive.
pub fn rank2_inequality_report(n_max: usize) -> Rank2Verification {
    let mut report = Rank2Verification { n_max, ..Default::default() };
    // rows[0] = row n-2, rows[1] = row n-1, rows[2] = row n
    let mut rows: [Vec<BigInt>; 3] = [Vec::new(), Vec::new(), vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[2];
        let mut row = vec![BigInt::zero(); n + 1];
        for m in 1..=n {
            row[m] = &prev[m - 1] + at(prev, m as isize) * (n - 1);
        }
        rows.rotate_left(1);
        rows[2] = row;
        check_row(n, &rows, &mut report);
    }
    report
}

fn check_row(n: usize, rows: &[Vec<BigInt>; 3], report: &mut Rank2Verification) {
    let [r2, r1, r0] = rows;
    let s = |row: &Vec<BigInt>, m: usize| at(row, m as isize);
    let two_pow = |m: usize| BigInt::one() << m;

    if n >= 4 {
        for m in 2..n {
            let ni = BigInt::from(n);
            let lhs = (s(r0, m + 1) * (two_pow(m) - (m + 1)) + s(r1, m + 1) * (n - 1)) * 2;
            let rhs = ni * (s(r2, m) + at(r2, m as isize - 1) * (n - 2));
            if lhs < rhs {
                report.target.push((n, m));
            }
        }
    }

    if n >= 13 {
        for m in 3..=12 {
            if s(r0, m - 1) > s(r0, m + 1) * (two_pow(m) - (m + 2)) {
                report.reduced.push((n, m));
            }
        }
        if s(r0, 11) > s(r0, 13) * 4082 {
            report.reduced12.push(n);
        }
    }

    for m in 13..n {
        // [n,j+1] m n >= 2 (n - j) [n,j]
        let ratio_ok = |j: usize| s(r0, j + 1) * j * n >= s(r0, j) * (2 * (n - j));
        let poly_ok = BigInt::from(m * m * (m + 1) * (m - 1)) <= (two_pow(m) - (m + 2)) * 4;
        let reduced_ok = s(r0, m - 1) <= s(r0, m + 1) * (two_pow(m) - (m + 2));
        if !(ratio_ok(m) && ratio_ok(m - 1) && poly_ok && reduced_ok) {
            report.ratio_chain.push((n, m));
        }
    }
}

/// True iff every inequality family holds up to `n_max`.
pub fn verify_rank2_inequalities(n_max: usize) -> bool {
    rank2_inequality_report(n_max).passed()
}
