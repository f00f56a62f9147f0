//! Binomial coefficients, unsigned Stirling numbers of the first kind and
//! harmonic numbers, all exact.
//!
//! Small rows of Pascal's triangle and of the Stirling triangle are memoized
//! in process-wide tables that grow on demand. Rows past [`CACHED_ROWS`] are
//! computed on the fly and not retained.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;

/// Largest row index kept in the memo tables.
pub const CACHED_ROWS: usize = 256;

type Triangle = RwLock<Vec<Vec<BigInt>>>;

fn pascal() -> &'static Triangle {
    static TABLE: OnceLock<Triangle> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![vec![BigInt::one()]]))
}

fn stirling() -> &'static Triangle {
    static TABLE: OnceLock<Triangle> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![vec![BigInt::one()]]))
}

/// Reads entry `(n, m)` of a memoized triangle, extending it with `next_row`
/// up to row `n` if needed. Entries with `m > n` are zero.
fn triangle_entry(
    table: &Triangle,
    n: usize,
    m: usize,
    next_row: impl Fn(usize, &[BigInt]) -> Vec<BigInt>,
) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    {
        let rows = table.read().expect("memo table poisoned");
        if let Some(row) = rows.get(n) {
            return row[m].clone();
        }
    }
    let mut rows = table.write().expect("memo table poisoned");
    while rows.len() <= n {
        let i = rows.len();
        let row = next_row(i, &rows[i - 1]);
        rows.push(row);
    }
    rows[n][m].clone()
}

fn pascal_row(n: usize, prev: &[BigInt]) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigInt::one());
    for j in 1..n {
        row.push(&prev[j - 1] + &prev[j]);
    }
    row.push(BigInt::one());
    row
}

fn stirling_row(n: usize, prev: &[BigInt]) -> Vec<BigInt> {
    // [n, m] = (n-1)[n-1, m] + [n-1, m-1]
    let mut row = vec![BigInt::zero(); n + 1];
    let factor = BigInt::from(n - 1);
    for m in 1..=n {
        let mut v = prev[m - 1].clone();
        if m < n {
            v += &factor * &prev[m];
        }
        row[m] = v;
    }
    row
}

/// C(n, k), zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let k = k.min(n - k);
    if n <= CACHED_ROWS {
        return triangle_entry(pascal(), n, k, pascal_row);
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// C(n, k) for possibly negative `n`, as the polynomial `n(n-1)...(n-k+1)/k!`
/// evaluated at `n`. Zero for `k < 0`.
pub fn binomial_generalized(n: &BigInt, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - BigInt::from(i);
    }
    acc / factorial(k)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Unsigned Stirling number of the first kind: permutations of `n` elements
/// with exactly `m` cycles.
pub fn stirling1_unsigned(n: usize, m: usize) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    if n <= CACHED_ROWS {
        return triangle_entry(stirling(), n, m, stirling_row);
    }
    stirling1_column(n, m).swap_remove(n)
}

/// `[j, m]` for `j = 0..=n_max`, by the row recurrence truncated to columns
/// `0..=m`. O(n_max * m) big-integer operations and no memoization.
pub fn stirling1_column(n_max: usize, m: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut row = vec![BigInt::zero(); m + 1];
    row[0] = BigInt::one();
    out.push(row[m].clone());
    for j in 1..=n_max {
        let factor = BigInt::from(j - 1);
        for c in (0..=m).rev() {
            let mut v = &row[c] * &factor;
            if c > 0 {
                v += &row[c - 1];
            }
            row[c] = v;
        }
        out.push(row[m].clone());
    }
    out
}

/// Sum of `1/i^power` for `i in [lo, hi]`, as an unreduced fraction by
/// binary splitting.
fn inverse_power_sum(lo: usize, hi: usize, power: u32) -> (BigInt, BigInt) {
    if lo == hi {
        return (BigInt::one(), BigInt::from(lo).pow(power));
    }
    let mid = lo + (hi - lo) / 2;
    let (p1, q1) = inverse_power_sum(lo, mid, power);
    let (p2, q2) = inverse_power_sum(mid + 1, hi, power);
    (&p1 * &q2 + &p2 * &q1, q1 * q2)
}

fn harmonic_power(n: usize, power: u32) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    let (p, q) = inverse_power_sum(1, n, power);
    let g = p.gcd(&q);
    Rational::new_raw(p / &g, q / g)
}

/// H_n = 1 + 1/2 + ... + 1/n; H_0 = 0.
pub fn harmonic(n: usize) -> Rational {
    harmonic_power(n, 1)
}

/// H_n^(2) = 1 + 1/4 + ... + 1/n^2; zero for n = 0.
pub fn harmonic2(n: usize) -> Rational {
    harmonic_power(n, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;
    use proptest::prelude::*;

    /// Cycle count of every permutation of `0..n`, by brute force.
    fn cycle_histogram(n: usize) -> Vec<u64> {
        fn cycles(p: &[usize]) -> usize {
            let mut seen = vec![false; p.len()];
            let mut c = 0;
            for s in 0..p.len() {
                if !seen[s] {
                    c += 1;
                    let mut i = s;
                    while !seen[i] {
                        seen[i] = true;
                        i = p[i];
                    }
                }
            }
            c
        }
        fn rec(p: &mut Vec<usize>, used: &mut Vec<bool>, hist: &mut Vec<u64>) {
            if p.len() == used.len() {
                hist[cycles(p)] += 1;
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    p.push(v);
                    rec(p, used, hist);
                    p.pop();
                    used[v] = false;
                }
            }
        }
        let mut hist = vec![0; n + 1];
        rec(&mut Vec::new(), &mut vec![false; n], &mut hist);
        hist
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(20, 9), BigInt::from(167960));
        assert_eq!(binomial(7, 0), BigInt::from(1));
        assert_eq!(binomial(5, 7), BigInt::from(0));
        assert_eq!(binomial(-3, 1), BigInt::from(0));
        assert_eq!(binomial(4, -1), BigInt::from(0));
        // past the cache boundary
        assert_eq!(binomial(10439, 3), BigInt::from(10439u64 * 10438 * 10437 / 6));
        assert_eq!(binomial(300, 298), BigInt::from(300 * 299 / 2));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=30i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial_generalized(&BigInt::from(-2), 2), BigInt::from(3));
        assert_eq!(binomial_generalized(&BigInt::from(5), 2), BigInt::from(10));
        assert_eq!(binomial_generalized(&BigInt::from(2), 5), BigInt::from(0));
    }

    #[test]
    fn stirling_against_permutation_count() {
        for n in 0..=7 {
            let hist = cycle_histogram(n);
            for (m, &count) in hist.iter().enumerate() {
                assert_eq!(stirling1_unsigned(n, m), BigInt::from(count), "[{n}, {m}]");
            }
        }
        assert_eq!(stirling1_unsigned(3, 2), BigInt::from(3));
        assert_eq!(stirling1_unsigned(4, 1), BigInt::from(6));
        assert_eq!(stirling1_unsigned(9, 9), BigInt::from(1));
        assert_eq!(stirling1_unsigned(2, 5), BigInt::from(0));
    }

    #[test]
    fn stirling_recurrence_and_row_sums() {
        for n in 1..=25 {
            for m in 1..=n {
                let lhs = stirling1_unsigned(n, m);
                let rhs = BigInt::from(n - 1) * stirling1_unsigned(n - 1, m)
                    + stirling1_unsigned(n - 1, m - 1);
                assert_eq!(lhs, rhs);
            }
            let row: BigInt = (0..=n).map(|m| stirling1_unsigned(n, m)).sum();
            assert_eq!(row, factorial(n));
        }
    }

    #[test]
    fn stirling_log_concavity_ratio() {
        for n in 3..=60usize {
            for m in 2..n {
                let ratio = Rational::new(stirling1_unsigned(n, m + 1), stirling1_unsigned(n, m));
                let bound = rat(2, 1) * (rat(1, m as i64) - rat(1, n as i64));
                assert!(ratio >= bound, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn stirling_column_matches_table_and_uncached_rows() {
        let col = stirling1_column(40, 3);
        for (j, v) in col.iter().enumerate() {
            assert_eq!(*v, stirling1_unsigned(j, 3));
        }
        // [n, 2] = (n-1)! H_{n-1}
        let n = CACHED_ROWS + 50;
        let expected = Rational::from_integer(factorial(n - 1)) * harmonic(n - 1);
        assert_eq!(Rational::from_integer(stirling1_unsigned(n, 2)), expected);
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(3), rat(11, 6));
        assert_eq!(harmonic(1), rat(1, 1));
        assert_eq!(harmonic(0), rat(0, 1));
        assert_eq!(harmonic2(2), rat(5, 4));
        assert_eq!(harmonic2(0), rat(0, 1));
    }

    proptest! {
        #[test]
        fn harmonic_matches_direct_sum(n in 0usize..200) {
            let direct: Rational = (1..=n).map(|i| rat(1, i as i64)).sum();
            prop_assert_eq!(harmonic(n), direct);
            let direct2: Rational = (1..=n).map(|i| rat(1, (i * i) as i64)).sum();
            prop_assert_eq!(harmonic2(n), direct2);
        }
    }
}
