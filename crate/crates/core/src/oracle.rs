//! Brute-force lattice-point counts of dilated basis polytopes.
//!
//! Nothing here uses the Ehrhart formulas; every count comes from walking
//! the box `[0, t]^n` coordinate by coordinate and testing the inequality
//! description of the polytope. The engine is certified against it.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::codes::weight_k_words;
use crate::exact::{interpolate, Polynomial, Rational};
use crate::matroid::{LinearConstraint, MatroidError, SparsePavingMatroid, SubsetMask};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n: usize,
    pub max_t: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_n: 10, max_t: 7 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("oracle instance too large: n = {n}, t = {t} (limits n <= {max_n}, t <= {max_t})")]
    TooLarge { n: usize, t: u64, max_n: usize, max_t: u64 },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Closed,
    Interior,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilationCount {
    pub t: u64,
    pub boundary_inclusive_count: BigInt,
    pub interior_count: BigInt,
}

struct Walk<'a> {
    n: usize,
    k: u64,
    t: u64,
    mode: Mode,
    chs: &'a [SubsetMask],
    facets: &'a [LinearConstraint],
    x: Vec<u64>,
    ch_sums: Vec<u64>,
    found: u64,
}

impl Walk<'_> {
    fn coordinate_range(&self) -> (u64, u64) {
        match self.mode {
            Mode::Closed => (0, self.t),
            Mode::Interior => (1, self.t.saturating_sub(1)),
        }
    }

    fn ch_cap(&self) -> u64 {
        match self.mode {
            Mode::Closed => self.t * (self.k - 1),
            Mode::Interior => (self.t * (self.k - 1)).saturating_sub(1),
        }
    }

    fn leaf_is_member(&self) -> bool {
        match self.mode {
            Mode::Closed => self.facets.iter().all(|f| f.holds_dilated(&self.x, self.t)),
            Mode::Interior => {
                // strict in every inequality, equality kept
                self.facets.iter().all(|f| match f.relation {
                    crate::matroid::Relation::Equal => f.holds_dilated(&self.x, self.t),
                    _ => {
                        let lhs: u64 = self
                            .x
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| f.support.contains(i + 1))
                            .map(|(_, v)| v)
                            .sum();
                        let rhs = f.rhs * self.t;
                        match f.relation {
                            crate::matroid::Relation::AtMost => lhs < rhs,
                            _ => lhs > rhs,
                        }
                    }
                })
            }
        }
    }

    fn descend(&mut self, i: usize, sum: u64) {
        let target = self.k * self.t;
        if i == self.n {
            if sum == target && self.leaf_is_member() {
                self.found += 1;
            }
            return;
        }
        let (lo, hi) = self.coordinate_range();
        if lo > hi {
            return;
        }
        let left_after = (self.n - i - 1) as u64;
        let cap = self.ch_cap();
        for v in lo..=hi {
            let s = sum + v;
            if s > target {
                break;
            }
            // the remaining coordinates must be able to close the gap
            if s + left_after * hi < target || s + left_after * lo > target {
                continue;
            }
            let element = i + 1;
            let mut ok = true;
            for (j, h) in self.chs.iter().enumerate() {
                if h.contains(element) {
                    self.ch_sums[j] += v;
                    if self.ch_sums[j] > cap {
                        ok = false;
                    }
                }
            }
            if ok {
                self.x[i] = v;
                self.descend(i + 1, s);
            }
            for (j, h) in self.chs.iter().enumerate() {
                if h.contains(element) {
                    self.ch_sums[j] -= v;
                }
            }
        }
        self.x[i] = 0;
    }
}

fn run(m: &SparsePavingMatroid, t: u64, mode: Mode, budget: OracleBudget) -> Result<BigInt, OracleError> {
    let n = m.n();
    if n > budget.max_n || t > budget.max_t {
        return Err(OracleError::TooLarge { n, t, max_n: budget.max_n, max_t: budget.max_t });
    }
    let facets = m.facet_description()?;
    let mut walk = Walk {
        n,
        k: m.rank() as u64,
        t,
        mode,
        chs: m.circuit_hyperplanes(),
        facets: &facets,
        x: vec![0; n],
        ch_sums: vec![0; m.lambda()],
        found: 0,
    };
    walk.descend(0, 0);
    Ok(BigInt::from(walk.found))
}

/// `#(tP(M) ∩ Z^n)`.
pub fn oracle_count(m: &SparsePavingMatroid, t: u64) -> Result<BigInt, OracleError> {
    oracle_count_with(m, t, OracleBudget::default())
}

pub fn oracle_count_with(m: &SparsePavingMatroid, t: u64, budget: OracleBudget) -> Result<BigInt, OracleError> {
    run(m, t, Mode::Closed, budget)
}

/// Lattice points of `tP(M)` satisfying every inequality strictly (the
/// equation `Σ x_i = kt` still holds). This is the relative interior when
/// `P(M)` has dimension `n - 1`.
pub fn oracle_interior_count(m: &SparsePavingMatroid, t: u64) -> Result<BigInt, OracleError> {
    oracle_interior_count_with(m, t, OracleBudget::default())
}

pub fn oracle_interior_count_with(
    m: &SparsePavingMatroid,
    t: u64,
    budget: OracleBudget,
) -> Result<BigInt, OracleError> {
    run(m, t, Mode::Interior, budget)
}

/// Both counts for `t = 0..=t_max`, computed in parallel.
pub fn dilation_counts(m: &SparsePavingMatroid, t_max: u64, budget: OracleBudget) -> Result<Vec<DilationCount>, OracleError> {
    (0..=t_max)
        .into_par_iter()
        .map(|t| {
            Ok(DilationCount {
                t,
                boundary_inclusive_count: oracle_count_with(m, t, budget)?,
                interior_count: oracle_interior_count_with(m, t, budget)?,
            })
        })
        .collect()
}

/// Interpolates [`oracle_count`] at `t = 0..n-1`.
pub fn oracle_ehrhart(m: &SparsePavingMatroid) -> Result<Polynomial, OracleError> {
    oracle_ehrhart_with(m, OracleBudget::default())
}

pub fn oracle_ehrhart_with(m: &SparsePavingMatroid, budget: OracleBudget) -> Result<Polynomial, OracleError> {
    let t_max = m.n() as u64 - 1;
    let counts: Vec<BigInt> = (0..=t_max)
        .into_par_iter()
        .map(|t| oracle_count_with(m, t, budget))
        .collect::<Result<_, _>>()?;
    let points: Vec<(Rational, Rational)> = counts
        .into_iter()
        .enumerate()
        .map(|(t, c)| (Rational::from_integer(t.into()), Rational::from_integer(c)))
        .collect();
    Ok(interpolate(&points).expect("abscissae 0..n-1 are distinct"))
}

/// Membership in `tP(M)` through the rank function:
/// `Σ x_i = t k` and `x(A) <= t rank(A)` for every `A`.
pub fn rank_description_holds(m: &SparsePavingMatroid, x: &[u64], t: u64) -> bool {
    let n = m.n();
    if x.len() != n || x.iter().sum::<u64>() != t * m.rank() as u64 {
        return false;
    }
    (0u64..1 << n).all(|bits| {
        let a = SubsetMask::from_bits(bits);
        let load: u64 = (0..n).filter(|&i| bits >> i & 1 == 1).map(|i| x[i]).sum();
        load <= t * m.rank_of(a) as u64
    })
}

/// Every sparse paving matroid on `n <= 7` elements of rank `k` with at
/// most `lambda_max` circuit-hyperplanes, in lexicographic order of the
/// sorted circuit-hyperplane lists (the uniform matroid first).
pub fn enumerate_small_matroids(n: usize, k: usize, lambda_max: usize) -> Vec<SparsePavingMatroid> {
    assert!((1..=7).contains(&n) && k <= n, "enumeration is for 1 <= n <= 7, k <= n");
    let words: Vec<SubsetMask> = weight_k_words(n, k).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        n: usize,
        k: usize,
        words: &[SubsetMask],
        start: usize,
        lambda_max: usize,
        chosen: &mut Vec<SubsetMask>,
        out: &mut Vec<SparsePavingMatroid>,
    ) {
        out.push(SparsePavingMatroid::new(n, k, chosen.iter().copied()).expect("stable by construction"));
        if chosen.len() == lambda_max {
            return;
        }
        for (i, &w) in words.iter().enumerate().skip(start) {
            if chosen.iter().all(|&c| c.distance(w) >= 4) {
                chosen.push(w);
                rec(n, k, words, i + 1, lambda_max, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(n, k, &words, 0, lambda_max, &mut chosen, &mut out);
    out
}
