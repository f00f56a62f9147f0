//! Constant-weight codes with minimum distance 4, and bounds on the number
//! of circuit-hyperplanes.
//!
//! A family of `k`-subsets is the circuit-hyperplane set of a sparse paving
//! matroid iff it is a stable set of the Johnson graph J(n, k), iff the
//! incidence words form a weight-`k` binary code with minimum distance 4.
//! The Graham–Sloane classes `C_i = {w : Σ (i-1) w_i ≡ i (mod n)}` partition
//! all weight-`k` words into `n` such codes.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::exact::binomial;
use crate::matroid::{validate, MatroidError, SparsePavingMatroid, SubsetMask, ValidateOptions};

/// Default cap on the number of words [`gs_classes`] will enumerate.
pub const DEFAULT_WORD_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodeError {
    #[error("class enumeration too large: C({n},{k}) = {words} words exceeds budget {budget}")]
    EnumerationTooLarge { n: usize, k: usize, words: BigInt, budget: u64 },
    #[error("invalid length/weight: n = {n}, k = {k} (need 0 <= k <= n, 1 <= n <= 64)")]
    InvalidParameters { n: usize, k: usize },
}

/// Weight-`k` words of length `n` in increasing mask order (Gosper's hack).
pub fn weight_k_words(n: usize, k: usize) -> impl Iterator<Item = SubsetMask> {
    let limit: u128 = 1u128 << n;
    let mut next: Option<u128> = if k <= n { Some((1u128 << k) - 1) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(SubsetMask::from_bits(cur as u64))
    })
}

/// `Σ_{i in word} (i - 1) mod n`.
pub fn gs_residue(word: SubsetMask, n: usize) -> usize {
    word.elements().iter().map(|&i| i - 1).sum::<usize>() % n
}

fn check_enumerable(n: usize, k: usize, budget: u64) -> Result<(), CodeError> {
    if n == 0 || n > 64 || k > n {
        return Err(CodeError::InvalidParameters { n, k });
    }
    let words = binomial(n as i64, k as i64);
    if words > BigInt::from(budget) {
        return Err(CodeError::EnumerationTooLarge { n, k, words, budget });
    }
    Ok(())
}

/// Sizes `|C_0|, ..., |C_{n-1}|`.
pub fn gs_classes(n: usize, k: usize, budget: u64) -> Result<Vec<u64>, CodeError> {
    check_enumerable(n, k, budget)?;
    let mut sizes = vec![0u64; n];
    for w in weight_k_words(n, k) {
        sizes[gs_residue(w, n)] += 1;
    }
    Ok(sizes)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantWeightCode {
    pub n: usize,
    pub k: usize,
    /// Ascending by mask value.
    pub words: Vec<SubsetMask>,
    /// Graham–Sloane residue the words came from, if any.
    pub class_index: Option<usize>,
}

impl ConstantWeightCode {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Smallest pairwise distance, `None` with fewer than two words.
    pub fn min_distance(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                let d = a.distance(*b);
                best = Some(best.map_or(d, |x| x.min(d)));
            }
        }
        best
    }

    /// The sparse paving matroid with these words as circuit-hyperplanes,
    /// running the full pairwise validation.
    pub fn to_matroid(&self) -> Result<SparsePavingMatroid, MatroidError> {
        validate(self.n, self.k, self.words.iter().copied(), ValidateOptions::default())
    }

    /// Same, skipping the O(λ²) pair check. Graham–Sloane classes satisfy
    /// it by construction.
    pub fn to_matroid_trusted(&self) -> Result<SparsePavingMatroid, MatroidError> {
        validate(self.n, self.k, self.words.iter().copied(), ValidateOptions { check_pairs: false })
    }
}

/// Index of the largest class, smallest residue on ties.
pub fn best_class_index(sizes: &[u64]) -> usize {
    let max = sizes.iter().copied().max().unwrap_or(0);
    sizes.iter().position(|&s| s == max).unwrap_or(0)
}

/// All words of a largest Graham–Sloane class.
pub fn gs_best_class(n: usize, k: usize, budget: u64) -> Result<ConstantWeightCode, CodeError> {
    let sizes = gs_classes(n, k, budget)?;
    let chosen = best_class_index(&sizes);
    Ok(gs_class(n, k, chosen))
}

/// Words of class `C_index`, in increasing mask order.
pub fn gs_class(n: usize, k: usize, index: usize) -> ConstantWeightCode {
    let words = weight_k_words(n, k).filter(|&w| gs_residue(w, n) == index).collect();
    ConstantWeightCode { n, k, words, class_index: Some(index) }
}

/// `floor(C(n,k) / n)`, always achieved by [`gs_best_class`].
pub fn gs_lower_bound(n: i64, k: i64) -> BigInt {
    if n <= 0 {
        return BigInt::from(0);
    }
    binomial(n, k) / BigInt::from(n)
}

/// `floor(C(n,k) * min(1/(k+1), 1/(n-k+1)))`: no sparse paving matroid has
/// more circuit-hyperplanes.
pub fn max_ch_upper_bound(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::from(0);
    }
    binomial(n, k) / BigInt::from((k + 1).max(n - k + 1))
}

/// `{1,2}, {3,4}, ...`: a largest circuit-hyperplane family in rank 2.
pub fn rank2_maximum_family(n: usize) -> Vec<SubsetMask> {
    (0..n / 2)
        .map(|i| SubsetMask::from_elements(&[2 * i + 1, 2 * i + 2]).unwrap())
        .collect()
}

/// JSON summary of a Graham–Sloane run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub n: usize,
    pub k: usize,
    pub class_sizes: Vec<u64>,
    pub chosen_index: usize,
    pub lower_bound: u64,
    pub upper_bound: u64,
}

impl ClassReport {
    pub fn new(n: usize, k: usize, class_sizes: Vec<u64>) -> Self {
        let chosen_index = best_class_index(&class_sizes);
        // enumerable instances have C(n,k) within the u64 budget
        let lower_bound = gs_lower_bound(n as i64, k as i64).to_u64().unwrap_or(u64::MAX);
        let upper_bound = max_ch_upper_bound(n as i64, k as i64).to_u64().unwrap_or(u64::MAX);
        ClassReport { n, k, class_sizes, chosen_index, lower_bound, upper_bound }
    }
}
