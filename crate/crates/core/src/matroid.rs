//! Sparse paving matroids stored by their circuit-hyperplanes.
//!
//! Ground sets are `{1, ..., n}` with `n <= 64`; element `i` lives in bit
//! `i - 1` of a [`SubsetMask`]. Every `k`-subset is either a basis or a
//! circuit-hyperplane, so the whole matroid is `(n, k, Λ)`.

use std::fmt;

use num_bigint::BigInt;

use crate::codes::max_ch_upper_bound;
use crate::exact::binomial;

pub const MAX_GROUND_SET: usize = 64;

/// A subset of `{1, ..., 64}`; element `i` is bit `i - 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND_SET);
        if n == 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    /// From 1-based elements. `None` if an element is outside `1..=64`.
    pub fn from_elements(elements: &[usize]) -> Option<Self> {
        let mut bits = 0u64;
        for &e in elements {
            if !(1..=MAX_GROUND_SET).contains(&e) {
                return None;
            }
            bits |= 1 << (e - 1);
        }
        Some(SubsetMask(bits))
    }

    /// 1-based elements in increasing order.
    pub fn elements(self) -> Vec<usize> {
        (0..64).filter(|i| self.0 >> i & 1 == 1).map(|i| i + 1).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, element: usize) -> bool {
        (1..=64).contains(&element) && self.0 >> (element - 1) & 1 == 1
    }

    pub fn is_within(self, n: usize) -> bool {
        self.0 & !SubsetMask::full(n).0 == 0
    }

    pub fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    pub fn intersection(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub fn union(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    /// Hamming distance of the incidence words.
    pub fn distance(self, other: SubsetMask) -> usize {
        (self.0 ^ other.0).count_ones() as usize
    }

    /// Word of length `n`, position 1 first: `{1, 2}` in `n = 4` is `1100`.
    pub fn to_word(self, n: usize) -> String {
        (1..=n).map(|i| if self.contains(i) { '1' } else { '0' }).collect()
    }

    pub fn from_word(word: &str) -> Option<Self> {
        if word.len() > MAX_GROUND_SET {
            return None;
        }
        let mut bits = 0u64;
        for (i, ch) in word.chars().enumerate() {
            match ch {
                '1' => bits |= 1 << i,
                '0' => {}
                _ => return None,
            }
        }
        Some(SubsetMask(bits))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatroidError {
    #[error("ground set size {0} outside 1..=64")]
    GroundSetSize(usize),
    #[error("rank {k} exceeds ground set size {n}")]
    RankTooLarge { n: usize, k: usize },
    #[error("{mask} is not a k-subset of {{1..{n}}} (k = {k})")]
    NotKSubset { mask: SubsetMask, n: usize, k: usize },
    #[error("{0} listed twice")]
    Duplicate(SubsetMask),
    #[error("{a} and {b} are adjacent in Johnson graph J(n,k) (distance 2)")]
    Adjacent { a: SubsetMask, b: SubsetMask },
    #[error("{lambda} circuit-hyperplanes exceeds circuit-hyperplane bound {bound}")]
    ExceedsBound { lambda: usize, bound: BigInt },
    #[error("cannot relax a basis: {0} is not a circuit-hyperplane")]
    NotCircuitHyperplane(SubsetMask),
    #[error("degenerate polytope (a point): rank {k} on {n} elements")]
    DegeneratePolytope { n: usize, k: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidateOptions {
    /// Run the O(λ²) pairwise distance check.
    pub check_pairs: bool,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        ValidateOptions { check_pairs: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePavingMatroid {
    n: usize,
    k: usize,
    circuit_hyperplanes: Vec<SubsetMask>,
}

/// Checks `(n, k, chs)` and returns the matroid with `chs` sorted.
pub fn validate(
    n: usize,
    k: usize,
    chs: impl IntoIterator<Item = SubsetMask>,
    options: ValidateOptions,
) -> Result<SparsePavingMatroid, MatroidError> {
    if n == 0 || n > MAX_GROUND_SET {
        return Err(MatroidError::GroundSetSize(n));
    }
    if k > n {
        return Err(MatroidError::RankTooLarge { n, k });
    }
    let mut chs: Vec<SubsetMask> = chs.into_iter().collect();
    for &h in &chs {
        if h.len() != k || !h.is_within(n) {
            return Err(MatroidError::NotKSubset { mask: h, n, k });
        }
    }
    chs.sort_unstable();
    if let Some(w) = chs.windows(2).find(|w| w[0] == w[1]) {
        return Err(MatroidError::Duplicate(w[0]));
    }
    let bound = max_ch_upper_bound(n as i64, k as i64);
    if BigInt::from(chs.len()) > bound {
        return Err(MatroidError::ExceedsBound { lambda: chs.len(), bound });
    }
    if options.check_pairs {
        for (i, &a) in chs.iter().enumerate() {
            if let Some(&b) = chs[i + 1..].iter().find(|&&b| a.distance(b) < 4) {
                return Err(MatroidError::Adjacent { a, b });
            }
        }
    }
    Ok(SparsePavingMatroid { n, k, circuit_hyperplanes: chs })
}

impl SparsePavingMatroid {
    pub fn new(
        n: usize,
        k: usize,
        chs: impl IntoIterator<Item = SubsetMask>,
    ) -> Result<Self, MatroidError> {
        validate(n, k, chs, ValidateOptions::default())
    }

    /// `U_{k,n}`.
    pub fn uniform(n: usize, k: usize) -> Result<Self, MatroidError> {
        Self::new(n, k, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    /// Number of circuit-hyperplanes (λ).
    pub fn lambda(&self) -> usize {
        self.circuit_hyperplanes.len()
    }

    /// Sorted ascending by mask value.
    pub fn circuit_hyperplanes(&self) -> &[SubsetMask] {
        &self.circuit_hyperplanes
    }

    pub fn is_circuit_hyperplane(&self, a: SubsetMask) -> bool {
        self.circuit_hyperplanes.binary_search(&a).is_ok()
    }

    pub fn is_basis(&self, a: SubsetMask) -> bool {
        a.len() == self.k && a.is_within(self.n) && !self.is_circuit_hyperplane(a)
    }

    /// Complements every circuit-hyperplane; rank becomes `n - k`.
    pub fn dual(&self) -> Self {
        let mut chs: Vec<SubsetMask> = self
            .circuit_hyperplanes
            .iter()
            .map(|h| h.complement(self.n))
            .collect();
        chs.sort_unstable();
        SparsePavingMatroid { n: self.n, k: self.n - self.k, circuit_hyperplanes: chs }
    }

    /// Declares `h` a basis.
    pub fn relax(&self, h: SubsetMask) -> Result<Self, MatroidError> {
        let pos = self
            .circuit_hyperplanes
            .binary_search(&h)
            .map_err(|_| MatroidError::NotCircuitHyperplane(h))?;
        let mut chs = self.circuit_hyperplanes.clone();
        chs.remove(pos);
        Ok(SparsePavingMatroid { n: self.n, k: self.k, circuit_hyperplanes: chs })
    }

    /// Rank of `a`: `|a|` below `k`, `k - 1` on a circuit-hyperplane, `k`
    /// otherwise. A `(k+1)`-set contains at most one circuit-hyperplane, so
    /// every set of size above `k` spans.
    pub fn rank_of(&self, a: SubsetMask) -> usize {
        let size = a.intersection(SubsetMask::full(self.n)).len();
        if size < self.k {
            size
        } else if size == self.k && self.is_circuit_hyperplane(a) {
            self.k - 1
        } else {
            self.k
        }
    }

    pub fn bases_count(&self) -> BigInt {
        binomial(self.n as i64, self.k as i64) - BigInt::from(self.lambda())
    }

    /// All bases, ascending. Meant for small ground sets.
    pub fn bases(&self) -> Vec<SubsetMask> {
        crate::codes::weight_k_words(self.n, self.k)
            .filter(|&b| !self.is_circuit_hyperplane(b))
            .collect()
    }

    /// Inequality description of the basis polytope: `Σ x_i = k`,
    /// `0 <= x_i <= 1`, and `Σ_{i in H} x_i <= k - 1` for each
    /// circuit-hyperplane `H`. `2n + 1 + λ` constraints.
    pub fn facet_description(&self) -> Result<Vec<LinearConstraint>, MatroidError> {
        if self.k == 0 || self.k == self.n {
            return Err(MatroidError::DegeneratePolytope { n: self.n, k: self.k });
        }
        let mut out = Vec::with_capacity(2 * self.n + 1 + self.lambda());
        out.push(LinearConstraint {
            support: SubsetMask::full(self.n),
            relation: Relation::Equal,
            rhs: self.k as u64,
        });
        for i in 1..=self.n {
            let support = SubsetMask::from_elements(&[i]).unwrap();
            out.push(LinearConstraint { support, relation: Relation::AtLeast, rhs: 0 });
            out.push(LinearConstraint { support, relation: Relation::AtMost, rhs: 1 });
        }
        for &h in &self.circuit_hyperplanes {
            out.push(LinearConstraint {
                support: h,
                relation: Relation::AtMost,
                rhs: self.k as u64 - 1,
            });
        }
        Ok(out)
    }

    /// Text form: `n k` then one circuit-hyperplane per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.k);
        for h in &self.circuit_hyperplanes {
            let parts: Vec<String> = h.elements().iter().map(usize::to_string).collect();
            s.push_str(&parts.join(" "));
            s.push('\n');
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    AtMost,
    AtLeast,
}

/// `Σ_{i in support} x_i  (relation)  rhs`; every coefficient is 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub support: SubsetMask,
    pub relation: Relation,
    pub rhs: u64,
}

impl LinearConstraint {
    /// Membership of the point `x` (indexed from element 1) in the `t`-th
    /// dilate of this half-space.
    pub fn holds_dilated(&self, x: &[u64], t: u64) -> bool {
        let lhs: u64 = x
            .iter()
            .enumerate()
            .filter(|(i, _)| self.support.contains(i + 1))
            .map(|(_, v)| v)
            .sum();
        let rhs = self.rhs * t;
        match self.relation {
            Relation::Equal => lhs == rhs,
            Relation::AtMost => lhs <= rhs,
            Relation::AtLeast => lhs >= rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Parses the `n k` + one-subset-per-line format. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_matroid_text(text: &str) -> Result<SparsePavingMatroid, ParseError> {
    let err = |line: usize, column: usize, message: String| ParseError { line, column, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| err(1, 1, "missing \"n k\" header".into()))?;
    let fields = tokens(header);
    if fields.len() != 2 {
        return Err(err(hline, 1, format!("expected \"n k\", found {} fields", fields.len())));
    }
    let parse_usize = |(col, tok): (usize, &str), line: usize| {
        tok.parse::<usize>()
            .map_err(|_| err(line, col, format!("expected a nonnegative integer, found {tok:?}")))
    };
    let n = parse_usize(fields[0], hline)?;
    let k = parse_usize(fields[1], hline)?;
    if n == 0 || n > MAX_GROUND_SET {
        return Err(err(hline, fields[0].0, format!("ground set size {n} outside 1..=64")));
    }

    let mut chs = Vec::new();
    for (lineno, line) in lines {
        let mut elements = Vec::new();
        for tok in tokens(line) {
            let e = parse_usize(tok, lineno)?;
            if !(1..=n).contains(&e) {
                return Err(err(lineno, tok.0, format!("element {e} outside 1..={n}")));
            }
            if elements.contains(&e) {
                return Err(err(lineno, tok.0, format!("element {e} repeated")));
            }
            elements.push(e);
        }
        if elements.len() != k {
            return Err(err(lineno, 1, format!("expected {k} elements, found {}", elements.len())));
        }
        chs.push((lineno, SubsetMask::from_elements(&elements).unwrap()));
    }

    let line_of = |m: SubsetMask| chs.iter().find(|(_, h)| *h == m).map_or(1, |(l, _)| *l);
    validate(n, k, chs.iter().map(|(_, h)| *h), ValidateOptions::default()).map_err(|e| {
        let line = match &e {
            MatroidError::Adjacent { b, .. } => line_of(*b),
            MatroidError::Duplicate(m) | MatroidError::NotKSubset { mask: m, .. } => line_of(*m),
            _ => hline,
        };
        err(line, 1, e.to_string())
    })
}

/// Whitespace-separated tokens with their 1-based starting column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}
