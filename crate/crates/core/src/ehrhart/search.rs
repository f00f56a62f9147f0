//! Sweeps over `(n, k)` with the Graham–Sloane family size as λ.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sparse::ehr_sparse;
use super::EngineError;
use crate::codes::gs_lower_bound;
use crate::exact::Polynomial;

/// Where a λ value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LambdaProvenance {
    /// `floor(C(n,k)/n)`, realized by a Graham–Sloane class.
    GsBound,
    /// A published code size that this crate does not construct.
    ExternalTable,
    User,
}

impl LambdaProvenance {
    pub fn as_str(self) -> &'static str {
        match self {
            LambdaProvenance::GsBound => "gs-bound",
            LambdaProvenance::ExternalTable => "external-table",
            LambdaProvenance::User => "user",
        }
    }
}

impl std::fmt::Display for LambdaProvenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for LambdaProvenance {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gs-bound" => Ok(LambdaProvenance::GsBound),
            "external-table" => Ok(LambdaProvenance::ExternalTable),
            "user" => Ok(LambdaProvenance::User),
            other => Err(format!("unknown provenance '{other}' (expected gs-bound, external-table or user)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub n: usize,
    pub k: usize,
    pub lambda: BigInt,
    pub provenance: LambdaProvenance,
    pub ehrhart: Polynomial,
    pub negative_coefficient_indices: Vec<usize>,
    pub is_ehrhart_positive: bool,
}

impl CounterexampleReport {
    pub fn from_polynomial(
        n: usize,
        k: usize,
        lambda: BigInt,
        provenance: LambdaProvenance,
        ehrhart: Polynomial,
    ) -> Self {
        let negative_coefficient_indices = ehrhart.negative_indices();
        let is_ehrhart_positive = negative_coefficient_indices.is_empty();
        CounterexampleReport { n, k, lambda, provenance, ehrhart, negative_coefficient_indices, is_ehrhart_positive }
    }

    pub fn compute(
        n: usize,
        k: usize,
        lambda: BigInt,
        provenance: LambdaProvenance,
    ) -> Result<Self, EngineError> {
        let p = ehr_sparse(n, k, &lambda)?;
        Ok(Self::from_polynomial(n, k, lambda, provenance, p))
    }
}

/// One report per `(n, k)` with `0 < k < n` in the given inclusive ranges,
/// ordered by `(n, k)`. Pairs are computed in parallel.
pub fn search_counterexamples(
    n_min: usize,
    n_max: usize,
    k_min: usize,
    k_max: usize,
) -> Vec<CounterexampleReport> {
    let pairs: Vec<(usize, usize)> = (n_min.max(2)..=n_max)
        .flat_map(|n| (k_min.max(1)..=k_max.min(n - 1)).map(move |k| (n, k)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(n, k)| {
            let lambda = gs_lower_bound(n as i64, k as i64);
            CounterexampleReport::compute(n, k, lambda, LambdaProvenance::GsBound)
                .expect("the Graham–Sloane size never exceeds the upper bound")
        })
        .collect()
}
