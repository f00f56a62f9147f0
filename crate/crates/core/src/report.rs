//! JSON and CSV forms of [`CounterexampleReport`].
//!
//! JSON: `{n, k, lambda, provenance, coefficients, negative_indices,
//! ehrhart_positive}` with coefficients as `"p/q"` strings indexed by
//! degree. `lambda` is a JSON number when it fits in a `u64` and a decimal
//! string otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::ehrhart::{CounterexampleReport, LambdaProvenance};
use crate::exact::Polynomial;

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("malformed report JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed report: {0}")]
    Field(String),
    #[error("CSV output failed: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LambdaValue {
    Small(u64),
    Large(String),
}

impl LambdaValue {
    pub fn from_bigint(v: &BigInt) -> Self {
        match v.to_u64() {
            Some(x) => LambdaValue::Small(x),
            None => LambdaValue::Large(v.to_string()),
        }
    }

    pub fn to_bigint(&self) -> Result<BigInt, ReportError> {
        match self {
            LambdaValue::Small(x) => Ok(BigInt::from(*x)),
            LambdaValue::Large(s) => s
                .parse()
                .map_err(|_| ReportError::Field(format!("lambda {s:?} is not an integer"))),
        }
    }
}

/// The wire form of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportRecord {
    pub n: usize,
    pub k: usize,
    pub lambda: LambdaValue,
    pub provenance: LambdaProvenance,
    pub coefficients: Vec<String>,
    pub negative_indices: Vec<usize>,
    pub ehrhart_positive: bool,
}

impl From<&CounterexampleReport> for ReportRecord {
    fn from(r: &CounterexampleReport) -> Self {
        ReportRecord {
            n: r.n,
            k: r.k,
            lambda: LambdaValue::from_bigint(&r.lambda),
            provenance: r.provenance,
            coefficients: r.ehrhart.to_fraction_strings(),
            negative_indices: r.negative_coefficient_indices.clone(),
            ehrhart_positive: r.is_ehrhart_positive,
        }
    }
}

impl TryFrom<ReportRecord> for CounterexampleReport {
    type Error = ReportError;

    fn try_from(rec: ReportRecord) -> Result<Self, ReportError> {
        let ehrhart = Polynomial::from_fraction_strings(&rec.coefficients)
            .map_err(|e| ReportError::Field(e.to_string()))?;
        let report = CounterexampleReport {
            n: rec.n,
            k: rec.k,
            lambda: rec.lambda.to_bigint()?,
            provenance: rec.provenance,
            negative_coefficient_indices: rec.negative_indices,
            is_ehrhart_positive: rec.ehrhart_positive,
            ehrhart,
        };
        if report.negative_coefficient_indices != report.ehrhart.negative_indices() {
            return Err(ReportError::Field("negative_indices disagree with coefficients".into()));
        }
        if report.is_ehrhart_positive != report.negative_coefficient_indices.is_empty() {
            return Err(ReportError::Field("ehrhart_positive disagrees with negative_indices".into()));
        }
        Ok(report)
    }
}

pub fn report_to_json(r: &CounterexampleReport) -> String {
    serde_json::to_string(&ReportRecord::from(r)).expect("records always serialize")
}

pub fn report_from_json(s: &str) -> Result<CounterexampleReport, ReportError> {
    serde_json::from_str::<ReportRecord>(s)?.try_into()
}

pub const CSV_HEADER: [&str; 7] =
    ["n", "k", "lambda", "provenance", "coefficients", "negative_indices", "ehrhart_positive"];

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

/// Header plus one row per report. Text cells, including the
/// semicolon-joined coefficients, are quoted.
pub fn reports_to_csv(reports: &[CounterexampleReport]) -> Result<String, ReportError> {
    let mut w = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::NonNumeric)
        .from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in reports {
        w.write_record([
            r.n.to_string(),
            r.k.to_string(),
            r.lambda.to_string(),
            r.provenance.to_string(),
            join(&r.ehrhart.to_fraction_strings()),
            join(&r.negative_coefficient_indices),
            r.is_ehrhart_positive.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| ReportError::Field(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("CSV of ASCII fields is UTF-8"))
}
