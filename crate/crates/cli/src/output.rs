//! Rendering in the three output formats. Text drops `/1` from integers;
//! JSON and CSV always write `p/q`.

use ehrhart_core::codes::{gs_lower_bound, max_ch_upper_bound, ClassReport};
use ehrhart_core::ehrhart::{
    counterexample_inequality, intermediate_upper_bound_quad, lower_bound_quad, upper_bound_quad_uniform,
    CounterexampleReport,
};
use ehrhart_core::exact::format_fraction;
use ehrhart_core::report::{report_to_json, reports_to_csv, LambdaValue};
use ehrhart_core::{Polynomial, Rational, SparsePavingMatroid};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::checks::CheckResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub fn fraction(r: &Rational, format: Format) -> String {
    format_fraction(r, format != Format::Text)
}

fn fractions(p: &Polynomial, format: Format) -> Vec<String> {
    p.coeffs().iter().map(|c| fraction(c, format)).collect()
}

/// A JSON number when it fits in `u64`, otherwise a string.
pub fn integer(v: &BigInt) -> Value {
    serde_json::to_value(LambdaValue::from_bigint(v)).expect("plain value")
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', ';', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("plain value");
    s.push('\n');
    s
}

/// Rows of JSON scalars rendered as aligned text, a JSON array of objects,
/// or CSV.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<Value>) {
        assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    fn plain(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let objects: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| Value::Object(self.header.iter().cloned().zip(r.iter().cloned()).collect()))
                    .collect();
                json_line(&Value::Array(objects))
            }
            Format::Csv => {
                let mut s = self.header.join(",");
                s.push('\n');
                for r in &self.rows {
                    let cells: Vec<String> = r.iter().map(|v| csv_cell(&Self::plain(v))).collect();
                    s.push_str(&cells.join(","));
                    s.push('\n');
                }
                s
            }
            Format::Text => {
                let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Self::plain).collect()).collect();
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|i| cells.iter().map(|r| r[i].len()).chain([self.header[i].len()]).max().unwrap_or(0))
                    .collect();
                let line = |items: Vec<&str>| {
                    let padded: Vec<String> =
                        items.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                let mut s = line(self.header.iter().map(String::as_str).collect());
                for r in &cells {
                    s.push_str(&line(r.iter().map(String::as_str).collect()));
                }
                s
            }
        }
    }
}

pub fn polynomial(format: Format, kind: &str, n: usize, k: usize, p: &Polynomial, label: &str) -> String {
    let coeffs = fractions(p, format);
    match format {
        Format::Text => format!("{label} = {p}\ncoefficients (degree 0 up): {}\n", coeffs.join(", ")),
        Format::Json => json_line(&json!({ "n": n, "k": k, "polynomial": kind, "coefficients": coeffs })),
        Format::Csv => format!("n,k,polynomial,coefficients\n{n},{k},{kind},{}\n", csv_cell(&coeffs.join(";"))),
    }
}

fn indices(v: &[usize]) -> String {
    if v.is_empty() {
        "none".into()
    } else {
        v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
    }
}

/// `stream` selects one line per report (search) over the detailed form.
pub fn reports(format: Format, reports: &[CounterexampleReport], stream: bool) -> String {
    match format {
        Format::Json => reports.iter().map(|r| report_to_json(r) + "\n").collect(),
        Format::Csv => reports_to_csv(reports).expect("in-memory CSV"),
        Format::Text if stream => reports
            .iter()
            .map(|r| {
                format!(
                    "n={} k={} λ={} ({}) negative degrees: {}{}\n",
                    r.n,
                    r.k,
                    r.lambda,
                    r.provenance,
                    indices(&r.negative_coefficient_indices),
                    if r.is_ehrhart_positive { "" } else { "  NOT Ehrhart positive" }
                )
            })
            .collect(),
        Format::Text => reports
            .iter()
            .map(|r| {
                format!(
                    "n = {}, k = {}, λ = {} ({})\nehr(t) = {}\ncoefficients (degree 0 up): {}\nnegative coefficients at degrees: {}\nEhrhart positive: {}\n",
                    r.n,
                    r.k,
                    r.lambda,
                    r.provenance,
                    r.ehrhart,
                    fractions(&r.ehrhart, format).join(", "),
                    indices(&r.negative_coefficient_indices),
                    if r.is_ehrhart_positive { "yes" } else { "no" }
                )
            })
            .collect(),
    }
}

pub fn code(
    format: Format,
    report: &ClassReport,
    matroid: &SparsePavingMatroid,
    validated: bool,
    include_matroid: bool,
) -> String {
    match format {
        Format::Json => json_line(&serde_json::to_value(report).expect("plain struct")),
        Format::Csv => {
            let mut s = String::from("residue,size,chosen\n");
            for (i, size) in report.class_sizes.iter().enumerate() {
                s.push_str(&format!("{i},{size},{}\n", i == report.chosen_index));
            }
            s
        }
        Format::Text => {
            // comment lines keep the whole output a readable matroid file
            let sizes: Vec<String> = report.class_sizes.iter().map(u64::to_string).collect();
            let mut s = format!(
                "# Graham–Sloane classes for n = {}, k = {}: {}\n# chosen class C_{} with {} words ({})\n# λ bounds: {} <= max <= {}\n",
                report.n,
                report.k,
                sizes.join(" "),
                report.chosen_index,
                matroid.lambda(),
                if validated { "pairwise distance >= 4 checked" } else { "not rechecked" },
                report.lower_bound,
                report.upper_bound,
            );
            if include_matroid {
                s.push_str(&matroid.to_text());
            }
            s
        }
    }
}

pub fn bounds(format: Format, n: usize, k: usize) -> String {
    let (ni, ki) = (n as i64, k as i64);
    let lower = gs_lower_bound(ni, ki);
    let upper = max_ch_upper_bound(ni, ki);
    let quad = (2 <= k && k + 2 <= n).then(|| {
        (
            lower_bound_quad(k, n),
            upper_bound_quad_uniform(k, n),
            intermediate_upper_bound_quad(k, n),
            counterexample_inequality(k, n),
        )
    });
    match format {
        Format::Text => {
            let mut s = format!(
                "n = {n}, k = {k}\nGraham–Sloane lower bound on max λ: {lower}\ncircuit-hyperplane upper bound: {upper}\n"
            );
            match &quad {
                Some((lo, up, mid, ineq)) => s.push_str(&format!(
                    "[t^2] ehr(T_{{k,n}}, t-1) >= {}\n[t^2] ehr(U_{{k,n}}, t) <= {} <= {}\nsufficient inequality for a negative [t^2]: {}\n",
                    fraction(lo, format),
                    fraction(mid, format),
                    fraction(up, format),
                    ineq
                )),
                None => s.push_str("quadratic bounds need 2 <= k <= n-2\n"),
            }
            s
        }
        Format::Json => {
            let (lo, up, mid, ineq) = match &quad {
                Some((lo, up, mid, ineq)) => (
                    json!(fraction(lo, format)),
                    json!(fraction(up, format)),
                    json!(fraction(mid, format)),
                    json!(ineq),
                ),
                None => (Value::Null, Value::Null, Value::Null, Value::Null),
            };
            json_line(&json!({
                "n": n,
                "k": k,
                "gs_lower_bound": integer(&lower),
                "max_ch_upper_bound": integer(&upper),
                "minimal_quad_lower_bound": lo,
                "uniform_quad_intermediate_bound": mid,
                "uniform_quad_upper_bound": up,
                "counterexample_inequality": ineq,
            }))
        }
        Format::Csv => {
            let q = quad.map(|(lo, up, mid, ineq)| {
                [fraction(&lo, format), fraction(&mid, format), fraction(&up, format), ineq.to_string()]
            });
            let q = q.unwrap_or_default();
            format!(
                "n,k,gs_lower_bound,max_ch_upper_bound,minimal_quad_lower_bound,uniform_quad_intermediate_bound,uniform_quad_upper_bound,counterexample_inequality\n{n},{k},{lower},{upper},{},{},{},{}\n",
                q[0], q[1], q[2], q[3]
            )
        }
    }
}

pub fn checks(format: Format, results: &[CheckResult]) -> String {
    let mut table = Table::new(&["criterion", "status", "check", "detail"]);
    for r in results {
        table.row(vec![
            r.id.into(),
            if r.passed { "PASS" } else { "FAIL" }.into(),
            r.name.into(),
            r.detail.clone().into(),
        ]);
    }
    match format {
        Format::Text => {
            let mut s: String = results
                .iter()
                .map(|r| {
                    format!(
                        "[{}] {:>2}. {}: {}\n",
                        if r.passed { "PASS" } else { "FAIL" },
                        r.id,
                        r.name,
                        r.detail
                    )
                })
                .collect();
            let passed = results.iter().filter(|r| r.passed).count();
            s.push_str(&format!("{passed}/{} checks passed\n", results.len()));
            s
        }
        _ => table.render(format),
    }
}

pub fn hstar(
    format: Format,
    report: &CounterexampleReport,
    dim: usize,
    h: &[Rational],
    real_rooted: Option<bool>,
) -> String {
    let values: Vec<String> = h.iter().map(|c| fraction(c, format)).collect();
    match format {
        Format::Text => {
            let mut s = format!(
                "n = {}, k = {}, λ = {} ({}), dimension {dim}\nh* = {}\n",
                report.n,
                report.k,
                report.lambda,
                report.provenance,
                values.join(", ")
            );
            if let Some(real) = real_rooted {
                s.push_str(&format!("real-rooted: {}\n", if real { "yes" } else { "no" }));
            }
            s
        }
        Format::Json => json_line(&json!({
            "n": report.n,
            "k": report.k,
            "lambda": integer(&report.lambda),
            "provenance": report.provenance,
            "dimension": dim,
            "hstar": values,
            "real_rooted": real_rooted,
        })),
        Format::Csv => format!(
            "n,k,lambda,provenance,dimension,hstar,real_rooted\n{},{},{},{},{dim},{},{}\n",
            report.n,
            report.k,
            report.lambda,
            report.provenance,
            csv_cell(&values.join(";")),
            real_rooted.map_or(String::new(), |r| r.to_string())
        ),
    }
}
