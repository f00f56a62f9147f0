//! `spm-ehrhart`: exact Ehrhart polynomials of sparse paving matroids from
//! the command line.

mod checks;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ehrhart_core::codes::{gs_class, gs_classes, ClassReport, CodeError, DEFAULT_WORD_BUDGET};
use ehrhart_core::ehrhart::{
    ehr_minimal, ehr_minimal_shifted, ehr_of_matroid, ehr_uniform, hstar, is_real_rooted,
    search_counterexamples, CounterexampleReport, EngineError, LambdaProvenance,
};
use ehrhart_core::matroid::parse_matroid_text;
use ehrhart_core::oracle::{oracle_count_with, oracle_interior_count_with, OracleBudget, OracleError};
use ehrhart_core::SparsePavingMatroid;
use num_bigint::BigInt;

use output::{Format, Table};

#[derive(Parser, Debug)]
#[command(name = "spm-ehrhart", version, about = "Exact Ehrhart polynomials of sparse paving matroids")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[command(flatten)]
    budget: Budget,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone, Copy)]
struct Budget {
    /// Largest ground set for which whole polynomials are built.
    #[arg(long, global = true, default_value_t = 400)]
    max_n: usize,
    /// Most weight-k words the code construction may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_WORD_BUDGET)]
    word_budget: u64,
    #[arg(long, global = true, default_value_t = 10)]
    oracle_max_n: usize,
    #[arg(long, global = true, default_value_t = 7)]
    oracle_max_t: u64,
}

#[derive(Args, Debug, Clone)]
struct Shape {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Args, Debug, Clone)]
struct LambdaArgs {
    #[arg(long)]
    lambda: Option<BigInt>,
    /// Where the λ value comes from.
    #[arg(long, value_parser = parse_provenance, requires = "lambda")]
    provenance: Option<LambdaProvenance>,
}

fn parse_provenance(s: &str) -> Result<LambdaProvenance, String> {
    s.parse()
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ehrhart polynomial of the hypersimplex U_{k,n}.
    Uniform(Shape),
    /// Ehrhart polynomial of the minimal matroid T_{k,n}.
    Minimal {
        #[command(flatten)]
        shape: Shape,
        /// Print ehr(T_{k,n}, t - 1) instead.
        #[arg(long)]
        shifted: bool,
    },
    /// Ehrhart polynomial and positivity report of a sparse paving matroid.
    Sparse {
        #[arg(long, required_unless_present = "matroid_file")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "matroid_file")]
        k: Option<usize>,
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long, conflicts_with_all = ["n", "k", "lambda"])]
        matroid_file: Option<PathBuf>,
    },
    /// Largest Graham–Sloane class as a circuit-hyperplane family.
    Code {
        #[command(flatten)]
        shape: Shape,
        /// Also write the matroid in text form to this file.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Skip the pairwise distance check of the chosen class.
        #[arg(long)]
        no_validate: bool,
    },
    /// Bounds on λ and on quadratic coefficients.
    Bounds(Shape),
    /// Reports for every (n, k) in the ranges, λ from the Graham–Sloane bound.
    Search {
        /// Inclusive, e.g. `18..22`.
        #[arg(long, value_parser = parse_range)]
        n_range: (usize, usize),
        #[arg(long, value_parser = parse_range)]
        k_range: (usize, usize),
    },
    /// Recompute the published results and print one line per check.
    VerifyPaper {
        /// Skip the n = 3589 coefficient (a few seconds).
        #[arg(long)]
        skip_heavy: bool,
    },
    /// Compare brute-force lattice-point counts with the formula.
    Oracle {
        #[arg(long)]
        matroid_file: PathBuf,
        #[arg(long, default_value_t = 4)]
        t_max: u64,
    },
    /// h*-vector of ehr_sparse(n, k, λ).
    Hstar {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        lambda: LambdaArgs,
        /// Decide real-rootedness with Sturm sequences.
        #[arg(long)]
        check_real_rooted: bool,
    },
}

/// Accepts `a..b`, `a..=b` (both inclusive) or a single value.
fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("expected a range like 18..22, found {s:?}");
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Budget(String),
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::TooLarge { .. } => Failure::Budget(e.to_string()),
            OracleError::Matroid(_) => Failure::Usage(e.to_string()),
        }
    }
}

impl From<CodeError> for Failure {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::EnumerationTooLarge { .. } => Failure::Budget(e.to_string()),
            CodeError::InvalidParameters { .. } => Failure::Usage(e.to_string()),
        }
    }
}

/// Text to print and whether every check in it held.
struct Done {
    text: String,
    verified: bool,
}

impl Done {
    fn ok(text: String) -> Self {
        Done { text, verified: true }
    }
}

fn check_size(n: usize, budget: &Budget) -> Result<(), Failure> {
    if n > budget.max_n {
        return Err(Failure::Budget(format!(
            "budget exceeded: n = {n} is above --max-n {}",
            budget.max_n
        )));
    }
    Ok(())
}

fn read_matroid(path: &PathBuf) -> Result<SparsePavingMatroid, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_matroid_text(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn lambda_of(args: &LambdaArgs) -> Result<(BigInt, LambdaProvenance), Failure> {
    let lambda = args
        .lambda
        .clone()
        .ok_or_else(|| Failure::Usage("--lambda is required".into()))?;
    Ok((lambda, args.provenance.unwrap_or(LambdaProvenance::User)))
}

fn run(cli: &Cli) -> Result<Done, Failure> {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let budget = &cli.budget;
    match &cli.command {
        Command::Uniform(Shape { n, k }) => {
            check_size(*n, budget)?;
            let p = ehr_uniform(*k, *n)?;
            Ok(Done::ok(output::polynomial(format, "uniform", *n, *k, &p, &format!("ehr(U_{{{k},{n}}}, t)"))))
        }
        Command::Minimal { shape: Shape { n, k }, shifted } => {
            check_size(*n, budget)?;
            let (p, kind, label) = if *shifted {
                (ehr_minimal_shifted(*k, *n)?, "minimal-shifted", format!("ehr(T_{{{k},{n}}}, t-1)"))
            } else {
                (ehr_minimal(*k, *n)?, "minimal", format!("ehr(T_{{{k},{n}}}, t)"))
            };
            Ok(Done::ok(output::polynomial(format, kind, *n, *k, &p, &label)))
        }
        Command::Sparse { n, k, lambda, matroid_file } => {
            let report = match matroid_file {
                Some(path) => {
                    let m = read_matroid(path)?;
                    check_size(m.n(), budget)?;
                    CounterexampleReport::from_polynomial(
                        m.n(),
                        m.rank(),
                        BigInt::from(m.lambda()),
                        LambdaProvenance::User,
                        ehr_of_matroid(&m)?,
                    )
                }
                None => {
                    let (n, k) = (n.expect("required by clap"), k.expect("required by clap"));
                    check_size(n, budget)?;
                    let (lambda, provenance) = lambda_of(lambda)?;
                    CounterexampleReport::compute(n, k, lambda, provenance)?
                }
            };
            Ok(Done::ok(output::reports(format, std::slice::from_ref(&report), false)))
        }
        Command::Code { shape: Shape { n, k }, output: path, no_validate } => {
            if *k == 0 || k >= n {
                return Err(Failure::Usage(format!(
                    "rank {k} on {n} elements has no circuit-hyperplanes (need 0 < k < n)"
                )));
            }
            let sizes = gs_classes(*n, *k, budget.word_budget)?;
            let report = ClassReport::new(*n, *k, sizes);
            let code = gs_class(*n, *k, report.chosen_index);
            let matroid = if *no_validate { code.to_matroid_trusted() } else { code.to_matroid() }
                .map_err(|e| Failure::Usage(e.to_string()))?;
            if let Some(path) = path {
                std::fs::write(path, matroid.to_text())
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(Done::ok(output::code(format, &report, &matroid, !*no_validate, path.is_none())))
        }
        Command::Bounds(Shape { n, k }) => {
            if k > n || *n == 0 {
                return Err(Failure::Usage(format!("need 0 <= k <= n and n >= 1, got n = {n}, k = {k}")));
            }
            Ok(Done::ok(output::bounds(format, *n, *k)))
        }
        Command::Search { n_range, k_range } => {
            check_size(n_range.1, budget)?;
            let reports = search_counterexamples(n_range.0, n_range.1, k_range.0, k_range.1);
            Ok(Done::ok(output::reports(format, &reports, true)))
        }
        Command::VerifyPaper { skip_heavy } => {
            let results = checks::run_all(!*skip_heavy);
            let verified = results.iter().all(|r| r.passed);
            Ok(Done { text: output::checks(format, &results), verified })
        }
        Command::Oracle { matroid_file, t_max } => {
            let m = read_matroid(matroid_file)?;
            let oracle_budget = OracleBudget { max_n: budget.oracle_max_n, max_t: budget.oracle_max_t };
            let formula = ehr_of_matroid(&m)?;
            let full_dimensional = formula.degree() == Some(m.n() - 1);
            let mut table = Table::new(&["t", "oracle", "formula", "interior", "reciprocity", "match"]);
            let mut verified = true;
            for t in 0..=*t_max {
                let count = oracle_count_with(&m, t, oracle_budget)?;
                let interior = oracle_interior_count_with(&m, t, oracle_budget)?;
                let value = formula.eval_int(t as i64);
                let mut matches = value == ehrhart_core::Rational::from_integer(count.clone());
                let reciprocity = if full_dimensional && t >= 1 {
                    let mut r = formula.eval_int(-(t as i64));
                    if (m.n() - 1) % 2 == 1 {
                        r = -r;
                    }
                    matches &= r == ehrhart_core::Rational::from_integer(interior.clone());
                    output::fraction(&r, format)
                } else {
                    "-".to_string()
                };
                verified &= matches;
                table.row(vec![
                    t.into(),
                    output::integer(&count),
                    output::fraction(&value, format).into(),
                    output::integer(&interior),
                    reciprocity.into(),
                    matches.into(),
                ]);
            }
            Ok(Done { text: table.render(format), verified })
        }
        Command::Hstar { shape: Shape { n, k }, lambda, check_real_rooted } => {
            check_size(*n, budget)?;
            let (lambda, provenance) = lambda_of(lambda)?;
            let report = CounterexampleReport::compute(*n, *k, lambda, provenance)?;
            let dim = report.ehrhart.degree().unwrap_or(0);
            let h = hstar(&report.ehrhart, dim)?;
            let real = if *check_real_rooted { Some(is_real_rooted(&h)?) } else { None };
            let verified = h.iter().all(ehrhart_core::exact::is_nonnegative_integer) && real != Some(false);
            Ok(Done { text: output::hstar(format, &report, dim, &h, real), verified })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(done) => {
            print!("{}", done.text);
            if done.verified {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(3)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("18..22"), Ok((18, 22)));
        assert_eq!(parse_range("18..=22"), Ok((18, 22)));
        assert_eq!(parse_range("20"), Ok((20, 20)));
        assert!(parse_range("22..18").is_err());
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
