//! Acceptance criteria 1-11, each printed as one PASS/FAIL line.
//!
//! Run with `cargo test -p ehrhart-core --test acceptance`. The process
//! exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use ehrhart_core::codes::{gs_best_class, gs_classes, gs_lower_bound, max_ch_upper_bound, DEFAULT_WORD_BUDGET};
use ehrhart_core::ehrhart::{
    counterexample_inequality, ehr_minimal_shifted, ehr_sparse, ehr_uniform, hstar, is_real_rooted,
    rank2_poly, sparse_coefficient_newton, strengthened_inequality, verify_rank2_inequalities,
    LogReplacement,
};
use ehrhart_core::exact::{is_nonnegative_integer, parse_fraction, Polynomial, Rational};
use ehrhart_core::oracle::{enumerate_small_matroids, oracle_count, oracle_interior_count, rank_description_holds};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn frac(s: &str) -> Rational {
    parse_fraction(s).unwrap()
}

/// Every polynomial criteria 1-7 produce, for the h* sweep in criterion 11.
#[derive(Default)]
struct Emitted(Vec<(String, Polynomial)>);

impl Emitted {
    fn push(&mut self, label: String, p: &Polynomial) {
        self.0.push((label, p.clone()));
    }
}

fn golden(emitted: &mut Emitted) -> Outcome {
    let p = ehr_sparse(20, 9, &big(8398)).unwrap();
    emitted.push("(20,9,8398)".into(), &p);
    let checks = [
        ("[t^2]", p.coeff(2) == frac("-142179543511/15437822400")),
        ("[t^3]", p.coeff(3) == frac("-4816883312963/51459408000")),
        ("p(1)", p.eval_int(1) == Rational::from_integer(big(159562))),
        ("p(0)", p.eval_int(0) == Rational::one()),
        ("p(-1)", p.eval_int(-1) == Rational::zero()),
    ];
    let failed: Vec<_> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    outcome(failed.is_empty(), format!("negative indices {:?}; failed: {failed:?}", p.negative_indices()))
}

fn graham_sloane() -> Outcome {
    let sizes = gs_classes(20, 9, DEFAULT_WORD_BUDGET).unwrap();
    let all_equal = sizes.len() == 20 && sizes.iter().all(|&s| s == 8398);
    let code = gs_best_class(20, 9, DEFAULT_WORD_BUDGET).unwrap();
    let validated = code.to_matroid();
    let pairs = code.len() * (code.len() - 1) / 2;
    outcome(
        all_equal && validated.as_ref().is_ok_and(|m| m.lambda() == 8398),
        format!("class sizes all 8398: {all_equal}; chosen class {:?} validated over {pairs} pairs: {}", code.class_index, validated.is_ok()),
    )
}

fn nineteen(emitted: &mut Emitted) -> Outcome {
    let p = ehr_sparse(19, 9, &big(6726)).unwrap();
    emitted.push("(19,9,6726)".into(), &p);
    let neg = p.negative_indices();
    outcome(!neg.is_empty(), format!("λ = 6726 (external-table), negative indices {neg:?}"))
}

fn eighteen(emitted: &mut Emitted) -> Outcome {
    let p = ehr_sparse(18, 9, &big(4240)).unwrap();
    let q = ehr_sparse(18, 9, &big(3540)).unwrap();
    emitted.push("(18,9,4240)".into(), &p);
    emitted.push("(18,9,3540)".into(), &q);
    let cubic_negative = p.coeff(3).is_negative();
    outcome(
        cubic_negative,
        format!(
            "λ = 4240: negative indices {:?}; λ = 3540 (recorded only): negative indices {:?}, positive = {}",
            p.negative_indices(),
            q.negative_indices(),
            q.has_positive_coeffs()
        ),
    )
}

fn small_ground_sets(emitted: &mut Emitted) -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for n in 1..=17usize {
        for k in 1..=n {
            let lambda = max_ch_upper_bound(n as i64, k as i64);
            let uniform = ehr_uniform(k, n).unwrap();
            // full rank leaves a single point and no circuit-hyperplanes
            let p = if lambda.is_zero() {
                uniform
            } else {
                uniform - ehr_minimal_shifted(k, n).unwrap().scale(&Rational::from_integer(lambda.clone()))
            };
            count += 1;
            if !p.has_positive_coeffs() {
                failures.push((n, k));
            }
            emitted.push(format!("({n},{k},{lambda})"), &p);
        }
    }
    outcome(failures.is_empty(), format!("{count} polynomials at the maximal λ; failures {failures:?}"))
}

fn rank_two(emitted: &mut Emitted) -> Outcome {
    let mut failures = Vec::new();
    for n in 3..=150usize {
        let p = rank2_poly(n).unwrap();
        if !p.has_positive_coeffs() {
            failures.push(n);
        }
        emitted.push(format!("rank2 n={n}"), &p);
    }
    let inequalities = verify_rank2_inequalities(150);
    outcome(
        failures.is_empty() && inequalities,
        format!("P_n positive for 3..=150 (failures {failures:?}); inequalities to 150: {inequalities}"),
    )
}

fn cubic_only(emitted: &mut Emitted) -> Outcome {
    let lambda = gs_lower_bound(22, 7);
    let p = ehr_sparse(22, 7, &lambda).unwrap();
    emitted.push(format!("(22,7,{lambda})"), &p);
    let neg = p.negative_indices();
    outcome(neg == vec![3], format!("λ = {lambda}, negative indices {neg:?}"))
}

fn thresholds() -> Outcome {
    let at = counterexample_inequality(3, 10439);
    let below = counterexample_inequality(3, 10438);
    let strengthened = strengthened_inequality(55, LogReplacement::NaturalLog);
    let strengthened_h = strengthened_inequality(55, LogReplacement::Harmonic);
    outcome(
        at && strengthened,
        format!(
            "(3, 10439): {at}; (3, 10438) recorded: {below}; rank-9 variant at 55: {strengthened} (H_n form: {strengthened_h})"
        ),
    )
}

fn oracle_certification() -> Outcome {
    let mut matroids = 0usize;
    let mut problems = Vec::new();
    for n in 2..=6usize {
        for k in 1..n {
            for m in enumerate_small_matroids(n, k, 3) {
                matroids += 1;
                let p = ehr_sparse(n, k, &BigInt::from(m.lambda())).unwrap();
                for t in 0..=4u64 {
                    let count = oracle_count(&m, t).unwrap();
                    if p.eval_int(t as i64) != Rational::from_integer(count) {
                        problems.push(format!("count {m:?} t={t}"));
                    }
                }
                if p.degree() == Some(n - 1) {
                    for t in 1..=4i64 {
                        let mut value = p.eval_int(-t);
                        if (n - 1) % 2 == 1 {
                            value = -value;
                        }
                        if value != Rational::from_integer(oracle_interior_count(&m, t as u64).unwrap()) {
                            problems.push(format!("reciprocity {m:?} t={t}"));
                        }
                    }
                }
                let facets = m.facet_description().unwrap();
                for t in 1..=2u64 {
                    let mut x = vec![0u64; n];
                    loop {
                        let by_facets = facets.iter().all(|f| f.holds_dilated(&x, t));
                        if by_facets != rank_description_holds(&m, &x, t) {
                            problems.push(format!("description {m:?} x={x:?} t={t}"));
                        }
                        let Some(i) = x.iter().position(|&v| v < t) else { break };
                        x[i] += 1;
                        x[..i].iter_mut().for_each(|v| *v = 0);
                    }
                }
            }
        }
    }
    outcome(
        problems.is_empty(),
        format!("{matroids} matroids (n <= 6, λ <= 3, t <= 4); mismatches {:?}", &problems[..problems.len().min(5)]),
    )
}

fn rank_three_threshold() -> Outcome {
    let lambda = gs_lower_bound(3589, 3);
    let q = sparse_coefficient_newton(3589, 3, &lambda).unwrap();
    outcome(q.is_negative(), format!("λ = {lambda}, [t^2] < 0: {}", q.is_negative()))
}

fn hstar_sanity(emitted: &Emitted) -> Outcome {
    let mut bad = Vec::new();
    for (label, p) in &emitted.0 {
        let dim = p.degree().unwrap();
        let h = hstar(p, dim).unwrap();
        if h[0] != Rational::one() || !h.iter().all(is_nonnegative_integer) {
            bad.push(label.clone());
        }
    }
    let golden = ehr_sparse(20, 9, &big(8398)).unwrap();
    let real = is_real_rooted(&hstar(&golden, 19).unwrap()).unwrap();
    outcome(
        bad.is_empty() && real,
        format!("{} polynomials, bad h* {bad:?}; (20,9,8398) h* real-rooted: {real}", emitted.0.len()),
    )
}

fn main() {
    let mut emitted = Emitted::default();
    let mut results: Vec<(u32, &str, Outcome, Duration)> = Vec::new();
    let mut run = |id: u32, name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = f();
        let elapsed = start.elapsed();
        println!(
            "criterion {id:>2} [{}] {name}: {} ({:.2?})",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail,
            elapsed
        );
        results.push((id, name, o, elapsed));
    };
    run(1, "golden counterexample (20,9,8398)", &mut || golden(&mut emitted));
    run(2, "Graham-Sloane classes at (20,9)", &mut graham_sloane);
    run(3, "n = 19 counterexample", &mut || nineteen(&mut emitted));
    run(4, "n = 18 cubic coefficient", &mut || eighteen(&mut emitted));
    run(5, "positivity for n <= 17 at the circuit-hyperplane bound", &mut || small_ground_sets(&mut emitted));
    run(6, "rank-2 positivity", &mut || rank_two(&mut emitted));
    run(7, "(22,7) negative only in degree 3", &mut || cubic_only(&mut emitted));
    run(8, "inequality thresholds", &mut thresholds);
    run(9, "oracle certification", &mut oracle_certification);
    run(10, "rank-3 threshold n = 3589", &mut rank_three_threshold);
    run(11, "h* sanity", &mut || hstar_sanity(&emitted));

    let budgets = [(1, 5), (2, 60), (5, 120), (9, 300), (10, 900)];
    let mut ok = true;
    for (id, _, o, elapsed) in &results {
        ok &= o.passed;
        if let Some((_, secs)) = budgets.iter().find(|(b, _)| b == id) {
            if elapsed.as_secs() >= *secs {
                println!("criterion {id:>2} exceeded its {secs} s budget");
                ok = false;
            }
        }
    }
    let passed = results.iter().filter(|r| r.2.passed).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if !ok {
        std::process::exit(1);
    }
}
