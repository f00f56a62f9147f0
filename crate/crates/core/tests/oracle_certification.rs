use ehrhart_core::ehrhart::{count_points_uniform, ehr_of_matroid, ehr_sparse};
use ehrhart_core::exact::Rational;
use ehrhart_core::oracle::{
    dilation_counts, enumerate_small_matroids, oracle_count, oracle_ehrhart, oracle_interior_count,
    rank_description_holds, OracleBudget,
};
use ehrhart_core::SparsePavingMatroid;
use num_bigint::BigInt;

fn as_rational(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

#[test]
fn formula_matches_lattice_point_counts_up_to_seven_elements() {
    for n in 2..=7usize {
        for k in 1..n {
            for m in enumerate_small_matroids(n, k, 3) {
                let p = ehr_sparse(n, k, &BigInt::from(m.lambda())).unwrap();
                let values = p.eval_ints(0..=4);
                for (t, value) in values.into_iter().enumerate() {
                    assert_eq!(
                        value,
                        as_rational(oracle_count(&m, t as u64).unwrap()),
                        "{} t={t}",
                        m.to_text().replace('\n', " | ")
                    );
                }
            }
        }
    }
}

#[test]
fn uniform_counts_agree() {
    for n in 2..=8usize {
        for k in 1..n {
            let u = SparsePavingMatroid::uniform(n, k).unwrap();
            for t in 0..=5u64 {
                assert_eq!(oracle_count(&u, t).unwrap(), count_points_uniform(k, n, t), "n={n} k={k} t={t}");
            }
        }
    }
}

#[test]
fn interpolated_oracle_equals_formula() {
    for n in 3..=7usize {
        for k in 1..n {
            for m in enumerate_small_matroids(n, k, 2).into_iter().step_by(7) {
                assert_eq!(oracle_ehrhart(&m).unwrap(), ehr_of_matroid(&m).unwrap());
            }
        }
    }
}

#[test]
fn reciprocity_on_full_dimensional_polytopes() {
    for n in 3..=6usize {
        for k in 1..n {
            for m in enumerate_small_matroids(n, k, 3) {
                let p = ehr_of_matroid(&m).unwrap();
                if p.degree() != Some(n - 1) {
                    continue;
                }
                let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
                for t in 1..=4i64 {
                    let expected = p.eval_int(-t) * Rational::from_integer(sign.into());
                    assert_eq!(expected, as_rational(oracle_interior_count(&m, t as u64).unwrap()));
                }
            }
        }
    }
}

#[test]
fn lower_dimensional_cases_are_the_expected_ones() {
    // dimension drops exactly when the matroid has a loop or coloop or
    // splits: rank 1 or corank 1 with a circuit-hyperplane, and the two
    // complementary pairs on four elements
    for n in 3..=7usize {
        for k in 1..n {
            for m in enumerate_small_matroids(n, k, 3) {
                let d = ehr_of_matroid(&m).unwrap().degree().unwrap();
                let degenerate = m.lambda() > 0 && (k == 1 || k == n - 1) || (n, k, m.lambda()) == (4, 2, 2);
                assert_eq!(d < n - 1, degenerate, "{}", m.to_text());
            }
        }
    }
}

#[test]
fn facet_and_rank_descriptions_agree() {
    for n in 2..=6usize {
        for k in 1..n {
            for m in enumerate_small_matroids(n, k, 3) {
                let facets = m.facet_description().unwrap();
                let t_max = if n <= 5 { 3 } else { 2 };
                for t in 0..=t_max {
                    let mut x = vec![0u64; n];
                    loop {
                        let lhs = facets.iter().all(|f| f.holds_dilated(&x, t));
                        assert_eq!(lhs, rank_description_holds(&m, &x, t), "x={x:?} t={t}");
                        let Some(i) = x.iter().position(|&v| v < t) else { break };
                        x[i] += 1;
                        x[..i].iter_mut().for_each(|v| *v = 0);
                    }
                }
            }
        }
    }
}

#[test]
fn interior_never_exceeds_closed_count() {
    for m in enumerate_small_matroids(6, 3, 2).into_iter().step_by(5) {
        for c in dilation_counts(&m, 4, OracleBudget::default()).unwrap() {
            assert!(c.interior_count <= c.boundary_inclusive_count);
            if c.t == 1 {
                assert_eq!(c.interior_count, BigInt::from(0));
                assert_eq!(c.boundary_inclusive_count, m.bases_count());
            }
        }
    }
}
