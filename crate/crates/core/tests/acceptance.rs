//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its timing. Every comparison is exact in Q(v) or Q; run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use daha_lab_core::daha::{
    basis_sample, content_bound_check, derived_relation_table, pi_n_eigenvalue_exponent,
    relation_table, twist_class_count, twist_classify, verify_relations, Normalization,
    Representation, TwistParam,
};
use daha_lab_core::periodic::{per, per_inverse, sper, sper_inverse};
use daha_lab_core::scalar::Rat;
use daha_lab_core::schur_weyl::{main_theorem_check, ribbon_inverse_on_v_exponent, rmatrix_sanity};
use daha_lab_core::tableaux::{count_skew_syt, enumerate_rect_syt, tab, tab_inverse, SkewShape};
use daha_lab_core::walks::{enumerate_walks, lambda_ball, DominantWeight, Flavor, LoopedWalk};
use daha_lab_core::weight::{GlWeight, SlWeight};
use num::BigUint;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

fn sl(coords: &[i64]) -> DominantWeight {
    DominantWeight::Sl(SlWeight::new(coords))
}

fn gl(coords: &[i64]) -> DominantWeight {
    DominantWeight::Gl(GlWeight(coords.to_vec()))
}

fn report(criterion: u32, what: &str, started: Instant, budget: Option<Duration>) {
    let elapsed = started.elapsed();
    println!("criterion {criterion}: PASS - {what} ({elapsed:.2?})");
    if let Some(budget) = budget {
        assert!(
            elapsed < budget,
            "criterion {criterion} exceeded its runtime budget: {elapsed:?} >= {budget:?}"
        );
    }
}

#[test]
fn criterion_1_walk_counts() {
    let started = Instant::now();
    for m in [2i64, 3, 5, 9] {
        assert_eq!(enumerate_walks(&sl(&[m, 0]), 2).len(), 6, "m = {m}");
    }
    assert_eq!(enumerate_walks(&sl(&[1, 0]), 2).len(), 5);
    assert_eq!(enumerate_walks(&sl(&[0, 0]), 2).len(), 2);
    assert_eq!(enumerate_walks(&sl(&[1, 0, 0]), 1).len(), 3);
    report(
        1,
        "walk counts 6/5/2 (SL2, k=2) and 3 (SL3, k=1)",
        started,
        Some(Duration::from_secs(1)),
    );
}

#[test]
fn criterion_2_rectangle_weight_fixtures() {
    let started = Instant::now();
    let tableaux = enumerate_rect_syt(3, 2);
    assert_eq!(tableaux.len(), 5);
    let got: BTreeSet<Vec<i64>> = tableaux
        .iter()
        .map(|t| {
            t.weight_exponents()
                .iter()
                .map(|r| r.to_integer())
                .collect()
        })
        .collect();
    let expected: BTreeSet<Vec<i64>> = [
        vec![0, -2, -4, 2, 0, -2],
        vec![0, -2, 2, -4, 0, -2],
        vec![0, 2, -2, -4, 0, -2],
        vec![0, -2, 2, 0, -4, -2],
        vec![0, 2, -2, 0, -4, -2],
    ]
    .into_iter()
    .collect();
    assert_eq!(got, expected);
    report(
        2,
        "the five SYT(2^3) weight exponent vectors",
        started,
        None,
    );
}

#[test]
fn criterion_3_bijection_round_trips_and_counts() {
    let started = Instant::now();
    let mut elements = 0usize;
    for (rank_n, k) in [(2usize, 1usize), (2, 2), (3, 1), (3, 2)] {
        for flavor in [Flavor::Gl, Flavor::Sl] {
            for lambda in lambda_ball(flavor, rank_n, 3) {
                let walks = enumerate_walks(&lambda, k);
                let shape = SkewShape::new(lambda.clone(), k).unwrap();
                assert_eq!(
                    BigUint::from(walks.len()),
                    count_skew_syt(&shape),
                    "determinant oracle disagrees at {lambda:?}, k={k}"
                );
                for u in walks {
                    let t = tab(&u);
                    assert_eq!(tab_inverse(&t).unwrap(), u);
                    match flavor {
                        Flavor::Gl => {
                            let p = per(&t).unwrap();
                            let (lam2, t2) = per_inverse(&p).unwrap();
                            assert_eq!(DominantWeight::Gl(lam2), lambda);
                            assert_eq!(t2, t);
                        }
                        Flavor::Sl => {
                            let c = sper(&t).unwrap();
                            let (lam2, t2) = sper_inverse(&c);
                            assert_eq!(DominantWeight::Sl(lam2), lambda);
                            assert_eq!(t2, t);
                        }
                    }
                    elements += 1;
                }
            }
        }
    }
    report(
        3,
        &format!("Tab/Per round trips and determinant counts on {elements} basis elements"),
        started,
        Some(Duration::from_secs(30)),
    );
}

#[test]
fn criterion_4_symbolic_relation_suites() {
    let started = Instant::now();
    let mut checks = 0usize;
    for (rank_n, k) in [(2usize, 1usize), (2, 2), (3, 1)] {
        for flavor in [Flavor::Gl, Flavor::Sl] {
            let rep = Representation::new(flavor, rank_n, k);
            let rows = relation_table(flavor, rep.params());
            let sample = basis_sample(flavor, rank_n, k, 3);
            let r = verify_relations(&rep, &rows, &sample);
            assert!(
                r.passed(),
                "{flavor} N={rank_n} k={k}: {:?}",
                r.failures.first()
            );
            checks += r.checks;
            // derived lattice rows on up to 10 vectors per configuration
            let sub: Vec<LoopedWalk> = sample.into_iter().take(10).collect();
            let d = verify_relations(&rep, &derived_relation_table(rep.params()), &sub);
            assert!(
                d.passed(),
                "derived rows {flavor} N={rank_n} k={k}: {:?}",
                d.failures.first()
            );
            checks += d.checks;
        }
    }
    // negative control: the sabotaged build must fail the suite
    let rep =
        Representation::new(Flavor::Gl, 2, 2).with_normalization(Normalization::SabotagedBCoeff);
    let rows = relation_table(Flavor::Gl, rep.params());
    let sample = basis_sample(Flavor::Gl, 2, 2, 1);
    let r = verify_relations(&rep, &rows, &sample);
    assert!(!r.passed(), "sabotage negative control did not fail");
    report(
        4,
        &format!("{checks} symbolic relation checks, sabotage control red"),
        started,
        Some(Duration::from_secs(300)),
    );
}

#[test]
fn criterion_5_main_theorem_comparator() {
    let started = Instant::now();
    for (rank_n, k) in [(2usize, 1usize), (2, 2), (3, 1)] {
        for flavor in [Flavor::Gl, Flavor::Sl] {
            let r = main_theorem_check(flavor, rank_n, k, 3);
            assert!(
                r.passed(),
                "{flavor} N={rank_n} k={k}: {:?}",
                r.failures.first()
            );
        }
    }

    // SL3 pi-orbit weights
    let u = LoopedWalk::new(sl(&[1, 0, 0]), vec![1, 2, 3], 1).unwrap();
    let c = sper(&tab(&u)).unwrap();
    assert_eq!(
        c.weight_exponents(),
        vec![Rat::new(4, 3), Rat::new(-8, 3), Rat::new(-14, 3)]
    );
    let c2 = c.pi_shift().unwrap();
    assert_eq!(
        c2.weight_exponents(),
        vec![
            Rat::from_integer(-6),
            Rat::from_integer(2),
            Rat::from_integer(-2)
        ]
    );
    let c3 = c2.pi_shift().unwrap();
    assert_eq!(
        c3.weight_exponents(),
        vec![Rat::new(-10, 3), Rat::new(-16, 3), Rat::new(8, 3)]
    );

    // GL2 periodization weights for the three diagonal-shifted tableaux
    for (lambda, expect) in [
        (gl(&[1, 0]), vec![2i64, 4, -2, 0]),
        (gl(&[0, -1]), vec![0, 2, -4, -2]),
        (gl(&[2, 1]), vec![4, 6, 0, 2]),
    ] {
        let u = LoopedWalk::new(lambda, vec![1, 1, 2, 2], 2).unwrap();
        let got: Vec<i64> = tab(&u)
            .weight_exponents()
            .iter()
            .map(|r| r.to_integer())
            .collect();
        assert_eq!(got, expect);
    }
    report(
        5,
        "ribbon exponents equal tableau diagonals, reference weights exact",
        started,
        None,
    );
}

#[test]
fn criterion_6_support_rules_and_multiplicity_one() {
    let started = Instant::now();
    for (rank_n, k) in [(2usize, 1usize), (2, 2), (3, 1)] {
        for flavor in [Flavor::Gl, Flavor::Sl] {
            let r = daha_lab_core::daha::support_rule_check(flavor, rank_n, k, 3);
            assert!(r.passed(), "{flavor} N={rank_n} k={k}: {r:#?}");
        }
    }
    report(
        6,
        "blocking criteria match swaps; weights pairwise distinct; pi-closure",
        started,
        None,
    );
}

#[test]
fn criterion_7_sl_twist_classification() {
    let started = Instant::now();
    for (rank_n, k) in [(2usize, 2usize), (3, 1), (2, 3)] {
        let n = rank_n * k;
        assert_eq!(
            pi_n_eigenvalue_exponent(rank_n, k, TwistParam { r: 0 }).unwrap(),
            0,
            "untwisted pi^N eigenvalue must be 1"
        );
        assert_eq!(twist_class_count(rank_n, k).unwrap(), k);
        for r1 in 0..n {
            for r2 in 0..n {
                let same_class =
                    twist_classify(TwistParam { r: r1 }, TwistParam { r: r2 }, rank_n, k).unwrap();
                assert_eq!(
                    same_class,
                    (r1 * rank_n) % n == (r2 * rank_n) % n,
                    "a^N = b^N criterion at r1={r1}, r2={r2}"
                );
            }
        }
    }
    report(
        7,
        "pi^N eigenvalue 1 untwisted; k classes among n twists",
        started,
        None,
    );
}

#[test]
fn criterion_8_content_bounds() {
    let started = Instant::now();
    for (rank_n, k) in [(2usize, 2usize), (3, 2), (2, 3)] {
        let r = content_bound_check(rank_n, k);
        assert!(r.passed(), "N={rank_n} k={k}: {r:#?}");
        assert!(r.tableaux > 0 && r.gammas_tried > 0);
    }
    report(
        8,
        "only gamma = 0 stabilizes any rectangle weight",
        started,
        None,
    );
}

#[test]
fn criterion_9_rmatrix_sanity() {
    let started = Instant::now();
    for rank_n in [2usize, 3] {
        let r = rmatrix_sanity(rank_n);
        assert!(r.passed(), "N={rank_n}: {r:#?}");
        assert_eq!(
            ribbon_inverse_on_v_exponent(rank_n),
            Rat::new(1, rank_n as i64) - Rat::from_integer(rank_n as i64)
        );
    }
    report(
        9,
        "Yang-Baxter and Hecke hold symbolically; ribbon exponent 1/N - N",
        started,
        Some(Duration::from_secs(10)),
    );
}
