//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its runtime (run with `--nocapture` to see them). Budgets are asserted.

use klt_core::bsdh::{boundary_valuations, schubert_discrepancies, BsWord};
use klt_core::cartan::{builtin, pair, Gcm, Weight};
use klt_core::fsplit::{
    compatible_fpure_test, dimension, fedder_fpure, flag_plucker_model, groebner, richardson_ideal,
    verify_witness, Ideal,
};
use klt_core::poly::Ring;
use klt_core::richardson::{
    boundary, chevalley_degree, degree_identity_check, discrepancy_eval, lemma46_check,
    pair_datum, Classification, DivisorKind, Rat,
};
use klt_core::weyl::{cover_reflection, WeylElement, WeylGroup};
use klt_core::{F2, F3, Q};
use std::time::{Duration, Instant};

fn criterion<T>(number: u32, summary: &str, budget: Duration, body: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = body();
    let elapsed = start.elapsed();
    println!("[PASS] criterion {number}: {summary} ({elapsed:.2?})");
    assert!(
        elapsed <= budget,
        "criterion {number} exceeded its {budget:?} budget: {elapsed:?}"
    );
    out
}

fn group(name: &str) -> WeylGroup {
    WeylGroup::new(builtin(name).unwrap())
}

fn sorted<T: Ord>(mut values: Vec<T>) -> Vec<T> {
    values.sort();
    values
}

/// All reduced words of an element, by exhaustive search over words of its
/// length.
fn reduced_words(g: &WeylGroup, w: &WeylElement) -> Vec<Vec<usize>> {
    let rank = g.rank();
    let len = w.len();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == len {
            if &g.element(&prefix).unwrap() == w {
                out.push(prefix);
            }
            continue;
        }
        for i in 1..=rank {
            let mut next = prefix.clone();
            next.push(i);
            stack.push(next);
        }
    }
    out
}

#[test]
fn criterion_1_pair_reproduction() {
    criterion(
        1,
        "pair data on the A2 interval (s1, w0): b, N, Delta, K+Delta",
        Duration::from_secs(1),
        || {
            let g = group("A2");
            let v = g.simple(1).unwrap();
            let w0 = g.element(&[1, 2, 1]).unwrap();
            let datum = pair_datum(&v, &w0, None).unwrap();
            assert_eq!(datum.components.len(), 4);
            let bs: Vec<i64> = datum.components.iter().map(|c| c.b).collect();
            assert_eq!(sorted(bs), vec![1, 1, 1, 2]);
            assert_eq!(datum.n, 3);
            assert_eq!(
                sorted(datum.delta.clone()),
                vec![
                    Rat::new(1, 3),
                    Rat::new(2, 3),
                    Rat::new(2, 3),
                    Rat::new(2, 3)
                ]
            );
            assert_eq!(
                sorted(datum.k_plus_delta.clone()),
                vec![
                    Rat::new(-2, 3),
                    Rat::new(-1, 3),
                    Rat::new(-1, 3),
                    Rat::new(-1, 3)
                ]
            );
        },
    );
}

/// Brute force Bruhat order: v <= w iff some subsequence of a reduced word
/// of w canonicalizes to v.
fn subword_oracle(g: &WeylGroup, v: &WeylElement, w: &WeylElement) -> bool {
    let word = w.word();
    let n = word.len();
    (0u32..(1 << n)).any(|mask| {
        let sub: Vec<usize> = (0..n)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| word[i])
            .collect();
        &g.element(&sub).unwrap() == v
    })
}

#[test]
fn criterion_2_bruhat_oracle_equivalence() {
    criterion(
        2,
        "lifting-property Bruhat test matches the subword oracle on W(A2) and W(B2)",
        Duration::from_secs(1),
        || {
            for (name, order) in [("A2", 6), ("B2", 8)] {
                let g = group(name);
                let elements = g.enumerate(order).unwrap();
                assert_eq!(elements.len(), order);
                let mut checked = 0;
                for v in &elements {
                    for w in &elements {
                        assert_eq!(
                            v.bruhat_leq(w).unwrap(),
                            subword_oracle(&g, v, w),
                            "{name}: {v} vs {w}"
                        );
                        checked += 1;
                    }
                }
                assert_eq!(checked, order * order);
            }
        },
    );
}

fn degree_identity_sweep(g: &WeylGroup, cap: usize) {
    let two_rho = Weight::two_rho(g.rank());
    let elements = g.enumerate(cap).unwrap();
    let mut intervals = 0;
    for v in &elements {
        for w in &elements {
            if !v.bruhat_leq(w).unwrap() || v.len() == w.len() {
                continue;
            }
            intervals += 1;
            let report = degree_identity_check(v, w).unwrap();
            assert!(report.pass, "degree identity fails on [{v}, {w}]");

            // each one-sided decomposition reproduces the same number
            let mut v_side = 0i64;
            let mut w_side = 0i64;
            for component in boundary(v, w).unwrap() {
                let (lo, hi) = component.interval(v, w);
                let degree = chevalley_degree(&lo, &hi, &two_rho).unwrap();
                let weight = pair(&two_rho, &component.cover.coroot).unwrap();
                match component.side {
                    klt_core::richardson::Side::V => v_side += weight * degree,
                    klt_core::richardson::Side::W => w_side += weight * degree,
                }
            }
            assert_eq!(v_side, report.lhs, "V-side decomposition on [{v}, {w}]");
            assert_eq!(w_side, report.lhs, "W-side decomposition on [{v}, {w}]");
        }
    }
    assert!(intervals > 0);
}

#[test]
fn criterion_3_degree_identity_sweep() {
    criterion(
        3,
        "degree identity and one-sided decompositions on every interval of W(A2), W(B2), W(A3)",
        Duration::from_secs(30),
        || {
            for name in ["A2", "B2", "A3"] {
                degree_identity_sweep(&group(name), 24);
            }
        },
    );
}

#[test]
fn criterion_4_kac_moody_generality() {
    criterion(
        4,
        "affine interval (s1, s1 s2 s1): integral multiplicities and degree identity",
        Duration::from_secs(5),
        || {
            let g = WeylGroup::new(Gcm::new(vec![vec![2, -2], vec![-2, 2]]).unwrap());
            let v = g.simple(1).unwrap();
            let w = g.element(&[1, 2, 1]).unwrap();
            assert_eq!(w.len(), 3, "the affine word 1 2 1 is reduced");
            let datum = pair_datum(&v, &w, None).unwrap();
            assert!(!datum.components.is_empty());
            assert!(datum.components.iter().all(|c| c.b >= 1));
            let bs: Vec<i64> = datum.components.iter().map(|c| c.b).collect();
            assert_eq!(sorted(bs), vec![1, 1, 3, 5]);
            let report = degree_identity_check(&v, &w).unwrap();
            assert!(report.pass);
            assert_eq!((report.lhs, report.rhs), (64, 64));
        },
    );
}

#[test]
fn criterion_5_symbolic_bookkeeping() {
    criterion(
        5,
        "chart valuations match cover predictions and the Schubert harness is KLT on W(A2)",
        Duration::from_secs(60),
        || {
            let g = group("A2");
            let rho = Weight::rho(2);
            let two_rho = Weight::two_rho(2);
            let mut words_checked = 0;
            for w in g.enumerate(6).unwrap() {
                if w.is_identity() {
                    continue;
                }
                for letters in reduced_words(&g, &w) {
                    words_checked += 1;
                    let word = BsWord::new(3, letters).unwrap();

                    // valuations along birational divisors = cover predictions
                    let table = boundary_valuations(&word, &w, &rho).unwrap();
                    for k in 1..=word.len() {
                        let complement = word.complement_element(k);
                        if complement.len() == word.len() - 1 {
                            let datum = cover_reflection(&complement, &w).unwrap();
                            assert_eq!(
                                table.values[&(k as u32)] as i64,
                                datum.rho_pairing,
                                "word {:?}, divisor {k}",
                                word.letters
                            );
                        }
                    }

                    // every boundary valuation of the top section is >= 1
                    for lambda in [&rho, &two_rho] {
                        let table = boundary_valuations(&word, &w, lambda).unwrap();
                        assert!(table.values.values().all(|&v| v >= 1));
                    }

                    // harness: stricts exactly zero, everything above -1
                    let report = schubert_discrepancies(&word, None).unwrap();
                    assert!(report.stricts_consistent);
                    for entry in &report.entries {
                        if entry.kind == DivisorKind::Strict {
                            assert_eq!(entry.coefficient, Rat::from(0));
                        }
                        assert!(entry.coefficient > Rat::from(-1));
                    }
                    assert_eq!(report.classification, Classification::Klt);
                }
            }
            assert_eq!(words_checked, 6, "W(A2) has six nonempty reduced words");
        },
    );
}

#[test]
fn criterion_6_splitting_verification() {
    criterion(
        6,
        "flag and Richardson splitting evidence in the n = 3 model at p = 2 (flag also at p = 3)",
        Duration::from_secs(300),
        || {
            // flag ideal at p = 2, witness re-verified independently
            let model2 = flag_plucker_model::<F2>(3).unwrap();
            let flag_ideal = model2.relations_ideal();
            let report = fedder_fpure(&flag_ideal).unwrap();
            assert!(report.is_split);
            let witness = report.witness.unwrap();
            assert!(verify_witness(&flag_ideal, &witness).unwrap());

            // compatibly split boundary for every comparable pair of W(A2)
            let g = group("A2");
            let elements = g.enumerate(6).unwrap();
            let mut pairs = 0;
            for v in &elements {
                for w in &elements {
                    if !v.bruhat_leq(w).unwrap() {
                        continue;
                    }
                    pairs += 1;
                    let rich = richardson_ideal(&model2, v, w).unwrap();
                    let result =
                        compatible_fpure_test(&rich.ideal.to_ideal(), &rich.boundary.to_ideal())
                            .unwrap();
                    assert!(result.pass, "compatible splitting fails on [{v}, {w}]");
                }
            }
            assert_eq!(pairs, 19, "W(A2) has 19 comparable ordered pairs");

            // flag ideal at p = 3
            let model3 = flag_plucker_model::<F3>(3).unwrap();
            let report = fedder_fpure(&model3.relations_ideal()).unwrap();
            assert!(report.is_split);
        },
    );
}

#[test]
fn criterion_7_negative_controls() {
    criterion(
        7,
        "non-split ideals are rejected and boundary-case classifications are exact",
        Duration::from_secs(5),
        || {
            let ring = Ring::new(vec!["x".into(), "y".into()]);
            let fat_line: Ideal<F2> =
                Ideal::new(ring.clone(), vec![ring.parse("x^2").unwrap()]).unwrap();
            assert!(!fedder_fpure(&fat_line).unwrap().is_split);

            let zero: Ideal<F2> = Ideal::new(ring.clone(), vec![]).unwrap();
            let fat_cross: Ideal<F2> =
                Ideal::new(ring.clone(), vec![ring.parse("x^2*y").unwrap()]).unwrap();
            assert!(!compatible_fpure_test(&zero, &fat_cross).unwrap().pass);

            let report = discrepancy_eval(3, &[], &[("Z1".into(), 0)]).unwrap();
            assert_eq!(report.classification, Classification::LogCanonical);
            assert_ne!(report.classification, Classification::Klt);

            let half = Rat::new(1, 2);
            assert!(!lemma46_check(&[half], &[half]).unwrap());
        },
    );
}

#[test]
fn criterion_8_dimension_consistency() {
    criterion(
        8,
        "Richardson quotient cones have dimension l(w) - l(v) + 2 in the n = 3 model",
        Duration::from_secs(120),
        || {
            let model = flag_plucker_model::<Q>(3).unwrap();
            let g = group("A2");
            let elements = g.enumerate(6).unwrap();
            let mut pairs = 0;
            for v in &elements {
                for w in &elements {
                    if !v.bruhat_leq(w).unwrap() {
                        continue;
                    }
                    pairs += 1;
                    let rich = richardson_ideal(&model, v, w).unwrap();
                    assert_eq!(
                        dimension(&rich.ideal),
                        w.len() - v.len() + 2,
                        "dimension mismatch on [{v}, {w}]"
                    );
                    // the boundary ideal is consistent: it contains the
                    // interval ideal and each component ideal contains it
                    for gen in &rich.ideal.gens {
                        for (_, _, component) in &rich.components {
                            assert!(component.contains(gen));
                        }
                    }
                    let _ = groebner(&rich.boundary.to_ideal());
                }
            }
            assert_eq!(pairs, 19);
        },
    );
}
