use std::collections::BTreeSet;

use korbits::clans::{Clan, RealFormSpec};
use korbits::coxeter::{
    all_elements, all_reduced_words, bruhat_leq, reduced_word, SimpleIndex, WeylElement, Word,
};
use korbits::engine::suite::{run_suite, SuiteOptions};
use korbits::engine::{EngineError, ParabolicSpec, RsEngine, Theorem2Error};
use proptest::prelude::*;

fn engine(p: usize, q: usize) -> RsEngine {
    RsEngine::new(RealFormSpec::new(p, q).unwrap()).unwrap()
}

fn clan(s: &str) -> Clan {
    s.parse().unwrap()
}

fn signatures(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=max_n).flat_map(|n| (1..n).map(move |p| (p, n - p)))
}

#[test]
fn word_independence_over_all_reduced_words() {
    for (p, q) in [(2, 1), (1, 2), (2, 2), (3, 1)] {
        let e = engine(p, q);
        let n = p + q;
        for w in all_elements(n) {
            for k in 0..e.graph().len() {
                let results: BTreeSet<usize> = all_reduced_words(&w)
                    .iter()
                    .map(|word| e.fold_word(k, word))
                    .collect();
                assert_eq!(results.len(), 1, "U({p},{q}) {} with {w}", e.record(k).clan);
            }
        }
    }
}

#[test]
fn minimal_expression_properties() {
    for (p, q) in [(2, 1), (2, 2), (3, 1), (1, 3)] {
        let e = engine(p, q);
        let n = p + q;
        for w in all_elements(n) {
            for k in 0..e.graph().len() {
                let c = e.record(k).clan.clone();
                let kept = e.minimal_expression(&c, &w).unwrap();
                let w_prime = kept.product(n);
                let result = e.demazure_on_orbit(&c, &w).unwrap();
                assert!(kept.is_reduced(n));
                assert!(bruhat_leq(&w_prime, &w).unwrap());
                assert_eq!(result.dim, e.record(k).dim + w_prime.length());
                assert_eq!(e.demazure_on_orbit(&c, &w_prime).unwrap(), result);
                assert!(result.dim <= e.record(k).dim + w.length());
            }
        }
    }
}

#[test]
fn demazure_along_nonreduced_words_uses_the_demazure_product() {
    let e = engine(2, 2);
    let words = ["1,1", "1,2,1,2", "2,3,3,2,1", "3,2,1,3,2,1,1"];
    for word in words {
        let word: Word = word.parse().unwrap();
        for k in 0..e.graph().len() {
            let c = e.record(k).clan.clone();
            assert_eq!(
                e.demazure_along(&c, &word).unwrap(),
                e.demazure_on_orbit(&c, &word.demazure_product(4)).unwrap()
            );
        }
    }
}

#[test]
fn small_products_lie_under_reachable_divisors() {
    for (p, q) in signatures(5) {
        let e = engine(p, q);
        for w in all_elements(p + q) {
            for k in 0..e.graph().len() {
                let c = e.record(k).clan.clone();
                let codim = e.record(k).codim;
                match e.theorem2_check(&c, &w) {
                    Ok(t) => {
                        assert!(w.length() < codim);
                        assert_eq!(t.codim, 1);
                        assert!(e.j_set(&c).unwrap().contains(&t.clan));
                    }
                    Err(Theorem2Error::Precondition { length, codim: c2 }) => {
                        assert!(length >= c2);
                        assert_eq!(c2, codim);
                    }
                    Err(err) => panic!("U({p},{q}) {c} {w}: {err}"),
                }
            }
        }
    }
}

#[test]
fn j_set_of_a_closed_orbit() {
    let e = engine(2, 1);
    let j = e.j_set(&clan("++-")).unwrap();
    assert_eq!(j.len(), 1);
    assert_eq!(j.members[0].orbit.clan, clan("+11"));
    assert_eq!(j.members[0].word, "2");
    assert!(e.j_set(&clan("1+1")).unwrap().is_empty());
}

#[test]
fn j_set_witness_words_reach_their_members() {
    for (p, q) in [(2, 2), (3, 1), (2, 3)] {
        let e = engine(p, q);
        for k in 0..e.graph().len() {
            let c = e.record(k).clan.clone();
            for m in e.j_set(&c).unwrap().members {
                let word: Word = m.word.parse().unwrap();
                assert!(word.is_reduced(p + q));
                assert_eq!(e.demazure_along(&c, &word).unwrap().clan, m.orbit.clan);
                assert_eq!(m.orbit.dim, e.record(k).dim + word.len());
            }
        }
    }
}

#[test]
fn counterexample_witnesses_for_u21() {
    let found: Vec<(String, String)> = engine(2, 1)
        .find_remark3_counterexamples()
        .into_iter()
        .map(|c| (c.orbit.clan.to_string(), c.word))
        .collect();
    assert_eq!(
        found,
        vec![
            ("++-".to_string(), "1".to_string()),
            ("-++".to_string(), "2".to_string())
        ]
    );
}

#[test]
fn counterexample_witnesses_are_genuine() {
    for (p, q) in signatures(5) {
        let e = engine(p, q);
        for c in e.find_remark3_counterexamples() {
            let w = WeylElement::from_one_line(c.w.clone()).unwrap();
            assert_eq!(w.length() + 1, c.orbit.codim);
            assert!(c.result_codim >= 2);
            assert_eq!(e.demazure_on_orbit(&c.orbit.clan, &w).unwrap(), c.result);
        }
    }
}

#[test]
fn complement_of_open_orbit_is_covered_by_divisors() {
    for (p, q) in signatures(5) {
        let report = engine(p, q).complement_cover_check();
        assert!(report.holds(), "U({p},{q})");
        assert!(report.entries.iter().all(|e| !e.orbit.is_open));
    }
}

#[test]
fn dense_coset_is_the_top_of_the_parabolic_orbit() {
    for (p, q) in [(2, 1), (2, 2), (3, 1)] {
        let e = engine(p, q);
        let n = p + q;
        for mask in 0u32..(1 << (n - 1)) {
            let indices: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let parabolic = ParabolicSpec::new(&indices, n).unwrap();
            for k in 0..e.graph().len() {
                let c = e.record(k).clan.clone();
                // Orbits met by S P: closure of S under the letters of P.
                let mut seen = BTreeSet::from([k]);
                let mut frontier = vec![k];
                while let Some(x) = frontier.pop() {
                    for &i in &indices {
                        let i = SimpleIndex::new(i, n).unwrap();
                        if let Some(t) = e.graph().step(x, i) {
                            if seen.insert(t) {
                                frontier.push(t);
                            }
                        }
                    }
                }
                let top = seen.iter().map(|&x| e.record(x).dim).max().unwrap();
                let tops: Vec<usize> = seen
                    .iter()
                    .copied()
                    .filter(|&x| e.record(x).dim == top)
                    .collect();
                assert_eq!(tops.len(), 1);
                assert_eq!(
                    e.dense_coset_in_sp(&c, &parabolic).unwrap(),
                    *e.record(tops[0])
                );
            }
        }
    }
}

#[test]
fn closure_order_is_monotone_under_the_monoid_action() {
    for (p, q) in signatures(5) {
        let e = engine(p, q);
        let poset = e.closure_order();
        let g = e.graph();
        for x in 0..g.len() {
            for y in 0..g.len() {
                if !poset.leq(x, y) {
                    continue;
                }
                assert!(g.node(x).dim <= g.node(y).dim);
                for i in SimpleIndex::all(p + q) {
                    assert!(poset.leq(g.apply(x, i), g.apply(y, i)), "U({p},{q})");
                }
            }
        }
    }
}

#[test]
fn closure_order_for_u21() {
    let e = engine(2, 1);
    let poset = e.closure_order();
    let g = e.graph();
    let covers: BTreeSet<(String, String)> = poset
        .hasse_covers()
        .into_iter()
        .map(|(x, y)| (g.node(x).clan.to_string(), g.node(y).clan.to_string()))
        .collect();
    let expected: BTreeSet<(String, String)> = [
        ("++-", "+11"),
        ("+-+", "+11"),
        ("+-+", "11+"),
        ("-++", "11+"),
        ("+11", "1+1"),
        ("11+", "1+1"),
    ]
    .into_iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    assert_eq!(covers, expected);
}

#[test]
fn closure_order_axioms_and_choice_independence() {
    for (p, q) in signatures(5) {
        let e = engine(p, q);
        assert!(
            e.closure_order().axiom_failures(e.graph()).is_empty(),
            "U({p},{q})"
        );
        assert!(
            e.closure_order().choice_violations(e.graph()).is_empty(),
            "U({p},{q})"
        );
    }
}

#[test]
fn suite_passes_for_small_signatures() {
    for (p, q) in signatures(4) {
        let report = run_suite(&engine(p, q), SuiteOptions::default()).unwrap();
        for c in &report.checks {
            assert!(c.passed(), "U({p},{q}) {}: {:?}", c.name, c.first_failure);
            assert!(c.instances > 0, "U({p},{q}) {} ran no instances", c.name);
        }
    }
}

#[test]
fn errors_for_foreign_input() {
    let e = engine(2, 1);
    assert!(matches!(e.j_set(&clan("+-")), Err(EngineError::Clan(_))));
    assert!(matches!(
        e.demazure_on_orbit(&clan("++-"), &WeylElement::identity(4)),
        Err(EngineError::RankMismatch { .. })
    ));
    assert!(ParabolicSpec::new(&[3], 3).is_err());
}

fn element(n: usize) -> impl Strategy<Value = WeylElement> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| WeylElement::from_one_line(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fold_of_product_is_fold_of_demazure_product((u, v, k) in (element(5), element(5), 0usize..200)) {
        let e = engine(3, 2);
        let k = k % e.graph().len();
        let uv = korbits::coxeter::demazure_product(&u, &v).unwrap();
        let stepwise = e.fold_word(e.fold_word(k, &reduced_word(&u)), &reduced_word(&v));
        prop_assert_eq!(stepwise, e.fold_word(k, &reduced_word(&uv)));
    }
}
