//! Exhaustive checks of the orbit-closure statements over one signature.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::clans::WeakOrderGraph;
use crate::coxeter::{self, SimpleIndex};
use crate::report::CheckResult;

use super::{EngineError, ParabolicSpec, RsEngine, Theorem2Error};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub p: usize,
    pub q: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    /// Reduced-word independence is checked for `length(w)` up to this bound.
    pub max_word_length: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_word_length: 4 }
    }
}

pub fn run_suite(engine: &RsEngine, options: SuiteOptions) -> Result<SuiteReport, EngineError> {
    let graph = engine.graph();
    let spec = *engine.spec();
    let n = spec.n();
    let name = |k: usize| graph.node(k).clan.to_string();
    let elements = coxeter::all_elements(n);

    let mut checks = vec![
        monoid_dichotomy(graph),
        monoid_idempotence(graph),
        minimal_nodes_closed(graph),
        dimension_by_depth(graph),
    ];

    let mut ascents = CheckResult::new("ascent_exists");
    for k in 0..graph.len() {
        let ascent = engine.ascent(&graph.node(k).clan)?;
        ascents.record(ascent.is_none() == graph.node(k).is_open, || {
            format!("{}: ascent {:?}", name(k), ascent)
        });
    }
    checks.push(ascents);

    let mut independence = CheckResult::new("reduced_word_independence");
    for w in elements
        .iter()
        .filter(|w| w.length() <= options.max_word_length)
    {
        let words = coxeter::all_reduced_words(w);
        for k in 0..graph.len() {
            let results: BTreeSet<usize> = words.iter().map(|u| engine.fold_word(k, u)).collect();
            independence.record(results.len() == 1, || format!("{} with {}", name(k), w));
        }
    }
    checks.push(independence);

    let mut minimal = CheckResult::new("minimal_expression");
    let mut bound = CheckResult::new("dimension_bound");
    for w in &elements {
        let word = coxeter::reduced_word(w);
        for k in 0..graph.len() {
            let clan = &graph.node(k).clan;
            let kept = engine.minimal_expression_along(clan, &word)?;
            let result = engine.fold_word(k, &word);
            let gain = graph.node(result).dim - graph.node(k).dim;
            let w_prime = kept.product(n);
            let ok = coxeter::bruhat_leq(&w_prime, w)?
                && w_prime.length() == kept.len()
                && w_prime.length() == gain
                && engine.fold_word(k, &coxeter::reduced_word(&w_prime)) == result;
            minimal.record(ok, || format!("{} with {}: kept {}", name(k), word, kept));
            let tight = gain == w.length();
            bound.record(
                gain <= w.length() && tight == (kept.len() == word.len()),
                || format!("{} with {}", name(k), word),
            );
        }
    }
    checks.push(minimal);
    checks.push(bound);

    let mut containment = CheckResult::new("divisor_containment");
    for w in &elements {
        for k in 0..graph.len() {
            let clan = &graph.node(k).clan;
            if w.length() >= graph.node(k).codim {
                continue;
            }
            let outcome = engine.theorem2_check(clan, w);
            containment.record(outcome.is_ok(), || {
                let reason = outcome.as_ref().err().map(Theorem2Error::to_string);
                format!("{} with {}: {}", clan, w, reason.unwrap_or_default())
            });
        }
    }
    checks.push(containment);

    let mut cover = CheckResult::new("complement_cover");
    for entry in engine.complement_cover_check().entries {
        cover.record(entry.covered_by.is_some(), || {
            format!("{} under no codimension-one closure", entry.orbit.clan)
        });
    }
    checks.push(cover);

    let mut dense = CheckResult::new("dense_coset_in_parabolic");
    for mask in 0u32..(1 << (n - 1)) {
        let subset: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let parabolic = ParabolicSpec::new(&subset, n)?;
        for k in 0..graph.len() {
            let r = engine.dense_coset_in_sp(&graph.node(k).clan, &parabolic)?;
            let node = graph.node_of(&r.clan).expect("result is a node");
            let stable = parabolic
                .indices()
                .iter()
                .all(|&i| graph.step(node, i).is_none());
            dense.record(stable, || format!("{} with P{:?}", name(k), subset));
        }
    }
    checks.push(dense);

    let poset = engine.closure_order();
    let mut axioms = CheckResult::new("closure_order_axioms");
    let failures = poset.axiom_failures(graph);
    axioms.instances = graph.len() * graph.len();
    axioms.failures = failures.len();
    axioms.first_failure = failures.into_iter().next();
    checks.push(axioms);

    let mut choice = CheckResult::new("closure_order_choice_independence");
    let violations = poset.choice_violations(graph);
    let candidates = graph.raising_edges().len();
    choice.instances = candidates;
    if let Some(&(y, s, x)) = violations.first() {
        choice.failures = violations.len();
        choice.first_failure = Some(format!("{} via ({}, {})", name(y), s, name(x)));
    }
    checks.push(choice);

    Ok(SuiteReport {
        p: spec.p(),
        q: spec.q(),
        checks,
    })
}

pub fn monoid_dichotomy(graph: &WeakOrderGraph) -> CheckResult {
    let mut check = CheckResult::new("monoid_dichotomy");
    for k in 0..graph.len() {
        for i in SimpleIndex::all(graph.spec().n()) {
            let ok = match graph.step(k, i) {
                None => true,
                Some(t) => graph.node(t).dim == graph.node(k).dim + 1,
            };
            check.record(ok, || format!("{} at {}", graph.node(k).clan, i));
        }
    }
    check
}

pub fn monoid_idempotence(graph: &WeakOrderGraph) -> CheckResult {
    let mut check = CheckResult::new("monoid_idempotence");
    for (k, i, t) in graph.raising_edges() {
        check.record(graph.step(t, i).is_none(), || {
            format!("{} at {} raises twice", graph.node(k).clan, i)
        });
    }
    check
}

/// Nodes that are never the target of a raising edge are exactly the closed orbits.
pub fn minimal_nodes_closed(graph: &WeakOrderGraph) -> CheckResult {
    let mut check = CheckResult::new("minimal_nodes_closed");
    let targets: BTreeSet<usize> = graph
        .raising_edges()
        .into_iter()
        .map(|(_, _, t)| t)
        .collect();
    for k in 0..graph.len() {
        let minimal = !targets.contains(&k);
        check.record(minimal == graph.node(k).is_closed, || {
            format!("{}: minimal={minimal}", graph.node(k).clan)
        });
    }
    check
}

/// Clan dimension equals closed-orbit dimension plus raise depth.
pub fn dimension_by_depth(graph: &WeakOrderGraph) -> CheckResult {
    let mut check = CheckResult::new("dimension_by_raise_depth");
    let base = graph.spec().base_dim();
    for (k, depth) in graph.raise_depths().into_iter().enumerate() {
        check.record(depth.map(|d| d + base) == Some(graph.node(k).dim), || {
            format!("{}: depth {:?}", graph.node(k).clan, depth)
        });
    }
    check
}
