//! Full cross-validation of the clan model against one oracle run.

use serde::Serialize;

use crate::clans::RealFormSpec;
use crate::coxeter::{self, SimpleIndex};
use crate::engine::RsEngine;
use crate::report::CheckResult;

use super::{clan_representative, flag_count, match_with_clans, FiniteFieldOracle, OracleError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub p: usize,
    pub q: usize,
    pub field: u32,
    pub flags: usize,
    pub clans: usize,
    pub orbits: usize,
    pub matched: usize,
    pub mismatch: Option<String>,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none() && self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn verify(spec: RealFormSpec, q: u32) -> Result<VerifyReport, OracleError> {
    let oracle = FiniteFieldOracle::build(spec, q)?;
    let engine = RsEngine::new(spec)?;
    Ok(verify_with(&engine, &oracle))
}

/// Runs every comparison between `engine` and `oracle`, which must share a signature.
pub fn verify_with(engine: &RsEngine, oracle: &FiniteFieldOracle) -> VerifyReport {
    let spec = *engine.spec();
    let graph = engine.graph();
    let field = oracle.field();
    let n = spec.n();
    let mut checks = Vec::new();

    let mut count = CheckResult::new("flag_count_closed_form");
    let expected = flag_count(n, field.order() as u64) as usize;
    count.record(oracle.flags().len() == expected, || {
        format!("{} flags, closed form {expected}", oracle.flags().len())
    });
    checks.push(count);

    let mut orbit_count = CheckResult::new("orbit_count");
    orbit_count.record(graph.len() == oracle.orbits().len(), || {
        format!("{} clans vs {} orbits", graph.len(), oracle.orbits().len())
    });
    checks.push(orbit_count);

    let mut dichotomy = CheckResult::new("oracle_dichotomy");
    for o in 0..oracle.orbits().len() {
        for i in SimpleIndex::all(n) {
            let step = oracle.monoid_step(o, i);
            let ok = step.maximal.len() == 1 && {
                let t = step.target();
                t == o || oracle.orbit(t).dim == oracle.orbit(o).dim + 1
            };
            dichotomy.record(ok, || {
                format!("orbit {o} at {i}: maximal {:?}", step.maximal)
            });
        }
    }
    checks.push(dichotomy);

    let mut rep_independent = CheckResult::new("stabilizer_representative_independence");
    for o in 0..oracle.orbits().len() {
        let dims = oracle.member_dims(o);
        rep_independent.record(dims.len() == 1, || format!("orbit {o}: dims {dims:?}"));
    }
    checks.push(rep_independent);

    let matching = match match_with_clans(graph, oracle) {
        Ok(m) => m,
        Err(e) => {
            return VerifyReport {
                p: spec.p(),
                q: spec.q(),
                field: field.order(),
                flags: oracle.flags().len(),
                clans: graph.len(),
                orbits: oracle.orbits().len(),
                matched: 0,
                mismatch: Some(e.to_string()),
                checks,
            }
        }
    };

    let mut dims = CheckResult::new("dimension_agreement");
    let mut profiles = CheckResult::new("plus_profile_agreement");
    let mut representatives = CheckResult::new("clan_representative_agreement");
    for (clan, o) in matching.pairs() {
        let k = graph.node_of(clan).expect("matched clans are nodes");
        dims.record(graph.node(k).dim == oracle.orbit(o).dim, || {
            format!("{clan}: {} vs {}", graph.node(k).dim, oracle.orbit(o).dim)
        });
        profiles.record(clan.plus_profile() == oracle.plus_profile(o), || {
            format!(
                "{clan}: {:?} vs {:?}",
                clan.plus_profile(),
                oracle.plus_profile(o)
            )
        });
        let rep = clan_representative(clan, &spec, field)
            .ok()
            .and_then(|f| oracle.orbit_of_flag(&f));
        representatives.record(rep == Some(o), || {
            format!("{clan}: representative in {rep:?}, matched {o}")
        });
    }
    checks.push(dims);
    checks.push(profiles);
    checks.push(representatives);

    let mut edges = CheckResult::new("monoid_edge_alignment");
    edges.instances = matching.edges_checked;
    checks.push(edges);

    // Every orbit met by a set-level product lies in the closure of the dense result.
    let poset = engine.closure_order();
    let mut lower_bound = CheckResult::new("closure_order_lower_bound");
    for w in coxeter::all_elements(n) {
        let word = coxeter::reduced_word(&w);
        for k in 0..graph.len() {
            let clan = &graph.node(k).clan;
            let o = matching.orbit(clan).expect("all clans matched");
            let dense = engine.fold_word(k, &word);
            let met = oracle.product_orbits(o, &word);
            let ok = met.iter().all(|&m| {
                let mk = graph
                    .node_of(matching.clan(m).expect("all orbits matched"))
                    .expect("matched clans are nodes");
                poset.leq(mk, dense)
            }) && met.contains(
                &matching
                    .orbit(&graph.node(dense).clan)
                    .unwrap_or(usize::MAX),
            );
            lower_bound.record(ok, || format!("{clan} with {word}"));
        }
    }
    checks.push(lower_bound);

    VerifyReport {
        p: spec.p(),
        q: spec.q(),
        field: field.order(),
        flags: oracle.flags().len(),
        clans: graph.len(),
        orbits: oracle.orbits().len(),
        matched: matching.len(),
        mismatch: None,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u21_over_f3_verifies() {
        let report = verify(RealFormSpec::new(2, 1).unwrap(), 3).unwrap();
        assert_eq!(report.matched, 6);
        for c in &report.checks {
            assert!(c.passed(), "{}: {:?}", c.name, c.first_failure);
        }
        assert!(report.passed());
    }
}
