//! Products of orbit closures with Schubert cell closures.
//!
//! For an orbit `S` and `w` in the Weyl group, `S^cl (BwB)^cl` is again an
//! orbit closure; it is obtained by folding the monoid action along a reduced
//! word of `w`. Everything here works on node indices of a
//! [`WeakOrderGraph`], with [`RsEngine`] as the entry point.

mod poset;
pub mod suite;

pub use poset::ClosurePoset;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::clans::{Clan, ClanError, OrbitRecord, RealFormSpec, WeakOrderGraph};
use crate::coxeter::{self, CoxeterError, SimpleIndex, WeylElement, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Clan(#[from] ClanError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("rank mismatch: element of S_{got} for U(p,q) with p+q = {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("orbit {0} is not closed and has no raising preimage")]
    NoRaisePreimage(String),
}

/// Outcome of checking the codimension-one containment for one `(S, w)`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Theorem2Error {
    #[error("precondition not met: length(w) = {length} >= codim = {codim}")]
    Precondition { length: usize, codim: usize },
    #[error("no codimension-one closure in J({clan}) contains the product {result}")]
    Violation { clan: String, result: String },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// A standard parabolic subgroup, given by its simple indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParabolicSpec {
    indices: BTreeSet<SimpleIndex>,
}

impl ParabolicSpec {
    pub fn new(indices: &[usize], rank: usize) -> Result<Self, CoxeterError> {
        let indices = indices
            .iter()
            .map(|&i| SimpleIndex::new(i, rank))
            .collect::<Result<_, _>>()?;
        Ok(ParabolicSpec { indices })
    }

    /// The Borel subgroup itself.
    pub fn borel() -> Self {
        ParabolicSpec::default()
    }

    pub fn full(rank: usize) -> Self {
        ParabolicSpec {
            indices: SimpleIndex::all(rank).collect(),
        }
    }

    pub fn indices(&self) -> &BTreeSet<SimpleIndex> {
        &self.indices
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JSetMember {
    pub orbit: OrbitRecord,
    /// A reduced word `w` with `S^cl (BwB)^cl` equal to this closure.
    pub word: String,
}

/// The codimension-one closures reachable from an orbit by Schubert products.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JSet {
    pub members: Vec<JSetMember>,
}

impl JSet {
    pub fn contains(&self, clan: &Clan) -> bool {
        self.members.iter().any(|m| &m.orbit.clan == clan)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// An orbit `S` and `w` with `length(w) = codim S - 1` whose product closure
/// still has codimension at least two.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleWitness {
    pub orbit: OrbitRecord,
    pub w: Vec<usize>,
    pub word: String,
    pub result: OrbitRecord,
    pub result_codim: usize,
}

/// One line of the complement cover report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverEntry {
    pub orbit: OrbitRecord,
    pub covered_by: Option<Clan>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub entries: Vec<CoverEntry>,
}

impl CoverReport {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(|e| e.covered_by.is_some())
    }
}

/// The weak order graph and closure order for one signature.
#[derive(Debug, Clone)]
pub struct RsEngine {
    graph: WeakOrderGraph,
    poset: ClosurePoset,
}

impl RsEngine {
    pub fn new(spec: RealFormSpec) -> Result<Self, EngineError> {
        let graph = WeakOrderGraph::new(spec);
        let poset = ClosurePoset::compute(&graph)?;
        Ok(RsEngine { graph, poset })
    }

    pub fn spec(&self) -> &RealFormSpec {
        self.graph.spec()
    }

    pub fn graph(&self) -> &WeakOrderGraph {
        &self.graph
    }

    pub fn closure_order(&self) -> &ClosurePoset {
        &self.poset
    }

    pub fn node(&self, clan: &Clan) -> Result<usize, EngineError> {
        self.spec().validate(clan)?;
        Ok(self
            .graph
            .node_of(clan)
            .expect("validated clans are graph nodes"))
    }

    pub fn record(&self, node: usize) -> &OrbitRecord {
        self.graph.node(node)
    }

    fn check_rank(&self, rank: usize) -> Result<(), EngineError> {
        if rank != self.spec().n() {
            return Err(EngineError::RankMismatch {
                expected: self.spec().n(),
                got: rank,
            });
        }
        Ok(())
    }

    /// Folds the monoid action along `word`, which need not be reduced.
    pub fn fold_word(&self, node: usize, word: &Word) -> usize {
        word.letters()
            .iter()
            .fold(node, |k, &i| self.graph.apply(k, i))
    }

    /// The orbit `S_2` with `S_1^cl (BwB)^cl = S_2^cl`.
    pub fn demazure_on_orbit(
        &self,
        clan: &Clan,
        w: &WeylElement,
    ) -> Result<OrbitRecord, EngineError> {
        self.check_rank(w.rank())?;
        let node = self.node(clan)?;
        Ok(self
            .record(self.fold_word(node, &coxeter::reduced_word(w)))
            .clone())
    }

    /// The closure `S^cl P_{a1} ... P_{ak}` for an arbitrary word.
    pub fn demazure_along(&self, clan: &Clan, word: &Word) -> Result<OrbitRecord, EngineError> {
        word.check_rank(self.spec().n())?;
        let node = self.node(clan)?;
        Ok(self.record(self.fold_word(node, word)).clone())
    }

    /// Keeps exactly the letters of `reduced_word(w)` at which the orbit rises.
    pub fn minimal_expression(&self, clan: &Clan, w: &WeylElement) -> Result<Word, EngineError> {
        self.check_rank(w.rank())?;
        self.minimal_expression_along(clan, &coxeter::reduced_word(w))
    }

    /// [`RsEngine::minimal_expression`] along a caller-supplied word.
    pub fn minimal_expression_along(&self, clan: &Clan, word: &Word) -> Result<Word, EngineError> {
        word.check_rank(self.spec().n())?;
        let mut node = self.node(clan)?;
        let mut kept = Word::empty();
        for &i in word.letters() {
            if let Some(t) = self.graph.step(node, i) {
                kept.push(i);
                node = t;
            }
        }
        Ok(kept)
    }

    /// Smallest simple index raising the orbit; `None` exactly for the open orbit.
    pub fn ascent(&self, clan: &Clan) -> Result<Option<SimpleIndex>, EngineError> {
        let node = self.node(clan)?;
        Ok(SimpleIndex::all(self.spec().n()).find(|&i| self.graph.step(node, i).is_some()))
    }

    /// `J(S)`: codimension-one orbits reachable from `S` along raising edges.
    pub fn j_set(&self, clan: &Clan) -> Result<JSet, EngineError> {
        let node = self.node(clan)?;
        Ok(self.j_set_of(node))
    }

    pub(crate) fn j_set_of(&self, node: usize) -> JSet {
        let mut members: Vec<JSetMember> = self
            .graph
            .reachable_with_words(node)
            .into_iter()
            .filter(|(k, _)| self.record(*k).codim == 1)
            .map(|(k, letters)| JSetMember {
                orbit: self.record(k).clone(),
                word: Word::new(letters).to_string(),
            })
            .collect();
        members.sort_by(|a, b| a.orbit.clan.cmp(&b.orbit.clan));
        JSet { members }
    }

    /// The dense orbit `S_1` of `S P`, i.e. the product with the longest
    /// element of the parabolic's Weyl group.
    pub fn dense_coset_in_sp(
        &self,
        clan: &Clan,
        parabolic: &ParabolicSpec,
    ) -> Result<OrbitRecord, EngineError> {
        let w0 = coxeter::longest_element(parabolic.indices(), self.spec().n())?;
        self.demazure_on_orbit(clan, &w0)
    }

    /// For `length(w) < codim S`, finds a `T_j` with `j` in `J(S)` containing
    /// `S^cl (BwB)^cl` and returns that codimension-one orbit.
    pub fn theorem2_check(
        &self,
        clan: &Clan,
        w: &WeylElement,
    ) -> Result<OrbitRecord, Theorem2Error> {
        self.check_rank(w.rank())?;
        let node = self.node(clan)?;
        let codim = self.record(node).codim;
        if w.length() >= codim {
            return Err(Theorem2Error::Precondition {
                length: w.length(),
                codim,
            });
        }
        let result = self.fold_word(node, &coxeter::reduced_word(w));
        self.j_set_of(node)
            .members
            .into_iter()
            .map(|m| m.orbit)
            .find(|t| {
                let tj = self.graph.node_of(&t.clan).expect("member is a node");
                self.poset.leq(result, tj)
            })
            .ok_or_else(|| Theorem2Error::Violation {
                clan: clan.to_string(),
                result: self.record(result).clan.to_string(),
            })
    }

    /// Every non-open orbit with the first codimension-one closure containing it.
    pub fn complement_cover_check(&self) -> CoverReport {
        let divisors: Vec<usize> = (0..self.graph.len())
            .filter(|&k| self.record(k).codim == 1)
            .collect();
        let entries = (0..self.graph.len())
            .filter(|&k| !self.record(k).is_open)
            .map(|k| CoverEntry {
                orbit: self.record(k).clone(),
                covered_by: divisors
                    .iter()
                    .find(|&&j| self.poset.leq(k, j))
                    .map(|&j| self.record(j).clan.clone()),
            })
            .collect();
        CoverReport { entries }
    }

    /// All `(S, w)` with `length(w) = codim S - 1` whose product has
    /// codimension at least two, ordered by clan then by `w`.
    pub fn find_remark3_counterexamples(&self) -> Vec<CounterexampleWitness> {
        let levels = coxeter::elements_by_length(self.spec().n());
        let mut out = Vec::new();
        for node in 0..self.graph.len() {
            let orbit = self.record(node);
            if orbit.codim == 0 {
                continue;
            }
            let Some(level) = levels.get(orbit.codim - 1) else {
                continue;
            };
            for w in level {
                let word = coxeter::reduced_word(w);
                let result = self.record(self.fold_word(node, &word));
                if result.codim >= 2 {
                    out.push(CounterexampleWitness {
                        orbit: orbit.clone(),
                        w: w.one_line().to_vec(),
                        word: word.to_string(),
                        result: result.clone(),
                        result_codim: result.codim,
                    });
                }
            }
        }
        out
    }

    /// Pairs `x < y` in the closure order such that no Schubert product
    /// carries `x` onto `y`.
    pub fn closure_pairs_without_product(&self) -> Vec<(Clan, Clan)> {
        let mut out = Vec::new();
        for x in 0..self.graph.len() {
            let reachable: BTreeSet<usize> = self
                .graph
                .reachable_with_words(x)
                .into_iter()
                .map(|(k, _)| k)
                .collect();
            for y in 0..self.graph.len() {
                if self.poset.lt(x, y) && !reachable.contains(&y) {
                    out.push((self.record(x).clan.clone(), self.record(y).clan.clone()));
                }
            }
        }
        out
    }
}

/// The closure order for a signature.
pub fn closure_order(spec: RealFormSpec) -> Result<ClosurePoset, EngineError> {
    ClosurePoset::compute(&WeakOrderGraph::new(spec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(p: usize, q: usize) -> RsEngine {
        RsEngine::new(RealFormSpec::new(p, q).unwrap()).unwrap()
    }

    fn clan(s: &str) -> Clan {
        s.parse().unwrap()
    }

    fn w(v: &[usize]) -> WeylElement {
        WeylElement::from_one_line(v.to_vec()).unwrap()
    }

    #[test]
    fn demazure_examples() {
        let e = engine(1, 1);
        let r = e.demazure_on_orbit(&clan("+-"), &w(&[2, 1])).unwrap();
        assert_eq!(r.clan, clan("11"));
        let r = e.demazure_on_orbit(&clan("+-"), &w(&[1, 2])).unwrap();
        assert_eq!(r.clan, clan("+-"));
        assert!(matches!(
            e.demazure_on_orbit(&clan("+-"), &w(&[1, 2, 3])),
            Err(EngineError::RankMismatch { .. })
        ));
        assert!(e.demazure_on_orbit(&clan("++"), &w(&[1, 2])).is_err());
    }

    #[test]
    fn minimal_expression_examples() {
        let e = engine(2, 1);
        let w0 = w(&[3, 2, 1]);
        let kept = e.minimal_expression(&clan("++-"), &w0).unwrap();
        assert_eq!(kept.len(), 2);
        assert!(e.minimal_expression(&clan("1+1"), &w0).unwrap().is_empty());
    }

    #[test]
    fn ascents() {
        assert_eq!(
            engine(1, 1).ascent(&clan("+-")).unwrap().map(|i| i.get()),
            Some(1)
        );
        let e = engine(2, 1);
        assert_eq!(e.ascent(&clan("++-")).unwrap().map(|i| i.get()), Some(2));
        assert_eq!(e.ascent(&clan("1+1")).unwrap(), None);
    }

    #[test]
    fn jsets() {
        let e = engine(1, 1);
        let j = e.j_set(&clan("+-")).unwrap();
        assert_eq!(j.len(), 1);
        assert!(j.contains(&clan("+-")));
        assert!(e.j_set(&clan("11")).unwrap().is_empty());
        let e = engine(2, 1);
        let j = e.j_set(&clan("++-")).unwrap();
        let members: Vec<String> = j.members.iter().map(|m| m.orbit.clan.to_string()).collect();
        assert_eq!(members, vec!["+11"]);
        assert_eq!(j.members[0].word, "2");
    }

    #[test]
    fn dense_cosets() {
        let e = engine(2, 1);
        let c = clan("++-");
        assert_eq!(
            e.dense_coset_in_sp(&c, &ParabolicSpec::borel())
                .unwrap()
                .clan,
            c
        );
        assert!(
            e.dense_coset_in_sp(&c, &ParabolicSpec::full(3))
                .unwrap()
                .is_open
        );
        let p1 = ParabolicSpec::new(&[1], 3).unwrap();
        assert_eq!(e.dense_coset_in_sp(&c, &p1).unwrap().clan, c);
    }

    #[test]
    fn containment_precondition_is_distinct() {
        let e = engine(2, 1);
        let err = e.theorem2_check(&clan("++-"), &w(&[3, 2, 1])).unwrap_err();
        assert!(matches!(
            err,
            Theorem2Error::Precondition {
                length: 3,
                codim: 2
            }
        ));
        let t = e.theorem2_check(&clan("++-"), &w(&[1, 2, 3])).unwrap();
        assert_eq!(t.clan, clan("+11"));
    }

    #[test]
    fn complement_cover_u11() {
        let report = engine(1, 1).complement_cover_check();
        assert!(report.holds());
        let covers: Vec<(String, String)> = report
            .entries
            .iter()
            .map(|e| {
                (
                    e.orbit.clan.to_string(),
                    e.covered_by.as_ref().unwrap().to_string(),
                )
            })
            .collect();
        assert_eq!(
            covers,
            vec![("+-".into(), "+-".into()), ("-+".into(), "-+".into())]
        );
    }

    #[test]
    fn counterexample_witnesses_u21() {
        let found = engine(2, 1).find_remark3_counterexamples();
        let listed: Vec<(String, String)> = found
            .iter()
            .map(|c| (c.orbit.clan.to_string(), c.word.clone()))
            .collect();
        assert_eq!(
            listed,
            vec![("++-".into(), "1".into()), ("-++".into(), "2".into())]
        );
        for c in &found {
            assert_eq!(c.word.split(',').count(), c.orbit.codim - 1);
            assert!(c.result_codim >= 2);
        }
    }
}
