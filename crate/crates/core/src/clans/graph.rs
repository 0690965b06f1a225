use std::collections::{HashMap, VecDeque};

use crate::coxeter::SimpleIndex;

use super::{enumerate_clans, monoid_step, Clan, MonoidOutcome, OrbitRecord, RealFormSpec};

/// Every orbit for a signature together with every monoid step.
///
/// Nodes are ordered lexicographically by clan; `step(node, i)` is `None`
/// for a fixed edge and `Some(target)` for a raising edge.
#[derive(Debug, Clone)]
pub struct WeakOrderGraph {
    spec: RealFormSpec,
    nodes: Vec<OrbitRecord>,
    index: HashMap<Clan, usize>,
    steps: Vec<Vec<Option<usize>>>,
}

impl WeakOrderGraph {
    pub fn new(spec: RealFormSpec) -> Self {
        let nodes: Vec<OrbitRecord> = enumerate_clans(&spec)
            .into_iter()
            .map(|c| OrbitRecord::new(c, &spec).expect("enumerated clans fit the signature"))
            .collect();
        let index: HashMap<Clan, usize> = nodes
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clan.clone(), k))
            .collect();
        let steps = nodes
            .iter()
            .map(|r| {
                SimpleIndex::all(spec.n())
                    .map(|i| match monoid_step(&r.clan, i, &spec) {
                        MonoidOutcome::Fixed => None,
                        MonoidOutcome::Raised(t) => Some(index[&t]),
                    })
                    .collect()
            })
            .collect();
        WeakOrderGraph {
            spec,
            nodes,
            index,
            steps,
        }
    }

    pub fn spec(&self) -> &RealFormSpec {
        &self.spec
    }

    pub fn nodes(&self) -> &[OrbitRecord] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, k: usize) -> &OrbitRecord {
        &self.nodes[k]
    }

    pub fn node_of(&self, clan: &Clan) -> Option<usize> {
        self.index.get(clan).copied()
    }

    pub fn step(&self, node: usize, i: SimpleIndex) -> Option<usize> {
        self.steps[node][i.get() - 1]
    }

    /// The node reached by `i`, which is `node` itself on a fixed edge.
    pub fn apply(&self, node: usize, i: SimpleIndex) -> usize {
        self.step(node, i).unwrap_or(node)
    }

    pub fn outcome(&self, node: usize, i: SimpleIndex) -> MonoidOutcome {
        match self.step(node, i) {
            None => MonoidOutcome::Fixed,
            Some(t) => MonoidOutcome::Raised(self.nodes[t].clan.clone()),
        }
    }

    /// All `(source, index, outcome)` triples, one per node and index.
    pub fn edges(&self) -> impl Iterator<Item = (&Clan, SimpleIndex, MonoidOutcome)> + '_ {
        self.nodes.iter().enumerate().flat_map(move |(k, r)| {
            SimpleIndex::all(self.spec.n()).map(move |i| (&r.clan, i, self.outcome(k, i)))
        })
    }

    /// Raising edges as `(source, index, target)` node triples.
    pub fn raising_edges(&self) -> Vec<(usize, SimpleIndex, usize)> {
        let mut out = Vec::new();
        for k in 0..self.len() {
            for i in SimpleIndex::all(self.spec.n()) {
                if let Some(t) = self.step(k, i) {
                    out.push((k, i, t));
                }
            }
        }
        out
    }

    /// Nodes raised to `target` by `i`.
    pub fn raise_preimages(&self, target: usize, i: SimpleIndex) -> Vec<usize> {
        (0..self.len())
            .filter(|&k| self.step(k, i) == Some(target))
            .collect()
    }

    pub fn open_node(&self) -> usize {
        self.nodes
            .iter()
            .position(|r| r.is_open)
            .expect("open orbit exists")
    }

    pub fn closed_nodes(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&k| self.nodes[k].is_closed)
            .collect()
    }

    /// Nodes reachable from `start` along raising edges, including `start`,
    /// each with a word realizing it.
    pub fn reachable_with_words(&self, start: usize) -> Vec<(usize, Vec<SimpleIndex>)> {
        let mut words: Vec<Option<Vec<SimpleIndex>>> = vec![None; self.len()];
        words[start] = Some(Vec::new());
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            for i in SimpleIndex::all(self.spec.n()) {
                if let Some(t) = self.step(k, i) {
                    if words[t].is_none() {
                        let mut word = words[k].clone().unwrap_or_default();
                        word.push(i);
                        words[t] = Some(word);
                        queue.push_back(t);
                    }
                }
            }
        }
        words
            .into_iter()
            .enumerate()
            .filter_map(|(k, w)| w.map(|w| (k, w)))
            .collect()
    }

    /// Breadth-first distance from the set of closed nodes along raising edges.
    pub fn raise_depths(&self) -> Vec<Option<usize>> {
        let mut depth = vec![None; self.len()];
        let mut queue = VecDeque::new();
        for k in self.closed_nodes() {
            depth[k] = Some(0);
            queue.push_back(k);
        }
        while let Some(k) = queue.pop_front() {
            let d = depth[k].unwrap_or(0);
            for i in SimpleIndex::all(self.spec.n()) {
                if let Some(t) = self.step(k, i) {
                    if depth[t].is_none() {
                        depth[t] = Some(d + 1);
                        queue.push_back(t);
                    }
                }
            }
        }
        depth
    }
}
