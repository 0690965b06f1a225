use crate::clans::WeakOrderGraph;
use crate::coxeter::SimpleIndex;

use super::EngineError;

/// Containment order on orbit closures: `leq(x, y)` iff orbit `x` lies in
/// the closure of orbit `y`. Node indices are those of the [`WeakOrderGraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosurePoset {
    /// `below[y][x]` holds iff `x <= y`.
    below: Vec<Vec<bool>>,
}

impl ClosurePoset {
    /// Builds the order bottom-up by dimension. A closed orbit is its own
    /// closure; any other `y` is reached as `y = m_s(x)` and its closure is
    /// the union of the `s`-families over the closure of `x`.
    pub fn compute(graph: &WeakOrderGraph) -> Result<Self, EngineError> {
        Self::compute_with(graph, |candidates| candidates[0])
    }

    /// As [`ClosurePoset::compute`], with `choose` picking the `(s, x)` used for
    /// each non-closed orbit from the nonempty candidate list.
    pub fn compute_with<F>(graph: &WeakOrderGraph, mut choose: F) -> Result<Self, EngineError>
    where
        F: FnMut(&[(SimpleIndex, usize)]) -> (SimpleIndex, usize),
    {
        let n = graph.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&k| (graph.node(k).dim, k));
        let mut below = vec![Vec::new(); n];
        for y in order {
            if graph.node(y).is_closed {
                let mut own = vec![false; n];
                own[y] = true;
                below[y] = own;
                continue;
            }
            let candidates = raise_candidates(graph, y);
            if candidates.is_empty() {
                return Err(EngineError::NoRaisePreimage(graph.node(y).clan.to_string()));
            }
            let (s, x) = choose(&candidates);
            below[y] = closure_via(graph, &below, s, x);
        }
        Ok(ClosurePoset { below })
    }

    pub fn len(&self) -> usize {
        self.below.len()
    }

    pub fn is_empty(&self) -> bool {
        self.below.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.below[y][x]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// Orbits in the closure of `y`.
    pub fn closure(&self, y: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.below[y][x]).collect()
    }

    /// All related pairs `(x, y)` with `x < y`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for y in 0..self.len() {
            for x in 0..self.len() {
                if self.lt(x, y) {
                    out.push((x, y));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Covering relations `(x, y)`: `x < y` with nothing strictly between.
    pub fn hasse_covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        self.strict_pairs()
            .into_iter()
            .filter(|&(x, y)| !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)))
            .collect()
    }

    /// Recomputes the closure of every non-closed orbit through every
    /// candidate `(s, x)` and returns each candidate whose result differs.
    pub fn choice_violations(&self, graph: &WeakOrderGraph) -> Vec<(usize, SimpleIndex, usize)> {
        let mut out = Vec::new();
        for y in 0..self.len() {
            if graph.node(y).is_closed {
                continue;
            }
            for (s, x) in raise_candidates(graph, y) {
                if closure_via(graph, &self.below, s, x) != self.below[y] {
                    out.push((y, s, x));
                }
            }
        }
        out
    }

    /// Checks reflexivity, antisymmetry, transitivity, strict dimension
    /// grading, containment of the weak order and the open orbit being the
    /// maximum. Returns a description of each failed axiom.
    pub fn axiom_failures(&self, graph: &WeakOrderGraph) -> Vec<String> {
        let n = self.len();
        let mut out = Vec::new();
        let name = |k: usize| graph.node(k).clan.to_string();
        for x in 0..n {
            if !self.leq(x, x) {
                out.push(format!("not reflexive at {}", name(x)));
            }
            for y in 0..n {
                if x != y && self.leq(x, y) && self.leq(y, x) {
                    out.push(format!("not antisymmetric: {} {}", name(x), name(y)));
                }
                if self.lt(x, y) && graph.node(x).dim >= graph.node(y).dim {
                    out.push(format!("not graded: {} < {}", name(x), name(y)));
                }
                if self.leq(x, y) {
                    for z in 0..n {
                        if self.leq(y, z) && !self.leq(x, z) {
                            out.push(format!(
                                "not transitive: {} {} {}",
                                name(x),
                                name(y),
                                name(z)
                            ));
                        }
                    }
                }
            }
        }
        for (x, _, y) in graph.raising_edges() {
            if !self.lt(x, y) {
                out.push(format!("weak edge {} -> {} missing", name(x), name(y)));
            }
        }
        let open = graph.open_node();
        for x in 0..n {
            if !self.leq(x, open) {
                out.push(format!("{} not below the open orbit", name(x)));
            }
        }
        out
    }
}

fn raise_candidates(graph: &WeakOrderGraph, y: usize) -> Vec<(SimpleIndex, usize)> {
    let mut out = Vec::new();
    for s in SimpleIndex::all(graph.spec().n()) {
        for x in graph.raise_preimages(y, s) {
            out.push((s, x));
        }
    }
    out
}

/// The `s`-family of `z`: every orbit in the `K_C`-`P_s` double coset through `z`.
fn family(graph: &WeakOrderGraph, z: usize, s: SimpleIndex) -> Vec<usize> {
    let top = graph.apply(z, s);
    let mut out = graph.raise_preimages(top, s);
    out.push(top);
    out
}

fn closure_via(graph: &WeakOrderGraph, below: &[Vec<bool>], s: SimpleIndex, x: usize) -> Vec<bool> {
    let mut result = vec![false; graph.len()];
    for (z, &inside) in below[x].iter().enumerate() {
        if inside {
            for m in family(graph, z, s) {
                result[m] = true;
            }
        }
    }
    result
}
