//! Label-preserving isomorphism between the clan weak order graph and the
//! oracle's orbits with their set-level `P_i` steps.

use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use crate::clans::{Clan, WeakOrderGraph};
use crate::coxeter::SimpleIndex;

use super::FiniteFieldOracle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Mismatch {
    #[error("{clans} clans but {orbits} oracle orbits")]
    Count { clans: usize, orbits: usize },
    #[error(
        "closed oracle orbit {orbit} has plus profile {profile:?}, which matches no closed clan"
    )]
    ClosedProfile { orbit: usize, profile: Vec<usize> },
    #[error("{closed_clans} closed clans but {split_orbits} split oracle orbits")]
    ClosedCount {
        closed_clans: usize,
        split_orbits: usize,
    },
    #[error("edge {clan} --{index}--> clan side {clan_side}, oracle side {oracle_side}")]
    Edge {
        clan: String,
        index: usize,
        clan_side: String,
        oracle_side: String,
    },
    #[error("oracle orbit {orbit} assigned to both {first} and {second}")]
    NotInjective {
        orbit: usize,
        first: String,
        second: String,
    },
    #[error("clan {0} was never reached from a closed clan")]
    Unreached(String),
    #[error("dimension of {clan}: clan formula {clan_dim}, oracle {oracle_dim}")]
    Dimension {
        clan: String,
        clan_dim: usize,
        oracle_dim: usize,
    },
}

/// Bijection between clans and oracle orbit ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    clan_to_orbit: BTreeMap<Clan, usize>,
    orbit_to_clan: HashMap<usize, Clan>,
    /// Number of `(orbit, index)` outcomes compared.
    pub edges_checked: usize,
    /// Number of raising edges aligned.
    pub raising_edges: usize,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.clan_to_orbit.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clan_to_orbit.is_empty()
    }

    pub fn orbit(&self, clan: &Clan) -> Option<usize> {
        self.clan_to_orbit.get(clan).copied()
    }

    pub fn clan(&self, orbit: usize) -> Option<&Clan> {
        self.orbit_to_clan.get(&orbit)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Clan, usize)> {
        self.clan_to_orbit.iter().map(|(c, &o)| (c, o))
    }
}

/// Anchors closed orbits by their plus profile and propagates along raising
/// edges, requiring every clan outcome to be reproduced by the oracle.
pub fn match_with_clans(
    graph: &WeakOrderGraph,
    oracle: &FiniteFieldOracle,
) -> Result<Matching, Mismatch> {
    let n = graph.spec().n();
    if graph.len() != oracle.orbits().len() {
        return Err(Mismatch::Count {
            clans: graph.len(),
            orbits: oracle.orbits().len(),
        });
    }

    let closed_by_profile: HashMap<Vec<usize>, usize> = graph
        .closed_nodes()
        .into_iter()
        .map(|k| (graph.node(k).clan.plus_profile(), k))
        .collect();
    let split: Vec<usize> = (0..oracle.orbits().len())
        .filter(|&o| oracle.is_split(o))
        .collect();
    if split.len() != closed_by_profile.len() {
        return Err(Mismatch::ClosedCount {
            closed_clans: closed_by_profile.len(),
            split_orbits: split.len(),
        });
    }

    let mut node_to_orbit: Vec<Option<usize>> = vec![None; graph.len()];
    let mut orbit_to_node: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for o in split {
        let profile = oracle.plus_profile(o);
        let &k = closed_by_profile
            .get(&profile)
            .ok_or(Mismatch::ClosedProfile { orbit: o, profile })?;
        assign(graph, &mut node_to_orbit, &mut orbit_to_node, k, o)?;
        queue.push_back(k);
    }

    let mut edges_checked = 0;
    let mut raising_edges = 0;
    while let Some(k) = queue.pop_front() {
        let o = node_to_orbit[k].expect("queued nodes are assigned");
        for i in SimpleIndex::all(n) {
            let step = oracle.monoid_step(o, i);
            edges_checked += 1;
            let oracle_target = (step.maximal.len() == 1).then(|| step.target());
            let edge_error = |oracle_side: String| Mismatch::Edge {
                clan: graph.node(k).clan.to_string(),
                index: i.get(),
                clan_side: graph
                    .step(k, i)
                    .map(|t| format!("raised to {}", graph.node(t).clan))
                    .unwrap_or_else(|| "fixed".into()),
                oracle_side,
            };
            match (graph.step(k, i), oracle_target) {
                (_, None) => {
                    return Err(edge_error(format!(
                        "{} orbits of maximal dimension",
                        step.maximal.len()
                    )))
                }
                (None, Some(t)) if t == o => {}
                (None, Some(t)) => return Err(edge_error(format!("raised to orbit {t}"))),
                (Some(_), Some(t)) if t == o => return Err(edge_error("fixed".into())),
                (Some(target), Some(t)) => {
                    raising_edges += 1;
                    match node_to_orbit[target] {
                        Some(existing) if existing == t => {}
                        Some(existing) => {
                            return Err(edge_error(format!(
                                "raised to orbit {t}, but {} is orbit {existing}",
                                graph.node(target).clan
                            )))
                        }
                        None => {
                            assign(graph, &mut node_to_orbit, &mut orbit_to_node, target, t)?;
                            queue.push_back(target);
                        }
                    }
                }
            }
        }
    }

    let mut clan_to_orbit = BTreeMap::new();
    let mut orbit_to_clan = HashMap::new();
    for (k, o) in node_to_orbit.into_iter().enumerate() {
        let clan = graph.node(k).clan.clone();
        let o = o.ok_or_else(|| Mismatch::Unreached(clan.to_string()))?;
        let oracle_dim = oracle.orbit(o).dim;
        if oracle_dim != graph.node(k).dim {
            return Err(Mismatch::Dimension {
                clan: clan.to_string(),
                clan_dim: graph.node(k).dim,
                oracle_dim,
            });
        }
        orbit_to_clan.insert(o, clan.clone());
        clan_to_orbit.insert(clan, o);
    }
    Ok(Matching {
        clan_to_orbit,
        orbit_to_clan,
        edges_checked,
        raising_edges,
    })
}

fn assign(
    graph: &WeakOrderGraph,
    node_to_orbit: &mut [Option<usize>],
    orbit_to_node: &mut HashMap<usize, usize>,
    node: usize,
    orbit: usize,
) -> Result<(), Mismatch> {
    if let Some(&other) = orbit_to_node.get(&orbit) {
        if other != node {
            return Err(Mismatch::NotInjective {
                orbit,
                first: graph.node(other).clan.to_string(),
                second: graph.node(node).clan.to_string(),
            });
        }
    }
    orbit_to_node.insert(orbit, node);
    node_to_orbit[node] = Some(orbit);
    Ok(())
}
