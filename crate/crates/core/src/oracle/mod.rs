//! Brute-force ground truth over a small prime field.
//!
//! Enumerates every full flag of `F_q^n`, splits the flags into orbits of
//! block-diagonal `GL_p(F_q) x GL_q(F_q)`, computes orbit dimensions from
//! stabilizer Lie algebras, and realizes `S * P_i` set-theoretically. Nothing
//! here uses the clan formulas; [`matching`] and [`verify`] compare the two.

mod field;
mod flag;
pub mod matching;
pub mod verify;

pub use field::{MatrixOverFq, PrimeField};
pub use flag::{enumerate_flags, flag_count, FlagOverFq, MAX_FLAGS, MAX_FLAG_DIM};
pub use matching::{match_with_clans, Matching, Mismatch};
pub use verify::{verify, verify_with, VerifyReport};

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::clans::{Clan, ClanError, ClanSymbol, RealFormSpec};
use crate::coxeter::{SimpleIndex, Word};
use crate::engine::EngineError;

/// Largest `p + q` for which orbits are partitioned.
pub const ORACLE_MAX_RANK: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("field order {0} is not a prime below 256")]
    NotPrime(u32),
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("vectors do not form a basis")]
    Singular,
    #[error(transparent)]
    Clan(#[from] ClanError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// One `K`-orbit of flags over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOrbit {
    pub id: usize,
    /// Indices into [`FiniteFieldOracle::flags`], ascending.
    pub members: Vec<usize>,
    pub dim: usize,
    pub representative: usize,
}

/// The orbits met by `o * P_i` and the densest of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleStep {
    pub source: usize,
    pub hit: BTreeSet<usize>,
    /// Orbits of maximal dimension in `hit`; exactly one when the step is well defined.
    pub maximal: Vec<usize>,
}

impl OracleStep {
    pub fn target(&self) -> usize {
        self.maximal[0]
    }
}

/// All flags of `F_q^{p+q}` partitioned into `GL_p x GL_q` orbits.
#[derive(Debug, Clone)]
pub struct FiniteFieldOracle {
    spec: RealFormSpec,
    field: PrimeField,
    flags: Vec<FlagOverFq>,
    index: HashMap<FlagOverFq, usize>,
    orbit_of: Vec<usize>,
    orbits: Vec<OracleOrbit>,
}

impl FiniteFieldOracle {
    pub fn build(spec: RealFormSpec, q: u32) -> Result<Self, OracleError> {
        let field = PrimeField::new(q)?;
        if spec.n() > ORACLE_MAX_RANK {
            return Err(OracleError::SizeGuard(format!(
                "oracle runs need p + q <= {ORACLE_MAX_RANK}, got {}",
                spec.n()
            )));
        }
        let flags = enumerate_flags(spec.n(), field)?;
        let index: HashMap<FlagOverFq, usize> = flags
            .iter()
            .enumerate()
            .map(|(k, f)| (f.clone(), k))
            .collect();

        let mut sets = DisjointSets::new(flags.len());
        for g in group_generators(&spec, field) {
            for (k, f) in flags.iter().enumerate() {
                sets.union(k, index[&f.transform(&g)]);
            }
        }

        let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
        for k in 0..flags.len() {
            by_root.entry(sets.find(k)).or_default().push(k);
        }
        let mut groups: Vec<Vec<usize>> = by_root.into_values().collect();
        groups.sort_by_key(|members| members[0]);

        let mut orbit_of = vec![0; flags.len()];
        let orbits = groups
            .into_iter()
            .enumerate()
            .map(|(id, members)| {
                for &k in &members {
                    orbit_of[k] = id;
                }
                let representative = members[0];
                let dim = orbit_dim(&flags[representative], &spec, field);
                OracleOrbit {
                    id,
                    members,
                    dim,
                    representative,
                }
            })
            .collect();

        Ok(FiniteFieldOracle {
            spec,
            field,
            flags,
            index,
            orbit_of,
            orbits,
        })
    }

    pub fn spec(&self) -> &RealFormSpec {
        &self.spec
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn flags(&self) -> &[FlagOverFq] {
        &self.flags
    }

    pub fn orbits(&self) -> &[OracleOrbit] {
        &self.orbits
    }

    pub fn orbit(&self, id: usize) -> &OracleOrbit {
        &self.orbits[id]
    }

    pub fn orbit_of_flag(&self, flag: &FlagOverFq) -> Option<usize> {
        self.index.get(flag).map(|&k| self.orbit_of[k])
    }

    pub fn representative(&self, id: usize) -> &FlagOverFq {
        &self.flags[self.orbits[id].representative]
    }

    /// `o * P_i`: every flag of the orbit with `F_i` replaced by each subspace
    /// between `F_{i-1}` and `F_{i+1}`, sorted into orbits.
    pub fn monoid_step(&self, orbit: usize, i: SimpleIndex) -> OracleStep {
        let mut hit = BTreeSet::new();
        for &k in &self.orbits[orbit].members {
            for moved in p_alpha_line(&self.flags[k], i, self.field) {
                hit.insert(self.orbit_of[self.index[&moved]]);
            }
        }
        let top = hit.iter().map(|&o| self.orbits[o].dim).max().unwrap_or(0);
        let maximal = hit
            .iter()
            .copied()
            .filter(|&o| self.orbits[o].dim == top)
            .collect();
        OracleStep {
            source: orbit,
            hit,
            maximal,
        }
    }

    /// Orbits met by the set `o * P_{a1} * ... * P_{ak}`.
    pub fn product_orbits(&self, orbit: usize, word: &Word) -> BTreeSet<usize> {
        let mut cache: HashMap<(usize, usize), BTreeSet<usize>> = HashMap::new();
        let mut current = BTreeSet::from([orbit]);
        for &i in word.letters() {
            let mut next = BTreeSet::new();
            for &o in &current {
                let hit = cache
                    .entry((o, i.get()))
                    .or_insert_with(|| self.monoid_step(o, i).hit);
                next.extend(hit.iter().copied());
            }
            current = next;
        }
        current
    }

    /// Stabilizer dimensions of every member flag of the orbit.
    pub fn member_dims(&self, orbit: usize) -> BTreeSet<usize> {
        self.orbits[orbit]
            .members
            .iter()
            .map(|&k| orbit_dim(&self.flags[k], &self.spec, self.field))
            .collect()
    }

    /// `dim(F_i ∩ V_+)` for `i = 1..=n` at the orbit's representative.
    pub fn plus_profile(&self, orbit: usize) -> Vec<usize> {
        self.representative(orbit)
            .intersection_profile(0..self.spec.p(), self.field)
    }

    /// Whether the representative splits as `F_i = (F_i ∩ V_+) + (F_i ∩ V_-)` for all `i`.
    pub fn is_split(&self, orbit: usize) -> bool {
        let flag = self.representative(orbit);
        let plus = flag.intersection_profile(0..self.spec.p(), self.field);
        let minus = flag.intersection_profile(self.spec.p()..self.spec.n(), self.field);
        plus.iter()
            .zip(&minus)
            .enumerate()
            .all(|(i, (a, b))| a + b == i + 1)
    }
}

/// Orbit partition of all flags for `spec` over `F_q`.
pub fn orbit_partition(spec: RealFormSpec, q: u32) -> Result<Vec<OracleOrbit>, OracleError> {
    Ok(FiniteFieldOracle::build(spec, q)?.orbits)
}

/// Dimension of `{X in gl_p + gl_q : X F_i ⊆ F_i for all i}` over `F_q`.
pub fn stabilizer_dim(flag: &FlagOverFq, spec: &RealFormSpec, field: PrimeField) -> usize {
    let n = spec.n();
    let m = flag.matrix(field);
    let m_inv = m.inverse().expect("adapted bases are invertible");
    let unknowns: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| (a < spec.p()) == (b < spec.p()))
        .collect();
    // X stabilizes the flag iff M^{-1} X M is upper triangular.
    let equations: Vec<(usize, usize)> = (0..n).flat_map(|r| (0..r).map(move |c| (r, c))).collect();
    let mut system = MatrixOverFq::zeros(field, equations.len(), unknowns.len());
    for (e, &(r, c)) in equations.iter().enumerate() {
        for (u, &(a, b)) in unknowns.iter().enumerate() {
            system[(e, u)] = field.mul(m_inv[(r, a)], m[(b, c)]);
        }
    }
    unknowns.len() - system.rank()
}

/// Orbit dimension `dim K - dim Stab`.
pub fn orbit_dim(flag: &FlagOverFq, spec: &RealFormSpec, field: PrimeField) -> usize {
    spec.p() * spec.p() + spec.q() * spec.q() - stabilizer_dim(flag, spec, field)
}

/// A flag in the orbit of `clan`: plus and minus positions take fresh basis
/// vectors of `V_+` and `V_-`; a pair takes `e + f` at its first position and
/// `e` at its second, with fresh `e` in `V_+` and `f` in `V_-`.
pub fn clan_representative(
    clan: &Clan,
    spec: &RealFormSpec,
    field: PrimeField,
) -> Result<FlagOverFq, OracleError> {
    spec.validate(clan)?;
    let n = spec.n();
    let mut next_plus = 0;
    let mut next_minus = spec.p();
    let mut pair_plus: HashMap<u8, usize> = HashMap::new();
    let mut basis = Vec::with_capacity(n);
    for s in clan.symbols() {
        let mut v = vec![0u8; n];
        match *s {
            ClanSymbol::Plus => {
                v[next_plus] = 1;
                next_plus += 1;
            }
            ClanSymbol::Minus => {
                v[next_minus] = 1;
                next_minus += 1;
            }
            ClanSymbol::Pair(k) => {
                if let Some(e) = pair_plus.remove(&k) {
                    v[e] = 1;
                } else {
                    v[next_plus] = 1;
                    v[next_minus] = 1;
                    pair_plus.insert(k, next_plus);
                    next_plus += 1;
                    next_minus += 1;
                }
            }
        }
        basis.push(v);
    }
    FlagOverFq::from_basis(field, &basis)
}

/// Elementary transvections inside each block plus one diagonal generator
/// of `F_q^*` per block.
fn group_generators(spec: &RealFormSpec, field: PrimeField) -> Vec<MatrixOverFq> {
    let n = spec.n();
    let g = field.primitive_root();
    let mut out = Vec::new();
    for block in [0..spec.p(), spec.p()..n] {
        for a in block.clone() {
            for b in block.clone() {
                if a != b {
                    let mut m = MatrixOverFq::identity(field, n);
                    m[(a, b)] = 1;
                    out.push(m);
                }
            }
        }
        if g != 1 {
            let mut m = MatrixOverFq::identity(field, n);
            m[(block.start, block.start)] = g;
            out.push(m);
        }
    }
    out
}

/// The `q + 1` flags agreeing with `flag` except possibly in `F_i`.
fn p_alpha_line(flag: &FlagOverFq, i: SimpleIndex, field: PrimeField) -> Vec<FlagOverFq> {
    let basis = flag.basis();
    let (a, b) = (i.get() - 1, i.get());
    let mut out = vec![flag.clone()];
    for t in field.elements() {
        let mut moved = basis.clone();
        moved[a] = basis[a]
            .iter()
            .zip(&basis[b])
            .map(|(&x, &y)| field.add(field.mul(t, x), y))
            .collect();
        moved[b] = basis[a].clone();
        out.push(FlagOverFq::from_basis(field, &moved).expect("still a basis"));
    }
    out
}

struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    fn new(len: usize) -> Self {
        DisjointSets {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}
