//! Clans parametrizing `GL_p x GL_q` orbits on full flags of `C^{p+q}`.
//!
//! A clan for signature `(p, q)` is a word of length `n = p + q` in the
//! symbols `+`, `-` and matched pairs, with `#plus + #pairs = p` and
//! `#minus + #pairs = q`. Orbit dimensions and the monoid action are computed
//! combinatorially here and checked against [`crate::oracle`].

mod clan;
mod graph;

pub use clan::{Clan, ClanSymbol};
pub use graph::WeakOrderGraph;

use serde::Serialize;
use thiserror::Error;

use crate::coxeter::SimpleIndex;

/// Largest `p + q` accepted by [`RealFormSpec::new`].
pub const MAX_RANK: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClanError {
    #[error("malformed clan: {0}")]
    Malformed(String),
    #[error("clan {clan} does not fit U({p},{q})")]
    WrongSignature { clan: String, p: usize, q: usize },
    #[error("invalid signature ({0},{1}): need p >= 1, q >= 1 and p + q <= {max}", max = MAX_RANK)]
    InvalidSignature(usize, usize),
}

/// Signature `(p, q)` of `U(p, q)`; `K_C = GL_p x GL_q` inside `GL_{p+q}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RealFormSpec {
    p: usize,
    q: usize,
}

impl RealFormSpec {
    pub fn new(p: usize, q: usize) -> Result<Self, ClanError> {
        if p == 0 || q == 0 || p + q > MAX_RANK {
            return Err(ClanError::InvalidSignature(p, q));
        }
        Ok(RealFormSpec { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// Dimension of the closed orbits, `dim K/B_K`.
    pub fn base_dim(&self) -> usize {
        (self.p * (self.p - 1) + self.q * (self.q - 1)) / 2
    }

    /// Dimension of the full flag variety of `GL_n`.
    pub fn flag_dim(&self) -> usize {
        self.n() * (self.n() - 1) / 2
    }

    pub fn validate(&self, clan: &Clan) -> Result<(), ClanError> {
        let pairs = clan.num_pairs();
        if clan.len() != self.n()
            || clan.num_plus() + pairs != self.p
            || clan.num_minus() + pairs != self.q
        {
            return Err(ClanError::WrongSignature {
                clan: clan.to_string(),
                p: self.p,
                q: self.q,
            });
        }
        Ok(())
    }

    /// Parses and validates a clan for this signature.
    pub fn parse_clan(&self, s: &str) -> Result<Clan, ClanError> {
        let clan: Clan = s.parse()?;
        self.validate(&clan)?;
        Ok(clan)
    }
}

impl std::fmt::Display for RealFormSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "U({},{})", self.p, self.q)
    }
}

/// An orbit together with its dimension data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OrbitRecord {
    pub clan: Clan,
    pub dim: usize,
    pub codim: usize,
    pub is_open: bool,
    pub is_closed: bool,
}

impl OrbitRecord {
    pub fn new(clan: Clan, spec: &RealFormSpec) -> Result<Self, ClanError> {
        let dim = clan_dimension(&clan, spec)?;
        let is_closed = clan.num_pairs() == 0;
        Ok(OrbitRecord {
            clan,
            dim,
            codim: spec.flag_dim() - dim,
            is_open: dim == spec.flag_dim(),
            is_closed,
        })
    }
}

/// Result of acting by one minimal parabolic `P_i` on an orbit closure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonoidOutcome {
    Fixed,
    Raised(Clan),
}

impl MonoidOutcome {
    pub fn target<'a>(&'a self, source: &'a Clan) -> &'a Clan {
        match self {
            MonoidOutcome::Fixed => source,
            MonoidOutcome::Raised(c) => c,
        }
    }

    pub fn is_raised(&self) -> bool {
        matches!(self, MonoidOutcome::Raised(_))
    }
}

/// All canonical clans for `spec`, sorted lexicographically.
pub fn enumerate_clans(spec: &RealFormSpec) -> Vec<Clan> {
    fn go(
        plus: usize,
        minus: usize,
        to_open: usize,
        open: &mut Vec<u8>,
        next_id: u8,
        prefix: &mut Vec<ClanSymbol>,
        out: &mut Vec<Clan>,
    ) {
        if plus == 0 && minus == 0 && to_open == 0 && open.is_empty() {
            out.push(Clan::new(prefix.clone()).expect("generated clan is well formed"));
            return;
        }
        if plus > 0 {
            prefix.push(ClanSymbol::Plus);
            go(plus - 1, minus, to_open, open, next_id, prefix, out);
            prefix.pop();
        }
        if minus > 0 {
            prefix.push(ClanSymbol::Minus);
            go(plus, minus - 1, to_open, open, next_id, prefix, out);
            prefix.pop();
        }
        if to_open > 0 {
            prefix.push(ClanSymbol::Pair(next_id));
            open.push(next_id);
            go(plus, minus, to_open - 1, open, next_id + 1, prefix, out);
            open.pop();
            prefix.pop();
        }
        for k in 0..open.len() {
            let id = open.remove(k);
            prefix.push(ClanSymbol::Pair(id));
            go(plus, minus, to_open, open, next_id, prefix, out);
            prefix.pop();
            open.insert(k, id);
        }
    }

    let mut out = Vec::new();
    for pairs in 0..=spec.p.min(spec.q) {
        go(
            spec.p - pairs,
            spec.q - pairs,
            pairs,
            &mut Vec::new(),
            1,
            &mut Vec::new(),
            &mut out,
        );
    }
    out.sort();
    out.dedup();
    out
}

/// Complex dimension of the orbit of `clan` in the flag variety.
pub fn clan_dimension(clan: &Clan, spec: &RealFormSpec) -> Result<usize, ClanError> {
    spec.validate(clan)?;
    Ok(spec.base_dim() + clan.length_statistic())
}

/// The dense orbit in `S * P_i`.
///
/// Opposite signs at positions `i, i+1` join into a pair. Otherwise the two
/// positions are interchanged when that raises the dimension by one.
///
/// # Panics
///
/// If `i` is out of range for the clan's length.
pub fn monoid_step(clan: &Clan, i: SimpleIndex, spec: &RealFormSpec) -> MonoidOutcome {
    let pos = i.get() - 1;
    assert!(
        pos + 1 < clan.len(),
        "simple index {i} out of range for {clan}"
    );
    debug_assert!(spec.validate(clan).is_ok(), "{clan} does not fit {spec}");
    let syms = clan.symbols();
    match (syms[pos], syms[pos + 1]) {
        (ClanSymbol::Plus, ClanSymbol::Minus) | (ClanSymbol::Minus, ClanSymbol::Plus) => {
            MonoidOutcome::Raised(clan.joined(pos))
        }
        _ => {
            let swapped = clan.swapped(pos);
            if swapped.length_statistic() == clan.length_statistic() + 1 {
                MonoidOutcome::Raised(swapped)
            } else {
                MonoidOutcome::Fixed
            }
        }
    }
}

/// The unique clan of maximal dimension.
pub fn open_clan(spec: &RealFormSpec) -> Clan {
    let top = spec.flag_dim();
    enumerate_clans(spec)
        .into_iter()
        .find(|c| spec.base_dim() + c.length_statistic() == top)
        .expect("every signature has an open orbit")
}

/// Clans without pairs, i.e. the closed orbits.
pub fn closed_clans(spec: &RealFormSpec) -> Vec<Clan> {
    enumerate_clans(spec)
        .into_iter()
        .filter(|c| c.num_pairs() == 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(p: usize, q: usize) -> RealFormSpec {
        RealFormSpec::new(p, q).unwrap()
    }

    fn clan(s: &str) -> Clan {
        s.parse().unwrap()
    }

    fn idx(i: usize, n: usize) -> SimpleIndex {
        SimpleIndex::new(i, n).unwrap()
    }

    #[test]
    fn signature_guard() {
        assert!(RealFormSpec::new(0, 1).is_err());
        assert!(RealFormSpec::new(1, 0).is_err());
        assert!(RealFormSpec::new(5, 4).is_err());
        let s = spec(2, 1);
        assert_eq!((s.n(), s.base_dim(), s.flag_dim()), (3, 1, 3));
    }

    #[test]
    fn enumeration_counts() {
        let strs: Vec<String> = enumerate_clans(&spec(1, 1))
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(strs, vec!["+-", "-+", "11"]);
        assert_eq!(enumerate_clans(&spec(2, 1)).len(), 6);
        assert_eq!(enumerate_clans(&spec(2, 2)).len(), 21);
    }

    #[test]
    fn dimensions() {
        assert_eq!(clan_dimension(&clan("++-"), &spec(2, 1)).unwrap(), 1);
        assert_eq!(clan_dimension(&clan("11"), &spec(1, 1)).unwrap(), 1);
        assert_eq!(clan_dimension(&clan("1+1"), &spec(2, 1)).unwrap(), 3);
        assert!(clan_dimension(&clan("1-1"), &spec(2, 1)).is_err());
        assert!(clan_dimension(&clan("++"), &spec(2, 1)).is_err());
    }

    #[test]
    fn monoid_examples() {
        let s11 = spec(1, 1);
        assert_eq!(
            monoid_step(&clan("+-"), idx(1, 2), &s11),
            MonoidOutcome::Raised(clan("11"))
        );
        assert_eq!(
            monoid_step(&clan("-+"), idx(1, 2), &s11),
            MonoidOutcome::Raised(clan("11"))
        );
        let s21 = spec(2, 1);
        assert_eq!(
            monoid_step(&clan("++-"), idx(1, 3), &s21),
            MonoidOutcome::Fixed
        );
        for i in 1..3 {
            assert_eq!(
                monoid_step(&clan("1+1"), idx(i, 3), &s21),
                MonoidOutcome::Fixed
            );
        }
        assert_eq!(
            monoid_step(&clan("+11"), idx(1, 3), &s21),
            MonoidOutcome::Raised(clan("1+1"))
        );
    }

    #[test]
    fn open_and_closed() {
        let s11 = spec(1, 1);
        assert_eq!(open_clan(&s11), clan("11"));
        assert_eq!(closed_clans(&s11), vec![clan("+-"), clan("-+")]);
        assert_eq!(closed_clans(&spec(2, 2)).len(), 6);
        assert_eq!(open_clan(&spec(2, 2)), clan("1221"));
    }

    #[test]
    fn orbit_record_flags() {
        let r = OrbitRecord::new(clan("11+"), &spec(2, 1)).unwrap();
        assert_eq!(
            (r.dim, r.codim, r.is_open, r.is_closed),
            (2, 1, false, false)
        );
    }
}
