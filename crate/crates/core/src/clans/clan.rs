use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ClanError;

/// One position of a clan.
///
/// The derived order (`Plus < Minus < Pair`) agrees with byte order of the
/// text format, so sorting clans sorts their strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClanSymbol {
    Plus,
    Minus,
    Pair(u8),
}

const LABELS: &[u8] = b"123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// A clan in canonical form: pair ids are `1, 2, ...` in order of first occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clan {
    symbols: Vec<ClanSymbol>,
}

impl Clan {
    /// Validates that each pair id occurs exactly twice and canonicalizes the ids.
    pub fn new(symbols: Vec<ClanSymbol>) -> Result<Self, ClanError> {
        let mut counts: HashMap<u8, usize> = HashMap::new();
        for s in &symbols {
            if let ClanSymbol::Pair(k) = s {
                *counts.entry(*k).or_default() += 1;
            }
        }
        if let Some((&k, &c)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(ClanError::Malformed(format!(
                "pair id {k} occurs {c} times, expected 2"
            )));
        }
        if counts.len() > LABELS.len() {
            return Err(ClanError::Malformed("too many pairs".into()));
        }
        Ok(Self::canonical(symbols))
    }

    fn canonical(symbols: Vec<ClanSymbol>) -> Self {
        let mut relabel: HashMap<u8, u8> = HashMap::new();
        let symbols = symbols
            .into_iter()
            .map(|s| match s {
                ClanSymbol::Pair(k) => {
                    let next = relabel.len() as u8 + 1;
                    ClanSymbol::Pair(*relabel.entry(k).or_insert(next))
                }
                other => other,
            })
            .collect();
        Clan { symbols }
    }

    pub fn symbols(&self) -> &[ClanSymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn num_plus(&self) -> usize {
        self.symbols
            .iter()
            .filter(|s| **s == ClanSymbol::Plus)
            .count()
    }

    pub fn num_minus(&self) -> usize {
        self.symbols
            .iter()
            .filter(|s| **s == ClanSymbol::Minus)
            .count()
    }

    pub fn num_pairs(&self) -> usize {
        self.pairs().len()
    }

    /// Pairs as 0-based position pairs `(a, b)` with `a < b`, sorted by `a`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut first: HashMap<u8, usize> = HashMap::new();
        let mut out = Vec::new();
        for (pos, s) in self.symbols.iter().enumerate() {
            if let ClanSymbol::Pair(k) = s {
                if let Some(a) = first.remove(k) {
                    out.push((a, pos));
                } else {
                    first.insert(*k, pos);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Sum over pairs `(a, b)` of `b - a` minus the number of pairs `(c, d)`
    /// with `c < a < d < b`. The orbit dimension exceeds the closed-orbit
    /// dimension by exactly this amount.
    pub fn length_statistic(&self) -> usize {
        let pairs = self.pairs();
        pairs
            .iter()
            .map(|&(a, b)| {
                let crossing = pairs
                    .iter()
                    .filter(|&&(c, d)| c < a && a < d && d < b)
                    .count();
                b - a - crossing
            })
            .sum()
    }

    /// Positions `pos` and `pos + 1` (0-based) interchanged.
    pub(crate) fn swapped(&self, pos: usize) -> Clan {
        let mut symbols = self.symbols.clone();
        symbols.swap(pos, pos + 1);
        Self::canonical(symbols)
    }

    /// Positions `pos` and `pos + 1` (0-based) joined into a fresh pair,
    /// using the smallest unused id before renormalizing.
    pub(crate) fn joined(&self, pos: usize) -> Clan {
        let used: Vec<u8> = self
            .symbols
            .iter()
            .filter_map(|s| match s {
                ClanSymbol::Pair(k) => Some(*k),
                _ => None,
            })
            .collect();
        let fresh = (1..=u8::MAX).find(|k| !used.contains(k)).unwrap_or(u8::MAX);
        let mut symbols = self.symbols.clone();
        symbols[pos] = ClanSymbol::Pair(fresh);
        symbols[pos + 1] = ClanSymbol::Pair(fresh);
        Self::canonical(symbols)
    }

    /// For each prefix length `i = 1..=n`, the number of plus signs plus the
    /// number of pairs with both ends inside the prefix.
    pub fn plus_profile(&self) -> Vec<usize> {
        let mut open: Vec<u8> = Vec::new();
        let mut count = 0;
        self.symbols
            .iter()
            .map(|s| {
                match s {
                    ClanSymbol::Plus => count += 1,
                    ClanSymbol::Minus => {}
                    ClanSymbol::Pair(k) => {
                        if let Some(at) = open.iter().position(|x| x == k) {
                            open.swap_remove(at);
                            count += 1;
                        } else {
                            open.push(*k);
                        }
                    }
                }
                count
            })
            .collect()
    }
}

impl fmt::Display for Clan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .symbols
            .iter()
            .map(|s| match s {
                ClanSymbol::Plus => '+',
                ClanSymbol::Minus => '-',
                ClanSymbol::Pair(k) => LABELS
                    .get(*k as usize - 1)
                    .map(|&b| b as char)
                    .unwrap_or('?'),
            })
            .collect();
        f.write_str(&s)
    }
}

/// Accepts `+`, `-` (or the Unicode minus sign) and any ASCII digit or letter
/// as a pair label. Labels are arbitrary; the result is canonicalized.
impl FromStr for Clan {
    type Err = ClanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut ids: HashMap<char, u8> = HashMap::new();
        let mut symbols = Vec::new();
        for ch in s.trim().chars() {
            let sym = match ch {
                '+' => ClanSymbol::Plus,
                '-' | '\u{2212}' => ClanSymbol::Minus,
                c if c.is_ascii_alphanumeric() => {
                    let next = ids.len() as u8 + 1;
                    ClanSymbol::Pair(*ids.entry(c).or_insert(next))
                }
                c => {
                    return Err(ClanError::Malformed(format!(
                        "unexpected character {c:?} in {s:?}"
                    )))
                }
            };
            symbols.push(sym);
        }
        if symbols.is_empty() {
            return Err(ClanError::Malformed("empty clan".into()));
        }
        Clan::new(symbols)
    }
}

impl Serialize for Clan {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Clan {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let c: Clan = "1+1".parse().unwrap();
        assert_eq!(c.to_string(), "1+1");
        assert_eq!(c.pairs(), vec![(0, 2)]);
        let c: Clan = "b+-ab\u{2212}a".parse().unwrap();
        assert_eq!(c.to_string(), "1+-21-2");
        assert!("1+".parse::<Clan>().is_err());
        assert!("111".parse::<Clan>().is_err());
        assert!("+*-".parse::<Clan>().is_err());
        assert!("".parse::<Clan>().is_err());
    }

    #[test]
    fn length_statistic_counts_left_crossings() {
        let c: Clan = "1212".parse().unwrap();
        assert_eq!(c.length_statistic(), 3);
        let c: Clan = "1221".parse().unwrap();
        assert_eq!(c.length_statistic(), 4);
        let c: Clan = "1122".parse().unwrap();
        assert_eq!(c.length_statistic(), 2);
        let c: Clan = "++-".parse().unwrap();
        assert_eq!(c.length_statistic(), 0);
    }

    #[test]
    fn joined_uses_fresh_id() {
        let c: Clan = "1+-1".parse().unwrap();
        assert_eq!(c.joined(1).to_string(), "1221");
    }

    #[test]
    fn plus_profile_counts_closed_pairs() {
        let c: Clan = "1+1-".parse().unwrap();
        assert_eq!(c.plus_profile(), vec![0, 1, 2, 2]);
    }

    #[test]
    fn serde_uses_text_form() {
        let c: Clan = "+11".parse().unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, "\"+11\"");
        let back: Clan = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}
