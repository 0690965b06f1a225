//! The symmetric group `S_n` viewed as the Weyl group of type `A_{n-1}`.
//!
//! Elements are stored in one-line notation with values `1..=n`. Products
//! compose right to left, `(uv)(k) = u(v(k))`, so right multiplication by the
//! simple reflection `s_i` swaps the entries at positions `i` and `i + 1`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("simple index {index} is out of range for S_{rank} (expected 1..={max})", max = .rank.saturating_sub(1))]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("not a permutation of 1..={0}: {1:?}")]
    NotAPermutation(usize, Vec<usize>),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("cannot parse word {0:?}")]
    BadWord(String),
}

/// Index `i` of the simple reflection `s_i = (i, i+1)`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleIndex(usize);

impl SimpleIndex {
    pub fn new(index: usize, rank: usize) -> Result<Self, CoxeterError> {
        if index >= 1 && index < rank {
            Ok(SimpleIndex(index))
        } else {
            Err(CoxeterError::IndexOutOfRange { index, rank })
        }
    }

    /// All simple indices `1..n` for `S_n`.
    pub fn all(rank: usize) -> impl Iterator<Item = SimpleIndex> {
        (1..rank).map(SimpleIndex)
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for SimpleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            perm: (1..=rank).collect(),
        }
    }

    pub fn from_one_line(perm: Vec<usize>) -> Result<Self, CoxeterError> {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        for &v in &perm {
            if v == 0 || v > n || seen[v] {
                return Err(CoxeterError::NotAPermutation(n, perm));
            }
            seen[v] = true;
        }
        Ok(WeylElement { perm })
    }

    /// The simple reflection `s_i` in `S_n`.
    pub fn simple(i: SimpleIndex, rank: usize) -> Self {
        Self::identity(rank).right_mul_simple(i)
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.perm
    }

    /// Image of `k` (1-based).
    pub fn apply(&self, k: usize) -> usize {
        self.perm[k - 1]
    }

    pub fn length(&self) -> usize {
        let n = self.perm.len();
        let mut inv = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.perm[a] > self.perm[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `w s_i`: swaps positions `i` and `i + 1`.
    pub fn right_mul_simple(&self, i: SimpleIndex) -> Self {
        let mut perm = self.perm.clone();
        perm.swap(i.0 - 1, i.0);
        WeylElement { perm }
    }

    /// `s_i w`: swaps the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: SimpleIndex) -> Self {
        let perm = self
            .perm
            .iter()
            .map(|&v| match v {
                v if v == i.0 => i.0 + 1,
                v if v == i.0 + 1 => i.0,
                v => v,
            })
            .collect();
        WeylElement { perm }
    }

    pub fn is_right_descent(&self, i: SimpleIndex) -> bool {
        self.perm[i.0 - 1] > self.perm[i.0]
    }

    pub fn right_descents(&self) -> Vec<SimpleIndex> {
        SimpleIndex::all(self.rank())
            .filter(|&i| self.is_right_descent(i))
            .collect()
    }

    /// The ordinary product `self * other`.
    pub fn compose(&self, other: &WeylElement) -> Result<WeylElement, CoxeterError> {
        check_rank(self.rank(), other.rank())?;
        Ok(WeylElement {
            perm: other.perm.iter().map(|&k| self.perm[k - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> WeylElement {
        let mut perm = vec![0; self.rank()];
        for (k, &v) in self.perm.iter().enumerate() {
            perm[v - 1] = k + 1;
        }
        WeylElement { perm }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perm.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A finite sequence of simple indices, read left to right as `s_{a1} s_{a2} ...`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<SimpleIndex>,
}

impl Word {
    pub fn new(letters: Vec<SimpleIndex>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from raw indices, checking each against the rank.
    pub fn from_indices(indices: &[usize], rank: usize) -> Result<Self, CoxeterError> {
        indices
            .iter()
            .map(|&i| SimpleIndex::new(i, rank))
            .collect::<Result<Vec<_>, _>>()
            .map(Word::new)
    }

    pub fn letters(&self) -> &[SimpleIndex] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, i: SimpleIndex) {
        self.letters.push(i);
    }

    pub fn check_rank(&self, rank: usize) -> Result<(), CoxeterError> {
        for &i in &self.letters {
            SimpleIndex::new(i.0, rank)?;
        }
        Ok(())
    }

    /// Ordinary product of the letters in `S_rank`.
    pub fn product(&self, rank: usize) -> WeylElement {
        self.letters
            .iter()
            .fold(WeylElement::identity(rank), |w, &i| w.right_mul_simple(i))
    }

    /// 0-Hecke product of the letters: a letter is applied only when it raises length.
    pub fn demazure_product(&self, rank: usize) -> WeylElement {
        self.letters
            .iter()
            .fold(WeylElement::identity(rank), |w, &i| {
                if w.is_right_descent(i) {
                    w
                } else {
                    w.right_mul_simple(i)
                }
            })
    }

    pub fn is_reduced(&self, rank: usize) -> bool {
        self.product(rank).length() == self.len()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.letters.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses `"1,2,1"`; `""` and `"e"` give the empty word. Ranks are not checked here.
impl FromStr for Word {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() || t == "e" {
            return Ok(Word::empty());
        }
        t.split(',')
            .map(|part| match part.trim().parse::<usize>() {
                Ok(i) if i >= 1 => Ok(SimpleIndex(i)),
                _ => Err(CoxeterError::BadWord(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word::new)
    }
}

fn check_rank(a: usize, b: usize) -> Result<(), CoxeterError> {
    if a == b {
        Ok(())
    } else {
        Err(CoxeterError::RankMismatch(a, b))
    }
}

/// Number of inversions of `w`.
pub fn length(w: &WeylElement) -> usize {
    w.length()
}

/// Reduced word obtained by repeatedly stripping the smallest right descent.
pub fn reduced_word(w: &WeylElement) -> Word {
    let mut rest = w.clone();
    let mut reversed = Vec::with_capacity(w.length());
    while let Some(&i) = rest.right_descents().first() {
        reversed.push(i);
        rest = rest.right_mul_simple(i);
    }
    reversed.reverse();
    Word::new(reversed)
}

/// Every reduced word of `w`, in lexicographic order.
pub fn all_reduced_words(w: &WeylElement) -> Vec<Word> {
    fn go(w: &WeylElement, suffix: &mut Vec<SimpleIndex>, out: &mut Vec<Word>) {
        let descents = w.right_descents();
        if descents.is_empty() {
            let mut letters = suffix.clone();
            letters.reverse();
            out.push(Word::new(letters));
            return;
        }
        for i in descents {
            suffix.push(i);
            go(&w.right_mul_simple(i), suffix, out);
            suffix.pop();
        }
    }
    let mut out = Vec::new();
    go(w, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Bruhat order by the subword property on `reduced_word(w)`.
///
/// Builds the set of products of reduced subwords of a fixed reduced word of
/// `w`; that set is exactly the lower interval `[e, w]`.
pub fn bruhat_leq(u: &WeylElement, w: &WeylElement) -> Result<bool, CoxeterError> {
    check_rank(u.rank(), w.rank())?;
    if u.length() > w.length() {
        return Ok(false);
    }
    let mut reachable: HashSet<WeylElement> = HashSet::new();
    reachable.insert(WeylElement::identity(w.rank()));
    for &i in reduced_word(w).letters() {
        let extended: Vec<WeylElement> = reachable
            .iter()
            .filter(|x| !x.is_right_descent(i))
            .map(|x| x.right_mul_simple(i))
            .collect();
        reachable.extend(extended);
    }
    Ok(reachable.contains(u))
}

/// The 0-Hecke (Demazure) product `u * v`.
pub fn demazure_product(u: &WeylElement, v: &WeylElement) -> Result<WeylElement, CoxeterError> {
    check_rank(u.rank(), v.rank())?;
    Ok(reduced_word(v).letters().iter().fold(u.clone(), |w, &i| {
        if w.is_right_descent(i) {
            w
        } else {
            w.right_mul_simple(i)
        }
    }))
}

/// Longest element of the parabolic subgroup generated by `{s_i : i in subset}`.
pub fn longest_element(
    subset: &BTreeSet<SimpleIndex>,
    rank: usize,
) -> Result<WeylElement, CoxeterError> {
    for &i in subset {
        SimpleIndex::new(i.0, rank)?;
    }
    let mut w = WeylElement::identity(rank);
    while let Some(&i) = subset.iter().find(|&&i| !w.is_right_descent(i)) {
        w = w.right_mul_simple(i);
    }
    Ok(w)
}

/// All of `S_n` grouped by length, generated breadth-first from the identity.
pub fn elements_by_length(rank: usize) -> Vec<Vec<WeylElement>> {
    let mut levels: Vec<Vec<WeylElement>> = vec![vec![WeylElement::identity(rank)]];
    let mut seen: HashSet<WeylElement> = levels[0].iter().cloned().collect();
    let mut queue: VecDeque<WeylElement> = levels[0].iter().cloned().collect();
    while let Some(w) = queue.pop_front() {
        for i in SimpleIndex::all(rank) {
            if w.is_right_descent(i) {
                continue;
            }
            let next = w.right_mul_simple(i);
            if seen.insert(next.clone()) {
                let len = next.length();
                if levels.len() <= len {
                    levels.resize_with(len + 1, Vec::new);
                }
                levels[len].push(next.clone());
                queue.push_back(next);
            }
        }
    }
    for level in &mut levels {
        level.sort();
    }
    levels
}

/// All of `S_n` sorted by length, then one-line notation.
pub fn all_elements(rank: usize) -> Vec<WeylElement> {
    elements_by_length(rank).into_iter().flatten().collect()
}
