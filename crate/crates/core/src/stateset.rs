//! Subsets of a finite universe `{0, .., n-1}` of state indices.

use std::cmp::Ordering;
use std::fmt;

use smallvec::{smallvec, SmallVec};

const WORD: usize = 64;

/// A set of state indices drawn from a fixed universe.
///
/// Two sets are equal when they have the same universe and the same members.
/// The ordering lists smaller sets first and breaks ties lexicographically on
/// the sorted members, so the eight subsets of `{0,1,2}` sort as
/// `Φ 0 1 2 01 02 12 012`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    universe: usize,
    words: SmallVec<[u64; 2]>,
}

impl StateSet {
    pub fn empty(universe: usize) -> Self {
        StateSet {
            universe,
            words: smallvec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let count = (universe - lo).min(WORD);
            *w = if count == WORD {
                !0
            } else {
                (1u64 << count) - 1
            };
        }
        s
    }

    pub fn singleton(universe: usize, index: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(index);
        s
    }

    /// Builds a set from indices. Panics if an index is outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Builds a set from the low `universe` bits of `mask`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(
            universe <= WORD || mask == 0,
            "mask form needs universe <= 64"
        );
        let mut s = Self::empty(universe);
        if universe > 0 {
            let keep = if universe >= WORD {
                !0
            } else {
                (1u64 << universe) - 1
            };
            s.words[0] = mask & keep;
        }
        s
    }

    /// The membership bitmask. Only defined for universes of at most 64 states.
    pub fn to_mask(&self) -> u64 {
        assert!(self.universe <= WORD, "mask form needs universe <= 64");
        self.words.first().copied().unwrap_or(0)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe && self.words[index / WORD] >> (index % WORD) & 1 == 1
    }

    pub fn insert(&mut self, index: usize) -> bool {
        assert!(
            index < self.universe,
            "state {index} outside universe of size {}",
            self.universe
        );
        let w = &mut self.words[index / WORD];
        let bit = 1u64 << (index % WORD);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, index: usize) -> bool {
        if index >= self.universe {
            return false;
        }
        let w = &mut self.words[index / WORD];
        let bit = 1u64 << (index % WORD);
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn check(&self, other: &StateSet) {
        assert_eq!(
            self.universe, other.universe,
            "state sets over different universes"
        );
    }

    pub fn union_with(&mut self, other: &StateSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &StateSet) -> StateSet {
        self.check(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        s
    }

    pub fn difference(&self, other: &StateSet) -> StateSet {
        self.check(other);
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        s
    }

    pub fn complement(&self) -> StateSet {
        Self::full(self.universe).difference(self)
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.check(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &StateSet) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Compact rendering: `012` for small universes, `{0,1,12}` beyond ten
    /// states, and `Φ` for the empty set.
    pub fn compact(&self) -> String {
        if self.is_empty() {
            return "Φ".to_string();
        }
        if self.universe <= 10 {
            self.iter().map(|i| char::from(b'0' + i as u8)).collect()
        } else {
            let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
            format!("{{{}}}", items.join(","))
        }
    }

    /// Parses the compact rendering produced by [`StateSet::compact`]. Also
    /// accepts `∅`, `{}` and comma or space separated lists.
    pub fn parse(universe: usize, text: &str) -> Option<StateSet> {
        let t = text.trim();
        if t == "Φ" || t == "∅" || t == "{}" || t.eq_ignore_ascii_case("phi") || t == "-" {
            return Some(StateSet::empty(universe));
        }
        let inner = t.trim_start_matches('{').trim_end_matches('}');
        let indices: Vec<usize> = if inner.contains(',') || inner.contains(' ') {
            inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|p| !p.is_empty())
                .map(|p| p.parse().ok())
                .collect::<Option<_>>()?
        } else if universe <= 10 {
            inner
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()?
        } else {
            vec![inner.parse().ok()?]
        };
        if indices.iter().any(|&i| i >= universe) {
            return None;
        }
        Some(StateSet::from_indices(universe, indices))
    }
}

impl Ord for StateSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for StateSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD + bit);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a StateSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
